/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_EXPERIMENTS_HH
#define TTPACK_GUARD_EXPERIMENTS_HH 1

#include <ttpack/rational.hh>
#include <ttpack/tournament.hh>

#include <cstdint>
#include <vector>

namespace ttpack
{
    /**
     * Bit-matrix tournament for the random experiments, which go well past
     * the 64-vertex limit of Tournament. random() orients pairs with the same
     * keyed coin as random_tournament, so the two agree wherever both exist.
     */
    class DenseTournament
    {
        private:
            int _n;
            std::size_t _words;
            std::vector<std::uint64_t> _rows;

        public:
            static constexpr int max_vertices = 1024;

            explicit DenseTournament(int n);
            explicit DenseTournament(const Tournament & t);

            static auto random(int n, std::uint64_t seed) -> DenseTournament;

            auto n() const -> int { return _n; }

            auto beats(int u, int v) const -> bool
            {
                return (_rows[u * _words + v / 64] >> (v % 64)) & 1;
            }

            auto orient(int u, int v) -> void;

            /// Only for n <= 64.
            auto to_tournament() const -> Tournament;
    };

    /// Transitive k-sets, each as k increasing vertex ids, in lexicographic order.
    auto transitive_sets(const DenseTournament & t, int k) -> std::vector<std::uint16_t>;

    struct EdgeCopyStats
    {
        int n = 0;
        int k = 0;
        std::vector<std::int64_t> counts;   // by edge index
        std::int64_t copies = 0;
        std::int64_t count_sum = 0;
        double mean = 0.0;
        std::int64_t min = 0;
        std::int64_t max = 0;
        Rational expectation;               // C(n-2, k-2) k! / 2^C(k,2)
    };

    /// k in {3, 4}; n <= 200 for k = 3 and n <= 60 for k = 4.
    auto edge_copy_stats(const DenseTournament & t, int k) -> EdgeCopyStats;

    auto edge_copy_expectation(int n, int k) -> Rational;

    struct DensityTrial
    {
        int trial = 0;
        std::uint64_t tournament_seed = 0;
        std::uint64_t greedy_seed = 0;
        std::int64_t greedy_copies = 0;
        std::int64_t copies = 0;
        double covered_fraction = 0.0;
    };

    struct DensityReport
    {
        int n = 0;
        int k = 0;
        std::uint64_t seed = 0;
        bool improve = false;
        std::vector<DensityTrial> trials;
        double reference_density = 0.0;     // 1 / (k (k - 1))
        double mean_covered_fraction = 0.0;
    };

    /// The tournament and greedy seeds used for a given trial.
    auto density_trial_seeds(std::uint64_t seed, int trial) -> std::pair<std::uint64_t, std::uint64_t>;

    /**
     * Repeatedly takes one packed copy out and tries to put two edge-disjoint
     * copies on the freed edges, until a full pass finds nothing. Copies are
     * k increasing vertex ids; the packing only ever grows.
     */
    auto improve_packing(const DenseTournament & t, int k, std::vector<std::vector<int>> & packing) -> void;

    auto density_experiment(int n, int k, int trials, std::uint64_t seed, bool improve, unsigned workers = 1)
        -> DensityReport;
}

#endif
