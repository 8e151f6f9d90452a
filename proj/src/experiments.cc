/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/experiments.hh>
#include <ttpack/packing.hh>
#include <ttpack/parallel.hh>
#include <ttpack/random.hh>

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace ttpack
{
    DenseTournament::DenseTournament(int n) :
        _n(n),
        _words((n + 63) / 64)
    {
        if (n < 1 || n > max_vertices)
            throw std::out_of_range("dense tournament order must be in 1..1024, got " + std::to_string(n));
        _rows.assign(_words * n, 0);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                _rows[i * _words + j / 64] |= std::uint64_t{ 1 } << (j % 64);
    }

    DenseTournament::DenseTournament(const Tournament & t) :
        DenseTournament(t.n())
    {
        for (int i = 0 ; i < t.n() ; ++i)
            for (int j = i + 1 ; j < t.n() ; ++j)
                if (t.beats(j, i))
                    orient(j, i);
    }

    auto DenseTournament::random(int n, std::uint64_t seed) -> DenseTournament
    {
        DenseTournament result(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (! (hash64(seed, edge_index(n, i, j)) & 1))
                    result.orient(j, i);
        return result;
    }

    auto DenseTournament::orient(int u, int v) -> void
    {
        _rows[u * _words + v / 64] |= std::uint64_t{ 1 } << (v % 64);
        _rows[v * _words + u / 64] &= ~(std::uint64_t{ 1 } << (u % 64));
    }

    auto DenseTournament::to_tournament() const -> Tournament
    {
        Tournament result(_n);
        for (int i = 0 ; i < _n ; ++i)
            for (int j = i + 1 ; j < _n ; ++j)
                if (beats(j, i))
                    result.orient(j, i);
        return result;
    }

    namespace
    {
        // w keeps the set transitive iff it closes no directed triangle
        auto extends_transitively(const DenseTournament & t, std::span<const int> set, int w) -> bool
        {
            for (std::size_t i = 0 ; i < set.size() ; ++i)
                for (std::size_t j = i + 1 ; j < set.size() ; ++j) {
                    int u = set[i], v = set[j];
                    if (t.beats(v, u))
                        std::swap(u, v);
                    if (t.beats(v, w) && t.beats(w, u))
                        return false;
                }
            return true;
        }

        auto collect(const DenseTournament & t, int k, std::vector<int> & set, int next, std::vector<std::uint16_t> & out)
            -> void
        {
            if (int(set.size()) == k) {
                out.insert(out.end(), set.begin(), set.end());
                return;
            }
            for (int v = next ; v <= t.n() - (k - int(set.size())) ; ++v)
                if (extends_transitively(t, set, v)) {
                    set.push_back(v);
                    collect(t, k, set, v + 1, out);
                    set.pop_back();
                }
        }

        auto check_limits(int n, int k, int limit3, int limit4) -> void
        {
            if (k != 3 && k != 4)
                throw std::invalid_argument("only k = 3 or 4 is supported");
            int limit = k == 3 ? limit3 : limit4;
            if (n > limit)
                throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(limit)
                        + " for k = " + std::to_string(k));
        }
    }

    auto transitive_sets(const DenseTournament & t, int k) -> std::vector<std::uint16_t>
    {
        std::vector<std::uint16_t> result;
        std::vector<int> set;
        if (k <= t.n())
            collect(t, k, set, 0, result);
        return result;
    }

    auto edge_copy_expectation(int n, int k) -> Rational
    {
        std::int64_t factorial = 1;
        for (int i = 2 ; i <= k ; ++i)
            factorial *= i;
        return Rational(binomial(n - 2, k - 2) * factorial, std::int64_t{ 1 } << binomial(k, 2));
    }

    auto edge_copy_stats(const DenseTournament & t, int k) -> EdgeCopyStats
    {
        check_limits(t.n(), k, 200, 60);

        EdgeCopyStats result;
        result.n = t.n();
        result.k = k;
        result.counts.assign(edge_count(t.n()), 0);
        result.expectation = edge_copy_expectation(t.n(), k);

        auto flat = transitive_sets(t, k);
        result.copies = flat.size() / k;
        for (std::size_t c = 0 ; c < flat.size() ; c += k)
            for (int i = 0 ; i < k ; ++i)
                for (int j = i + 1 ; j < k ; ++j)
                    ++result.counts[edge_index(t.n(), flat[c + i], flat[c + j])];

        result.min = result.counts.empty() ? 0 : std::numeric_limits<std::int64_t>::max();
        for (auto c : result.counts) {
            result.count_sum += c;
            result.min = std::min(result.min, c);
            result.max = std::max(result.max, c);
        }
        if (! result.counts.empty())
            result.mean = double(result.count_sum) / result.counts.size();
        return result;
    }

    namespace
    {
        struct FreeEdges
        {
            int n;
            EdgeBits covered;

            auto free(int u, int v) const -> bool
            {
                return ! test_edge(covered, edge_index(n, std::min(u, v), std::max(u, v)));
            }

            auto mark(std::span<const int> set, bool value) -> void
            {
                for (std::size_t i = 0 ; i < set.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < set.size() ; ++j) {
                        int e = edge_index(n, std::min(set[i], set[j]), std::max(set[i], set[j]));
                        if (value)
                            set_edge(covered, e);
                        else
                            covered[e / 64] &= ~(std::uint64_t{ 1 } << (e % 64));
                    }
            }
        };

        auto grow_free(const DenseTournament & t, const FreeEdges & edges, int k, std::vector<int> & set,
                std::set<std::vector<int>> & out) -> void
        {
            if (int(set.size()) == k) {
                auto sorted = set;
                std::sort(sorted.begin(), sorted.end());
                out.insert(sorted);
                return;
            }
            for (int w = 0 ; w < t.n() ; ++w) {
                if (std::find(set.begin(), set.end(), w) != set.end())
                    continue;
                // extra vertices in increasing order beyond the seed pair
                if (set.size() > 2 && w < set.back())
                    continue;
                bool ok = true;
                for (int u : set)
                    ok = ok && edges.free(u, w);
                if (ok && extends_transitively(t, set, w)) {
                    set.push_back(w);
                    grow_free(t, edges, k, set, out);
                    set.pop_back();
                }
            }
        }

        auto share_edge(const std::vector<int> & a, const std::vector<int> & b) -> bool
        {
            int common = 0;
            for (int v : a)
                common += std::binary_search(b.begin(), b.end(), v);
            return common >= 2;
        }
    }

    auto improve_packing(const DenseTournament & t, int k, std::vector<std::vector<int>> & packing) -> void
    {
        FreeEdges edges{ t.n(), make_edge_bits(t.n()) };
        for (auto & c : packing)
            edges.mark(c, true);

        for (bool changed = true ; changed ; ) {
            changed = false;
            for (std::size_t idx = 0 ; idx < packing.size() ; ++idx) {
                auto removed = packing[idx];
                edges.mark(removed, false);

                std::set<std::vector<int>> candidates;
                for (int i = 0 ; i < k ; ++i)
                    for (int j = i + 1 ; j < k ; ++j) {
                        std::vector<int> seed{ removed[i], removed[j] };
                        grow_free(t, edges, k, seed, candidates);
                    }
                candidates.erase(removed);

                std::vector<std::vector<int>> list(candidates.begin(), candidates.end());
                bool replaced = false;
                for (std::size_t a = 0 ; a < list.size() && ! replaced ; ++a)
                    for (std::size_t b = a + 1 ; b < list.size() && ! replaced ; ++b)
                        if (! share_edge(list[a], list[b])) {
                            packing[idx] = list[a];
                            packing.push_back(list[b]);
                            edges.mark(list[a], true);
                            edges.mark(list[b], true);
                            replaced = true;
                        }

                if (replaced)
                    changed = true;
                else
                    edges.mark(removed, true);
            }
        }
    }

    auto density_trial_seeds(std::uint64_t seed, int trial) -> std::pair<std::uint64_t, std::uint64_t>
    {
        return { derive_seed(seed, 2 * std::uint64_t(trial)), derive_seed(seed, 2 * std::uint64_t(trial) + 1) };
    }

    auto density_experiment(int n, int k, int trials, std::uint64_t seed, bool improve, unsigned workers)
        -> DensityReport
    {
        check_limits(n, k, 500, 60);
        if (trials < 1)
            throw std::invalid_argument("density_experiment needs at least one trial");

        DensityReport report;
        report.n = n;
        report.k = k;
        report.seed = seed;
        report.improve = improve;
        report.reference_density = 1.0 / (k * (k - 1));
        report.trials.resize(trials);

        parallel_for(trials, workers, [&] (std::size_t trial) {
            auto & record = report.trials[trial];
            record.trial = trial;
            std::tie(record.tournament_seed, record.greedy_seed) = density_trial_seeds(seed, trial);

            auto t = DenseTournament::random(n, record.tournament_seed);
            auto flat = transitive_sets(t, k);
            auto accepted = greedy_scan(n, k, flat, record.greedy_seed);
            record.greedy_copies = accepted.size();

            if (improve) {
                std::vector<std::vector<int>> packing;
                for (auto c : accepted)
                    packing.emplace_back(flat.begin() + c * k, flat.begin() + (c + 1) * k);
                flat.clear();
                flat.shrink_to_fit();
                improve_packing(t, k, packing);
                record.copies = packing.size();
            }
            else
                record.copies = record.greedy_copies;

            record.covered_fraction = n < 2 ? 0.0 : double(record.copies * binomial(k, 2)) / edge_count(n);
        });

        double sum = 0.0;
        for (auto & r : report.trials)
            sum += r.covered_fraction;
        report.mean_covered_fraction = sum / trials;
        return report;
    }
}
