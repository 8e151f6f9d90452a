/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_BOUNDS_HH
#define TTPACK_GUARD_BOUNDS_HH 1

#include <ttpack/designs.hh>
#include <ttpack/packing.hh>
#include <ttpack/rational.hh>
#include <ttpack/tournament.hh>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ttpack
{
    /// A checked mathematical claim failed on a concrete instance.
    class VerificationFailure : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    struct Lemma22Record
    {
        std::string code;
        std::int64_t triangles = 0;
        int packing = 0;
    };

    struct Lemma22Report
    {
        std::vector<Lemma22Record> records;
        std::map<std::pair<std::int64_t, int>, int> joint;     // (t, P) -> classes

        bool few_triangles_perfect = true;      // t <= 4  implies P = 7
        bool moderate_triangles_six = true;     // t <= 11 implies P >= 6
        bool always_five = true;                // P >= 5
        int min_packing = 0;

        auto ok() const -> bool { return few_triangles_perfect && moderate_triangles_six && always_five; }
    };

    /// Exact P for every class of order 7; throws VerificationFailure naming
    /// the first class (in code order) that breaks an implication.
    auto verify_lemma22(std::span<const Tournament> classes, unsigned workers = 1) -> Lemma22Report;

    struct FMinRecord
    {
        int n = 0;
        int k = 3;
        int f_value = 0;
        std::vector<std::string> argmin;
        std::size_t classes = 0;
    };

    /// Minimum of P_k over the given classes. Classes that reach the running
    /// minimum are cut short; every class at the final minimum is re-solved
    /// to completion, so argmin is exact.
    auto f_min(int n, int k, std::span<const Tournament> classes, unsigned workers = 1) -> FMinRecord;

    struct Prop23Result
    {
        Rational exact_expectation;
        Rational lower_bound;
        std::optional<Rational> brute_force_average;   // n <= 10 only
    };

    /// Expected transitive triples in a uniformly random induced m-subset.
    auto prop23_check(const Tournament & t, int m) -> Prop23Result;

    struct LpResult
    {
        Rational minimum;
        std::array<Rational, 3> argmin;
    };

    /**
     * Minimises v1 p1 + v2 p2 + v3 p3 over p >= 0, p1 + p2 + p3 = 1,
     * c2 p2 + c3 p3 <= budget by walking the polytope's vertices exactly.
     * Ties go to the lexicographically least point.
     */
    auto lp_step(const Rational & budget, const std::array<Rational, 3> & values, const std::array<Rational, 2> & costs)
        -> LpResult;

    /// Directed triangle thresholds for the three block events.
    auto triangle_event(std::int64_t triangles) -> int;

    struct PipelineTrial
    {
        std::uint64_t seed = 0;
        int total = 0;
        std::array<int, 3> events{ };       // blocks with t <= 4, 5 <= t <= 11, t >= 12
        bool verified = false;
    };

    struct PipelineReport
    {
        int n = 0;
        int blocks = 0;
        std::uint64_t seed = 0;
        std::vector<PipelineTrial> trials;
        std::map<int, std::int64_t> block_values;   // P of a block -> count over all trials

        std::array<Rational, 3> event_frequency;    // empirical p1, p2, p3 over every block of every trial
        double mean_block_packing = 0.0;
        double mean_total = 0.0;
        int min_total = 0;

        Rational expected_block_triangles;          // exact, over a uniformly random 7-subset
        Rational block_lp_bound;                    // lp_step with that budget
        Rational asymptotic_constant = Rational(51, 392);

        auto all_verified() const -> bool;
    };

    /**
     * Per trial: permute the vertices at random, solve every block of the
     * K_7 decomposition exactly, and join the block packings into one global
     * packing, which is then checked independently.
     */
    auto theorem1_pipeline(const Tournament & t, const BlockDesign & decomposition, int trials, std::uint64_t seed,
            unsigned workers = 1) -> PipelineReport;

    /// The packing assembled for one trial; exposed for independent checks.
    auto pipeline_trial_packing(const Tournament & t, const BlockDesign & decomposition, std::uint64_t trial_seed)
        -> Packing;

    /// A Steiner triple system on the host's vertices made of transitive
    /// triples. Hosts of order 7 or 9 only.
    auto transitive_sts_search(const Tournament & t) -> std::optional<BlockDesign>;
}

#endif
