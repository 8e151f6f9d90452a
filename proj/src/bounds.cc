/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/bounds.hh>
#include <ttpack/enumeration.hh>
#include <ttpack/parallel.hh>
#include <ttpack/random.hh>

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>

namespace ttpack
{
    auto verify_lemma22(std::span<const Tournament> classes, unsigned workers) -> Lemma22Report
    {
        Lemma22Report report;
        report.records.resize(classes.size());

        parallel_for(classes.size(), workers, [&] (std::size_t i) {
            auto & t = classes[i];
            if (t.n() != 7)
                throw std::invalid_argument("verify_lemma22 expects tournaments on 7 vertices");
            report.records[i] = Lemma22Record{
                canonical_form(t).to_string(), census(t).cyclic, max_packing_exact(t, 3).size() };
        });

        report.min_packing = std::numeric_limits<int>::max();
        std::optional<std::string> first_failure;
        for (auto & r : report.records) {
            ++report.joint[{ r.triangles, r.packing }];
            report.min_packing = std::min(report.min_packing, r.packing);

            std::string broken;
            if (r.triangles <= 4 && r.packing != 7) {
                report.few_triangles_perfect = false;
                broken = "t <= 4 but P != 7";
            }
            if (r.triangles <= 11 && r.packing < 6) {
                report.moderate_triangles_six = false;
                broken = "t <= 11 but P < 6";
            }
            if (r.packing < 5) {
                report.always_five = false;
                broken = "P < 5";
            }
            if (! broken.empty() && ! first_failure)
                first_failure = "class " + r.code + " (t=" + std::to_string(r.triangles) + ", P="
                    + std::to_string(r.packing) + "): " + broken;
        }

        if (first_failure)
            throw VerificationFailure(*first_failure);
        return report;
    }

    auto f_min(int n, int k, std::span<const Tournament> classes, unsigned workers) -> FMinRecord
    {
        FMinRecord result{ n, k, 0, { }, classes.size() };
        if (classes.empty())
            throw std::invalid_argument("f_min needs at least one class");

        if (k > n) {
            for (auto & t : classes)
                result.argmin.push_back(canonical_form(t).to_string());
            return result;
        }

        std::atomic<int> running_min{ std::numeric_limits<int>::max() };
        std::vector<int> value(classes.size());
        std::vector<char> exact(classes.size());

        parallel_for(classes.size(), workers, [&] (std::size_t i) {
            SolveOptions options;
            options.stop_at = running_min.load();
            auto p = max_packing_exact(classes[i], k, options);
            value[i] = p.size();
            exact[i] = p.optimal;
            if (p.optimal) {
                int current = running_min.load();
                while (p.size() < current && ! running_min.compare_exchange_weak(current, p.size()))
                    ;
            }
        });

        result.f_value = running_min.load();
        for (std::size_t i = 0 ; i < classes.size() ; ++i) {
            if (value[i] < result.f_value)
                throw std::logic_error("class value below the running minimum");
            if (value[i] != result.f_value)
                continue;
            if (! exact[i] && max_packing_exact(classes[i], k).size() != result.f_value)
                continue;
            result.argmin.push_back(canonical_form(classes[i]).to_string());
        }
        return result;
    }

    auto prop23_check(const Tournament & t, int m) -> Prop23Result
    {
        int n = t.n();
        if (m < 3 || m > n)
            throw std::invalid_argument("prop23_check needs 3 <= m <= n");

        Prop23Result result;
        auto a = census(t).transitive;
        result.exact_expectation = Rational(a) * Rational(std::int64_t{ m } * (m - 1) * (m - 2),
                std::int64_t{ n } * (n - 1) * (n - 2));
        result.lower_bound = Rational(3, 4) * Rational(n - 3, n - 2) * Rational(binomial(m, 3));

        if (result.exact_expectation < result.lower_bound)
            throw VerificationFailure("expected transitive triples " + to_string(result.exact_expectation)
                    + " below the bound " + to_string(result.lower_bound));

        if (n <= 10) {
            std::int64_t total = 0, subsets = 0;
            for (VertexSet s = 0 ; s < (VertexSet{ 1 } << n) ; ++s)
                if (std::popcount(s) == m) {
                    total += census(induced(t, s)).transitive;
                    ++subsets;
                }
            result.brute_force_average = Rational(total, subsets);
            if (*result.brute_force_average != result.exact_expectation)
                throw VerificationFailure("closed form " + to_string(result.exact_expectation)
                        + " differs from the subset average " + to_string(*result.brute_force_average));
        }
        return result;
    }

    auto lp_step(const Rational & budget, const std::array<Rational, 3> & values, const std::array<Rational, 2> & costs)
        -> LpResult
    {
        if (! (values[0] >= values[1] && values[1] >= values[2] && values[2] >= 0))
            throw std::invalid_argument("lp_step needs v1 >= v2 >= v3 >= 0");
        if (costs[0] <= 0 || costs[1] <= 0)
            throw std::invalid_argument("lp_step needs positive costs");

        // rows a . p = b; the first is the equality, the others may be tight
        using Row = std::pair<std::array<Rational, 3>, Rational>;
        const Row simplex{ { 1, 1, 1 }, 1 };
        const std::array<Row, 4> faces{ {
            { { 1, 0, 0 }, 0 },
            { { 0, 1, 0 }, 0 },
            { { 0, 0, 1 }, 0 },
            { { 0, costs[0], costs[1] }, budget } } };

        auto det3 = [] (const std::array<std::array<Rational, 3>, 3> & a) {
            return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        };

        std::optional<LpResult> best;
        for (std::size_t f = 0 ; f < faces.size() ; ++f)
            for (std::size_t g = f + 1 ; g < faces.size() ; ++g) {
                std::array<Row, 3> system{ simplex, faces[f], faces[g] };
                std::array<std::array<Rational, 3>, 3> a;
                for (int r = 0 ; r < 3 ; ++r)
                    a[r] = system[r].first;
                auto d = det3(a);
                if (d == 0)
                    continue;

                std::array<Rational, 3> p;
                for (int c = 0 ; c < 3 ; ++c) {
                    auto replaced = a;
                    for (int r = 0 ; r < 3 ; ++r)
                        replaced[r][c] = system[r].second;
                    p[c] = det3(replaced) / d;
                }

                if (p[0] < 0 || p[1] < 0 || p[2] < 0 || costs[0] * p[1] + costs[1] * p[2] > budget)
                    continue;

                Rational objective = values[0] * p[0] + values[1] * p[1] + values[2] * p[2];
                if (! best || objective < best->minimum || (objective == best->minimum && p < best->argmin))
                    best = LpResult{ objective, p };
            }

        if (! best)
            throw std::runtime_error("lp_step: empty feasible region");
        return *best;
    }

    auto triangle_event(std::int64_t triangles) -> int
    {
        if (triangles <= 4)
            return 0;
        if (triangles <= 11)
            return 1;
        return 2;
    }

    auto PipelineReport::all_verified() const -> bool
    {
        return std::all_of(trials.begin(), trials.end(), [] (const PipelineTrial & t) { return t.verified; });
    }

    namespace
    {
        auto check_decomposition(const Tournament & t, const BlockDesign & d) -> void
        {
            if (d.point_count != t.n())
                throw std::invalid_argument("decomposition has " + std::to_string(d.point_count)
                        + " points but the tournament has " + std::to_string(t.n()) + " vertices");
            if (d.block_size != 7 || ! verify_design(d))
                throw std::invalid_argument("decomposition is not a K_7 decomposition");
        }

        struct BlockOutcome
        {
            std::vector<VertexSet> copies;
            std::int64_t triangles;
        };

        auto solve_block(const Tournament & t, const std::vector<int> & block, std::span<const int> permutation)
            -> BlockOutcome
        {
            std::vector<int> image;
            for (int p : block)
                image.push_back(permutation[p]);
            std::sort(image.begin(), image.end());

            auto sub = induced(t, std::span<const int>(image));
            auto packing = max_packing_exact(sub, 3);
            if (! packing.optimal)
                throw std::logic_error("block solve did not finish");

            BlockOutcome result{ { }, census(sub).cyclic };
            for (auto local : packing.copies) {
                VertexSet global = 0;
                for (auto s = local ; s ; s &= s - 1)
                    global |= VertexSet{ 1 } << image[std::countr_zero(s)];
                result.copies.push_back(global);
            }
            return result;
        }

        auto assemble(const Tournament & t, int k, std::vector<VertexSet> copies) -> Packing
        {
            Packing result;
            result.n = t.n();
            result.k = k;
            result.covered_edges = make_edge_bits(t.n());
            std::sort(copies.begin(), copies.end());
            for (auto c : copies)
                for (auto s = c ; s ; s &= s - 1) {
                    int u = std::countr_zero(s);
                    for (auto r = s & (s - 1) ; r ; r &= r - 1)
                        set_edge(result.covered_edges, edge_index(t.n(), u, std::countr_zero(r)));
                }
            result.copies = std::move(copies);
            return result;
        }
    }

    auto pipeline_trial_packing(const Tournament & t, const BlockDesign & decomposition, std::uint64_t trial_seed)
        -> Packing
    {
        check_decomposition(t, decomposition);
        auto permutation = random_permutation(t.n(), trial_seed);
        std::vector<VertexSet> copies;
        for (auto & block : decomposition.blocks) {
            auto outcome = solve_block(t, block, permutation);
            copies.insert(copies.end(), outcome.copies.begin(), outcome.copies.end());
        }
        return assemble(t, 3, std::move(copies));
    }

    auto theorem1_pipeline(const Tournament & t, const BlockDesign & decomposition, int trials, std::uint64_t seed,
            unsigned workers) -> PipelineReport
    {
        check_decomposition(t, decomposition);
        if (trials < 1)
            throw std::invalid_argument("pipeline needs at least one trial");

        PipelineReport report;
        report.n = t.n();
        report.blocks = decomposition.blocks.size();
        report.seed = seed;
        report.trials.resize(trials);

        std::vector<std::vector<int>> block_values(trials);
        parallel_for(trials, workers, [&] (std::size_t trial) {
            auto & record = report.trials[trial];
            record.seed = derive_seed(seed, trial);
            auto permutation = random_permutation(t.n(), record.seed);

            std::vector<VertexSet> copies;
            for (auto & block : decomposition.blocks) {
                auto outcome = solve_block(t, block, permutation);
                record.total += outcome.copies.size();
                ++record.events[triangle_event(outcome.triangles)];
                block_values[trial].push_back(outcome.copies.size());
                copies.insert(copies.end(), outcome.copies.begin(), outcome.copies.end());
            }
            record.verified = verify_packing(t, assemble(t, 3, std::move(copies)));
        });

        std::array<std::int64_t, 3> events{ };
        std::int64_t block_sum = 0, total_sum = 0;
        report.min_total = std::numeric_limits<int>::max();
        for (int trial = 0 ; trial < trials ; ++trial) {
            for (int v : block_values[trial]) {
                ++report.block_values[v];
                block_sum += v;
            }
            for (int e = 0 ; e < 3 ; ++e)
                events[e] += report.trials[trial].events[e];
            total_sum += report.trials[trial].total;
            report.min_total = std::min(report.min_total, report.trials[trial].total);
        }

        std::int64_t block_count = std::int64_t{ trials } * report.blocks;
        for (int e = 0 ; e < 3 ; ++e)
            report.event_frequency[e] = Rational(events[e], block_count);
        report.mean_block_packing = double(block_sum) / block_count;
        report.mean_total = double(total_sum) / trials;

        // a uniformly random 7-subset sees each triple with probability C(7,3)/C(n,3)
        report.expected_block_triangles = Rational(35 * census(t).cyclic, binomial(t.n(), 3));
        report.block_lp_bound = lp_step(report.expected_block_triangles, { 7, 6, 5 }, { 5, 12 }).minimum;
        return report;
    }

    auto transitive_sts_search(const Tournament & t) -> std::optional<BlockDesign>
    {
        const std::vector<BlockDesign> * candidates = nullptr;
        if (t.n() == 7)
            candidates = &all_sts7();
        else if (t.n() == 9)
            candidates = &all_sts9();
        else
            throw std::invalid_argument("transitive_sts_search supports n = 7 or 9, got " + std::to_string(t.n()));

        for (auto & d : *candidates)
            if (sts_triangle_count(t, d) == 0)
                return d;
        return std::nullopt;
    }
}
