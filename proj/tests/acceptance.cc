/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// One PASS/FAIL line per acceptance criterion. Expected values are either
// literal constants or recomputed here by the brute-force oracles.

#include <ttpack/bounds.hh>
#include <ttpack/constructions.hh>
#include <ttpack/designs.hh>
#include <ttpack/enumeration.hh>
#include <ttpack/experiments.hh>
#include <ttpack/packing.hh>
#include <ttpack/random.hh>

#include "oracles.hh"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace ttpack;

namespace
{
    using Clock = std::chrono::steady_clock;

    // pinned limits and tolerances
    constexpr double lemma_seconds = 5 * 60;
    constexpr double fmin_small_seconds = 2 * 60;
    constexpr double fmin_eight_seconds = 2 * 60 * 60;
    constexpr unsigned fmin_eight_workers = 8;
    constexpr double pipeline_seconds = 30 * 60;
    constexpr double turan_seconds = 10 * 60;
    constexpr double edge_mean_relative_tolerance = 0.05;
    constexpr double edge_mean_target = 43.5;

    constexpr std::uint64_t master_seed = 24301;

    auto seconds_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    // n(n-1)/6 - n/3 = n(n-3)/6, rounded up
    auto ceil_bound(int n) -> std::int64_t
    {
        std::int64_t num = std::int64_t{ n } * (n - 3);
        return num <= 0 ? 0 : (num + 5) / 6;
    }

    // independent certificate check: members transitive, pairwise edge-disjoint
    auto oracle_packing_ok(const Tournament & t, const Packing & p) -> bool
    {
        std::set<std::pair<int, int>> used;
        for (auto c : p.copies) {
            std::vector<int> vs;
            for (int v = 0 ; v < t.n() ; ++v)
                if ((c >> v) & 1)
                    vs.push_back(v);
            if (int(vs.size()) != p.k || ! oracle::transitive(t, vs))
                return false;
            for (std::size_t i = 0 ; i < vs.size() ; ++i)
                for (std::size_t j = i + 1 ; j < vs.size() ; ++j)
                    if (! used.emplace(vs[i], vs[j]).second)
                        return false;
        }
        return true;
    }

    int failures = 0;

    auto report(int number, bool pass, const std::string & detail) -> void
    {
        std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", number, detail.c_str());
        std::fflush(stdout);
        failures += ! pass;
    }

    auto guarded(int number, const std::function<void ()> & body) -> void
    {
        try {
            body();
        }
        catch (const std::exception & e) {
            report(number, false, std::string("exception: ") + e.what());
        }
    }

    auto classes7() -> const std::vector<Tournament> &
    {
        static auto classes = enumerate_nonisomorphic(7, 1);
        return classes;
    }
}

auto main() -> int
{
    guarded(1, [] {
        auto start = Clock::now();
        auto classes = enumerate_nonisomorphic(7, 1);
        auto r = verify_lemma22(classes, 1);
        double elapsed = seconds_since(start);

        // recheck the three implications from the oracle's own counts
        int exceptions = 0;
        for (auto & t : classes) {
            auto tri = oracle::cyclic_triples(t);
            auto p = oracle::max_packing(t, 3);
            exceptions += (tri <= 4 && p != 7) || (tri <= 11 && p < 6) || p < 5;
        }

        std::ostringstream s;
        s << classes.size() << " classes, report ok=" << r.ok() << ", oracle exceptions=" << exceptions
            << ", min P=" << r.min_packing << ", " << elapsed << "s single-threaded (limit " << lemma_seconds << "s)";
        report(1, classes.size() == 456 && r.ok() && exceptions == 0 && elapsed < lemma_seconds, s.str());
    });

    guarded(2, [] {
        const std::array<int, 6> expected{ 0, 1, 2, 3, 5, 7 };
        bool ok = true;
        std::ostringstream s;
        s << "f(3..8) =";

        auto start = Clock::now();
        for (int n = 3 ; n <= 7 ; ++n) {
            auto r = f_min(n, 3, enumerate_nonisomorphic(n, 1), 1);
            s << " " << r.f_value;
            ok = ok && r.f_value == expected[n - 3] && r.f_value == ceil_bound(n);
        }
        double small = seconds_since(start);

        start = Clock::now();
        auto r8 = f_min(8, 3, enumerate_nonisomorphic(8, fmin_eight_workers), fmin_eight_workers);
        double eight = seconds_since(start);
        s << " " << r8.f_value;
        ok = ok && r8.classes == 6880 && r8.f_value == expected[5] && r8.f_value == ceil_bound(8);

        // every reported minimiser really attains the value
        for (auto & code : r8.argmin)
            ok = ok && max_packing_exact(parse_canonical_code(8, code).to_tournament(), 3).size() == r8.f_value;

        s << "; n<=7 in " << small << "s (limit " << fmin_small_seconds << "s), n=8 in " << eight << "s with "
            << fmin_eight_workers << " workers (limit " << fmin_eight_seconds << "s)";
        report(2, ok && small < fmin_small_seconds && eight < fmin_eight_seconds, s.str());
    });

    guarded(3, [] {
        auto & classes = classes7();
        auto first = filter_by_score(classes, ScoreSequence{ 4, 4, 4, 3, 2, 2, 2 }).size();
        auto second = filter_by_score(classes, ScoreSequence{ 5, 3, 3, 3, 3, 2, 2 }).size();
        auto scores = scores_with_triangle_count(classes, 11);
        std::set<ScoreSequence> expected{ { 4, 4, 4, 3, 2, 2, 2 }, { 5, 3, 3, 3, 3, 2, 2 }, { 4, 4, 3, 3, 3, 3, 1 } };

        std::ostringstream s;
        s << "score (4,4,4,3,2,2,2): " << first << " classes (expected 18); score (5,3,3,3,3,2,2): " << second
            << " classes (expected 15); t=11 score set matches: " << (scores == expected);
        report(3, first == 18 && second == 15 && scores == expected, s.str());
    });

    guarded(4, [] {
        auto & designs = all_sts7();
        int matches = 0;
        for (int i = 0 ; i < 20 ; ++i) {
            auto t = random_tournament(7, derive_seed(master_seed, 400 + i));
            Rational sum = 0;
            for (auto & d : designs) {
                int cyclic = 0;
                for (auto & b : d.blocks)
                    cyclic += ! oracle::transitive(t, b);
                if (cyclic != sts_triangle_count(t, d))
                    throw std::logic_error("block count disagrees with the oracle");
                sum += cyclic;
            }
            matches += sum / Rational(std::int64_t(designs.size())) == Rational(oracle::cyclic_triples(t), 5);
        }
        std::ostringstream s;
        s << designs.size() << " labelled designs; average equals t/5 exactly on " << matches << " of 20 tournaments";
        report(4, designs.size() == 30 && matches == 20, s.str());
    });

    guarded(5, [] {
        auto r = lp_step(Rational(35, 4), { 7, 6, 5 }, { 5, 12 });
        std::ostringstream s;
        s << "minimum " << to_string(r.minimum) << " at (" << to_string(r.argmin[0]) << ", " << to_string(r.argmin[1])
            << ", " << to_string(r.argmin[2]) << ")";
        report(5, r.minimum == Rational(153, 28)
                && r.argmin == std::array<Rational, 3>{ Rational(0), Rational(13, 28), Rational(15, 28) }, s.str());
    });

    guarded(6, [] {
        auto start = Clock::now();
        auto ag = ag2_lines();
        bool ok = true;
        std::ostringstream s;

        auto run = [&] (const char * name, const Tournament & t, std::uint64_t seed) {
            auto r = theorem1_pipeline(t, ag, 100, seed, 4);
            int independent = 0;
            for (auto & trial : r.trials) {
                auto p = pipeline_trial_packing(t, ag, trial.seed);
                independent += oracle_packing_ok(t, p) && int(p.size()) == trial.total;
            }
            ok = ok && r.trials.size() == 100 && r.all_verified() && independent == 100 && r.min_total >= 280;
            s << name << ": min " << r.min_total << ", mean " << r.mean_total << ", " << independent
                << "/100 independently verified; ";
            return r;
        };

        run("random", random_tournament(49, derive_seed(master_seed, 49)), derive_seed(master_seed, 1));
        run("three-class", turan3_tournament(49), derive_seed(master_seed, 2));
        auto tt = run("transitive", transitive_tournament(49), derive_seed(master_seed, 3));
        bool all_392 = std::ranges::all_of(tt.trials, [] (auto & t) { return t.total == 392; });
        double elapsed = seconds_since(start);
        s << "transitive all 392: " << all_392 << "; " << elapsed << "s (limit " << pipeline_seconds << "s)";
        report(6, ok && all_392 && elapsed < pipeline_seconds, s.str());
    });

    guarded(7, [] {
        auto start = Clock::now();
        bool ok = true;
        std::ostringstream s;
        for (int n = 6 ; n <= 9 ; ++n) {
            auto t = turan3_tournament(n);
            auto p = max_packing_exact(t, 3);
            auto bound = ceil_bound(n);
            ok = ok && p.optimal && oracle_packing_ok(t, p) && p.size() <= bound;
            if (n <= 8)
                ok = ok && p.size() == bound;
            s << "n=" << n << ": P=" << p.size() << " bound=" << bound << "; ";
        }
        double elapsed = seconds_since(start);
        s << elapsed << "s (limit " << turan_seconds << "s)";
        report(7, ok && elapsed < turan_seconds, s.str());
    });

    guarded(8, [] {
        std::vector<const Tournament *> free;
        for (auto & t : classes7()) {
            bool has = false;
            for (auto & q : oracle::k_subsets(7, 4))
                has = has || oracle::transitive(t, q);
            if (! has)
                free.push_back(&t);
        }
        bool unique_qr = free.size() == 1 && oracle::canonical_string(*free.front()) == oracle::canonical_string(qr7());

        auto b = blowup(qr7(), 2);
        auto p = max_packing_exact(b, 4);
        bool blow_ok = b.n() == 14 && p.optimal && oracle_packing_ok(b, p) && p.size() <= 7;

        std::ostringstream s;
        s << free.size() << " TT_4-free class(es), isomorphic to QR_7: " << unique_qr << "; blow-up n=14 P_4=" << p.size()
            << " (optimal " << p.optimal << ")";
        report(8, unique_qr && blow_ok, s.str());
    });

    guarded(9, [] {
        int agree = 0;
        for (int i = 0 ; i < 200 ; ++i) {
            int n = 3 + i % 10;
            auto t = random_tournament(n, derive_seed(master_seed, 900 + i));
            auto c = census(t);
            std::int64_t brute_cyclic = oracle::cyclic_triples(t);
            std::int64_t brute_transitive = binomial(n, 3) - brute_cyclic;
            std::int64_t by_degrees = 0;
            for (int v = 0 ; v < n ; ++v) {
                std::int64_t d = 0;
                for (int w = 0 ; w < n ; ++w)
                    d += w != v && t.beats(v, w);
                by_degrees += d * (d - 1) / 2;
            }
            agree += c.transitive == by_degrees && c.transitive == brute_transitive
                && transitive_triples_by_degrees(t) == by_degrees && c.transitive + c.cyclic == binomial(n, 3);
        }
        std::ostringstream s;
        s << agree << " of 200 tournaments (n <= 12) satisfy a = sum C(d+,2) and a + t = C(n,3)";
        report(9, agree == 200, s.str());
    });

    guarded(10, [] {
        bool ok = true;
        std::ostringstream s;
        for (auto [n, m] : { std::pair{ 9, 5 }, std::pair{ 10, 4 } })
            for (int i = 0 ; i < 5 ; ++i) {
                auto t = random_tournament(n, derive_seed(master_seed, 1000 + 10 * n + i));
                auto r = prop23_check(t, m);
                Rational sum = 0;
                auto subsets = oracle::k_subsets(n, m);
                for (auto & sub : subsets)
                    for (auto & tri : oracle::k_subsets(m, 3))
                        sum += oracle::transitive(t, std::vector<int>{ sub[tri[0]], sub[tri[1]], sub[tri[2]] });
                Rational brute = sum / Rational(std::int64_t(subsets.size()));
                Rational bound = Rational(3, 4) * Rational(n - 3, n - 2) * Rational(binomial(m, 3));
                ok = ok && r.exact_expectation == brute && r.exact_expectation >= bound;
                if (i == 0)
                    s << "(n=" << n << ", m=" << m << ") E=" << to_string(r.exact_expectation) << " brute="
                        << to_string(brute) << " bound=" << to_string(bound) << "; ";
            }
        s << "5 tournaments per pair";
        report(10, ok, s.str());
    });

    guarded(11, [] {
        double total = 0;
        int handshakes = 0;
        for (int i = 0 ; i < 20 ; ++i) {
            auto stats = edge_copy_stats(DenseTournament::random(60, derive_seed(master_seed, 1100 + i)), 3);
            std::int64_t sum = 0;
            for (auto c : stats.counts)
                sum += c;
            handshakes += sum == stats.copies * 3 && stats.count_sum == sum;
            total += stats.mean;
        }
        double mean = total / 20;
        double deviation = std::abs(mean - edge_mean_target) / edge_mean_target;
        std::ostringstream s;
        s << "grand mean " << mean << " (relative deviation " << deviation << ", tolerance "
            << edge_mean_relative_tolerance << "); handshake exact on " << handshakes << " of 20";
        report(11, deviation <= edge_mean_relative_tolerance && handshakes == 20, s.str());
    });

    guarded(12, [] {
        int compared = 0, agree = 0;
        for (int n = 3 ; n <= 5 ; ++n)
            for (auto & t : enumerate_nonisomorphic(n, 1))
                for (int k = 3 ; k <= std::min(n, 4) ; ++k) {
                    ++compared;
                    agree += max_packing_exact(t, k).size() == std::size_t(oracle::max_packing(t, k));
                }
        std::ostringstream s;
        s << agree << " of " << compared << " (class, k) pairs match exhaustive enumeration";
        report(12, compared > 0 && agree == compared, s.str());
    });

    std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
