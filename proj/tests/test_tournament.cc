/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/constructions.hh>
#include <ttpack/tournament.hh>

#include "oracles.hh"

#include <doctest.h>

#include <cmath>

using namespace ttpack;

TEST_CASE("census of small named tournaments")
{
    CHECK(census(transitive_tournament(3)) == TriangleCensus{ 1, 0 });
    CHECK(census(cyclic_triangle()) == TriangleCensus{ 0, 1 });
    CHECK(census(transitive_tournament(7)) == TriangleCensus{ 35, 0 });

    // QR_7 against an independent triple count straight from the residue rule
    auto qr = qr7();
    std::int64_t cyclic = 0;
    auto arc = [] (int i, int j) { int d = ((j - i) % 7 + 7) % 7; return d == 1 || d == 2 || d == 4; };
    for (int a = 0 ; a < 7 ; ++a)
        for (int b = a + 1 ; b < 7 ; ++b)
            for (int c = b + 1 ; c < 7 ; ++c)
                if ((arc(a, b) && arc(b, c) && arc(c, a)) || (arc(b, a) && arc(c, b) && arc(a, c)))
                    ++cyclic;
    CHECK(cyclic == 14);
    CHECK(census(qr) == TriangleCensus{ 21, 14 });
}

TEST_CASE("degree formula agrees with enumeration on random tournaments")
{
    for (int i = 0 ; i < 200 ; ++i) {
        int n = 5 + i % 8;
        auto t = random_tournament(n, 1000 + i);
        auto c = census(t);
        CHECK(c.transitive == transitive_triples_by_degrees(t));
        CHECK(c.cyclic == oracle::cyclic_triples(t));
        CHECK(c.transitive + c.cyclic == binomial(n, 3));
        CHECK(c.transitive >= ceil(eq1_lower_bound(n)));
        CHECK(is_valid_score(score(t)));
    }
}

TEST_CASE("eq1 lower bound")
{
    CHECK(eq1_lower_bound(7) == Rational(21));
    CHECK(eq1_lower_bound(3) == Rational(0));
    CHECK(eq1_lower_bound(4) == Rational(3, 2));
    CHECK_THROWS_AS(eq1_lower_bound(2), std::invalid_argument);
}

TEST_CASE("score sequences")
{
    CHECK(score(cyclic_triangle()) == ScoreSequence{ 1, 1, 1 });
    CHECK(is_valid_score({ 4, 4, 4, 3, 2, 2, 2 }));
    CHECK(is_valid_score({ 3, 3, 3, 3, 3, 3, 3 }));
    CHECK(is_valid_score({ 2, 2, 2, 0 }));
    CHECK_FALSE(is_valid_score({ 3, 3, 0, 0 }));      // total right, Landau fails
    CHECK_FALSE(is_valid_score({ 3, 3, 3 }));
}

TEST_CASE("reverse")
{
    auto tt3 = reverse(transitive_tournament(3));
    CHECK(census(tt3) == TriangleCensus{ 1, 0 });
    CHECK(tt3.beats(2, 0));
    CHECK(tt3.beats(1, 0));

    auto c3 = reverse(cyclic_triangle());
    CHECK(census(c3).cyclic == 1);
    CHECK(c3.beats(0, 2));

    // score (4,4,3,3,3,3,1) goes to its complement
    Tournament t(7);
    bool found = false;
    for (std::uint64_t s = 0 ; s < 5000 && ! found ; ++s) {
        t = random_tournament(7, s);
        found = score(t) == ScoreSequence{ 4, 4, 3, 3, 3, 3, 1 };
    }
    REQUIRE(found);
    CHECK(score(reverse(t)) == ScoreSequence{ 5, 3, 3, 3, 3, 2, 2 });

    for (std::uint64_t s = 0 ; s < 100 ; ++s) {
        auto r = random_tournament(1 + s % 64, s);
        CHECK(reverse(reverse(r)) == r);
        if (r.n() <= 30)
            CHECK(census(reverse(r)) == census(r));
    }
}

TEST_CASE("induced subtournaments")
{
    auto tt7 = transitive_tournament(7);
    for (auto & s : oracle::k_subsets(7, 3))
        CHECK(induced(tt7, std::span<const int>(s)) == transitive_tournament(3));

    auto t = random_tournament(9, 5);
    std::vector<int> all{ 0, 1, 2, 3, 4, 5, 6, 7, 8 };
    CHECK(induced(t, std::span<const int>(all)) == t);

    auto qr = qr7();
    std::vector<int> s{ 0, 1, 3 };
    auto sub = induced(qr, std::span<const int>(s));
    // 0->1, 1->3 and 3->0 in the residue rule: a directed triangle
    CHECK(sub.beats(0, 1));
    CHECK(sub.beats(1, 2));
    CHECK(sub.beats(2, 0));
    CHECK(census(sub) == TriangleCensus{ 0, 1 });

    std::vector<int> empty, bad{ 0, 7 };
    CHECK_THROWS(induced(qr, std::span<const int>(empty)));
    CHECK_THROWS(induced(qr, std::span<const int>(bad)));
}

TEST_CASE("random tournaments")
{
    CHECK(random_tournament(1, 99).n() == 1);
    CHECK(random_tournament(20, 7) == random_tournament(20, 7));
    CHECK_FALSE(random_tournament(20, 7) == random_tournament(20, 8));
    CHECK_THROWS(random_tournament(0, 1));
    CHECK_THROWS(random_tournament(65, 1));

    double sum = 0, sum_sq = 0;
    const int draws = 1000;
    for (int i = 0 ; i < draws ; ++i) {
        double t = census(random_tournament(7, 50000 + i)).cyclic;
        sum += t;
        sum_sq += t * t;
    }
    double mean = sum / draws;
    double se = std::sqrt((sum_sq / draws - mean * mean) / draws);
    CHECK(std::abs(mean - 35.0 / 4.0) <= 3 * se);
}

TEST_CASE("transitivity and largest transitive subsets")
{
    CHECK(is_transitive(transitive_tournament(7)));
    CHECK(max_transitive_subset(transitive_tournament(7)).size() == 7);
    CHECK_FALSE(is_transitive(cyclic_triangle()));
    CHECK(max_transitive_subset(cyclic_triangle()).size() == 2);

    auto qr = qr7();
    for (auto & s : oracle::k_subsets(7, 4))
        CHECK_FALSE(oracle::transitive(qr, s));
    CHECK(max_transitive_subset(qr).size() == 3);

    for (std::uint64_t seed = 0 ; seed < 30 ; ++seed) {
        auto t = random_tournament(6 + seed % 4, seed);
        auto best = max_transitive_subset(t);
        CHECK(oracle::transitive(t, best));
        int expected = 0;
        for (int k = 1 ; k <= t.n() ; ++k)
            for (auto & s : oracle::k_subsets(t.n(), k))
                if (oracle::transitive(t, s))
                    expected = k;
        CHECK(int(best.size()) == expected);
        CHECK(is_transitive(t) == (census(t).cyclic == 0));
    }

    CHECK_THROWS_AS(max_transitive_subset(random_tournament(25, 1)), std::invalid_argument);
    CHECK(max_transitive_subset(random_tournament(24, 1)).size() >= 5);
}

TEST_CASE("text format")
{
    auto t = random_tournament(11, 3);
    auto text = serialize(t);
    CHECK(serialize(parse_tournament(text)) == text);
    CHECK(parse_tournament(text) == t);

    CHECK(serialize(cyclic_triangle()) == "n=3\n101\n");
    CHECK(parse_tournament("n=1\n") == Tournament(1));
    CHECK(parse_tournament("n=1\n\n") == Tournament(1));

    auto offset_of = [] (const std::string & s) -> std::size_t {
        try {
            parse_tournament(s);
        }
        catch (const ParseError & e) {
            return e.offset();
        }
        return std::size_t(-1);
    };
    CHECK(offset_of("m=3\n101\n") == 0);
    CHECK(offset_of("n=3\n1x1\n") == 5);
    CHECK(offset_of("n=3\n10\n") == 6);
    CHECK(offset_of("n=3\n1011\n") == 7);
    CHECK(offset_of("n=99\n") == 2);
}
