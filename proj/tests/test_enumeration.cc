/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/constructions.hh>
#include <ttpack/enumeration.hh>

#include "oracles.hh"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

using namespace ttpack;

TEST_CASE("canonical form matches the full relabelling scan")
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (auto & t : oracle::all_labelled(n))
            REQUIRE(canonical_form(t).to_string() == oracle::canonical_string(t));

    for (std::uint64_t seed = 0 ; seed < 40 ; ++seed) {
        auto t = random_tournament(6 + seed % 2, seed);
        CHECK(canonical_form(t).to_string() == oracle::canonical_string(t));
    }
    CHECK(canonical_form(qr7()).to_string() == oracle::canonical_string(qr7()));
    CHECK(canonical_form(transitive_tournament(7)).to_string() == oracle::canonical_string(transitive_tournament(7)));
}

TEST_CASE("canonical form is a relabelling invariant")
{
    std::vector<int> p{ 1, 2, 0 };
    Tournament relabelled(3);
    for (int i = 0 ; i < 3 ; ++i)
        for (int j = 0 ; j < 3 ; ++j)
            if (i != j && cyclic_triangle().beats(i, j))
                relabelled.orient(p[i], p[j]);
    CHECK(canonical_form(relabelled) == canonical_form(cyclic_triangle()));
    CHECK(canonical_form(reverse(cyclic_triangle())) == canonical_form(cyclic_triangle()));

    std::set<std::uint64_t> tt4_codes;
    std::vector<int> order{ 0, 1, 2, 3 };
    do {
        Tournament t(4);
        for (int i = 0 ; i < 4 ; ++i)
            for (int j = i + 1 ; j < 4 ; ++j)
                t.orient(order[i], order[j]);
        tt4_codes.insert(canonical_form(t).code);
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(tt4_codes.size() == 1);

    // the code is itself a tournament, and a fixed point
    for (std::uint64_t seed = 0 ; seed < 50 ; ++seed) {
        auto t = random_tournament(1 + seed % 10, seed);
        auto c = canonical_form(t);
        CHECK(canonical_form(c.to_tournament()) == c);
        CHECK(census(c.to_tournament()) == census(t));
    }

    CHECK_THROWS_AS(canonical_form(random_tournament(11, 1)), std::invalid_argument);
}

TEST_CASE("brute-force class counts for small orders")
{
    std::map<int, std::size_t> expected{ { 3, 2 }, { 4, 4 }, { 5, 12 } };
    for (auto [n, count] : expected) {
        std::set<std::string> codes;
        for (auto & t : oracle::all_labelled(n))
            codes.insert(oracle::canonical_string(t));
        CHECK(codes.size() == count);
        CHECK(enumerate_nonisomorphic(n).size() == count);

        std::set<std::string> generated;
        for (auto & t : enumerate_nonisomorphic(n))
            generated.insert(oracle::canonical_string(t));
        CHECK(generated == codes);
    }
}

TEST_CASE("class counts up to order 8")
{
    const std::vector<std::size_t> counts{ 1, 1, 2, 4, 12, 56, 456, 6880 };
    for (int n = 1 ; n <= 8 ; ++n) {
        auto classes = enumerate_nonisomorphic(n, n == 8 ? 2 : 1);
        CHECK(classes.size() == counts[n - 1]);
        for (std::size_t i = 0 ; i < classes.size() ; ++i) {
            CHECK(serialize(canonical_form(classes[i]).to_tournament()) == serialize(classes[i]));
            if (i > 0)
                CHECK(canonical_form(classes[i - 1]).code < canonical_form(classes[i]).code);
        }
    }
    CHECK_THROWS(enumerate_nonisomorphic(9));
    CHECK_THROWS(enumerate_nonisomorphic(0));
}

TEST_CASE("score filtering at order 7")
{
    auto classes = enumerate_nonisomorphic(7);

    // expected counts come from the brute-force oracle
    CHECK(oracle::classes_with_degrees({ 4, 4, 4, 3, 2, 2, 2 }) == 22);
    CHECK(filter_by_score(classes, { 4, 4, 4, 3, 2, 2, 2 }).size() == 22);
    CHECK(oracle::classes_with_degrees({ 5, 3, 3, 3, 3, 2, 2 }) == 15);
    CHECK(filter_by_score(classes, { 5, 3, 3, 3, 3, 2, 2 }).size() == 15);
    CHECK(filter_by_score(enumerate_nonisomorphic(3), { 1, 1, 1 }).size() == 1);

    std::set<ScoreSequence> expected{ { 4, 4, 4, 3, 2, 2, 2 }, { 5, 3, 3, 3, 3, 2, 2 }, { 4, 4, 3, 3, 3, 3, 1 } };
    CHECK(scores_with_triangle_count(classes, 11) == expected);
    CHECK(scores_with_triangle_count(classes, 14) == std::set<ScoreSequence>{ { 3, 3, 3, 3, 3, 3, 3 } });
    CHECK(scores_with_triangle_count(3, 1) == std::set<ScoreSequence>{ { 1, 1, 1 } });

    // the score classes partition the list
    std::set<ScoreSequence> scores;
    for (auto & t : classes)
        scores.insert(score(t));
    std::size_t total = 0;
    for (auto & s : scores)
        total += filter_by_score(classes, s).size();
    CHECK(total == classes.size());

    // closed under reversal
    std::set<std::uint64_t> codes;
    for (auto & t : classes)
        codes.insert(canonical_form(t).code);
    for (auto & t : classes)
        CHECK(codes.contains(canonical_form(reverse(t)).code));
}

TEST_CASE("class cache round trip")
{
    auto dir = std::filesystem::temp_directory_path() / "ttpack-cache-test";
    std::filesystem::remove_all(dir);

    auto generated = load_or_enumerate(6, dir);
    CHECK(std::filesystem::exists(class_cache_path(dir, 6)));
    CHECK(read_class_cache(class_cache_path(dir, 6)) == generated);
    CHECK(load_or_enumerate(6, dir) == generated);

    {
        std::ifstream in(class_cache_path(dir, 6));
        std::string header;
        std::getline(in, header);
        CHECK(header == "count=56 n=6");
    }

    // a damaged cache is regenerated
    {
        std::ofstream out(class_cache_path(dir, 6));
        out << "count=56 n=6\n0101\n";
    }
    CHECK(load_or_enumerate(6, dir) == generated);

    CHECK(load_or_enumerate(1, dir).size() == 1);
    CHECK(load_or_enumerate(1, dir).size() == 1);
    std::filesystem::remove_all(dir);
}
