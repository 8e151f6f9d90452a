/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/constructions.hh>
#include <ttpack/enumeration.hh>
#include <ttpack/packing.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace ttpack;

namespace
{
    auto ceil_bound(int n) -> std::int64_t
    {
        // smallest integer >= n(n-1)/6 - n/3 = n(n-3)/6
        std::int64_t num = std::int64_t{ n } * (n - 3);
        return (num + 5) / 6;
    }
}

TEST_CASE("three-class construction shape")
{
    CHECK(turan3_class_sizes(7) == std::array<int, 3>{ 3, 2, 2 });
    CHECK(turan3_class_sizes(8) == std::array<int, 3>{ 3, 3, 2 });
    CHECK(turan3_class_sizes(9) == std::array<int, 3>{ 3, 3, 3 });
    CHECK(turan3_class_sizes(3) == std::array<int, 3>{ 1, 1, 1 });

    for (int n = 3 ; n <= 64 ; ++n) {
        auto sizes = turan3_class_sizes(n);
        CHECK(sizes[0] + sizes[1] + sizes[2] == n);
        CHECK(sizes[0] - sizes[2] <= 1);

        auto classes = turan3_classes(n);
        std::int64_t intra = 0;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                intra += classes[u] == classes[v];
        CHECK(intra_class_edges(classes) == intra);
        CHECK(intra == ceil_bound(n));
        CHECK(turan3_upper_bound(n) == ceil_bound(n));

        auto t = turan3_tournament(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                if (classes[u] != classes[v] && (classes[u] + 1) % 3 == classes[v])
                    CHECK(t.beats(u, v));
    }
}

TEST_CASE("three-class construction packing numbers")
{
    auto t3 = turan3_tournament(3);
    CHECK(census(t3).cyclic == 1);
    CHECK(max_packing_exact(t3, 3).size() == 0);

    CHECK(max_packing_exact(turan3_tournament(6), 3).size() == 3);
    CHECK(max_packing_exact(turan3_tournament(7), 3).size() == 5);

    for (int n = 4 ; n <= 9 ; ++n) {
        auto t = turan3_tournament(n);
        CHECK(every_copy_uses_intra_edge(t, turan3_classes(n), 3));
        CHECK(max_packing_exact(t, 3).size() <= turan3_upper_bound(n));
    }

    for (std::uint64_t seed = 0 ; seed < 6 ; ++seed) {
        auto t = turan3_tournament(8, Filler::Random, seed);
        CHECK(every_copy_uses_intra_edge(t, turan3_classes(8), 3));
        CHECK(max_packing_exact(t, 3).size() <= turan3_upper_bound(8));
    }
    CHECK(turan3_tournament(20, Filler::Random, 3) == turan3_tournament(20, Filler::Random, 3));
}

TEST_CASE("quadratic residue tournament")
{
    auto q = qr7();
    for (int i = 0 ; i < 7 ; ++i) {
        CHECK(q.out_degree(i) == 3);
        for (int j = 0 ; j < 7 ; ++j)
            if (i != j) {
                int d = ((j - i) % 7 + 7) % 7;
                CHECK(q.beats(i, j) == (d == 1 || d == 2 || d == 4));
            }
    }
    CHECK(census(q).transitive == 21);
    CHECK(census(q).cyclic == 14);
    for (auto & s : oracle::k_subsets(7, 4))
        CHECK_FALSE(oracle::transitive(q, s));

    // the one class of order 7 without a transitive 4-set
    std::vector<Tournament> free;
    for (auto & t : enumerate_nonisomorphic(7))
        if (enumerate_copies(t, 4).copies.empty())
            free.push_back(t);
    REQUIRE(free.size() == 1);
    CHECK(oracle::canonical_string(free.front()) == oracle::canonical_string(q));
}

TEST_CASE("blow-ups")
{
    auto q = qr7();
    CHECK(blowup(q, 1) == q);

    auto b = blowup(q, 2);
    CHECK(b.n() == 14);
    auto classes = blowup_classes(7, 2);
    CHECK(intra_class_edges(classes) == 7);
    for (int u = 0 ; u < 14 ; ++u)
        for (int v = 0 ; v < 14 ; ++v)
            if (classes[u] != classes[v])
                CHECK(b.beats(u, v) == q.beats(classes[u], classes[v]));
    CHECK(every_copy_uses_intra_edge(b, classes, 4));

    auto p = max_packing_exact(b, 4);
    CHECK(p.optimal);
    CHECK(p.size() <= 7);
    CHECK(91 - 6 * p.size() >= 49);

    for (std::uint64_t seed = 0 ; seed < 3 ; ++seed) {
        auto r = blowup(q, 3, Filler::Random, seed);
        CHECK(every_copy_uses_intra_edge(r, blowup_classes(7, 3), 4));
    }

    CHECK_THROWS(blowup(q, 10));
    CHECK(blowup(q, 9).n() == 63);
}

TEST_CASE("construction specs")
{
    ConstructionSpec spec;
    spec.kind = ConstructionKind::Turan3;
    spec.n = 9;
    CHECK(build(spec) == turan3_tournament(9));
    spec.kind = ConstructionKind::QR7;
    CHECK(build(spec) == qr7());

    CHECK(parse_filler("transitive") == Filler::Transitive);
    CHECK(parse_filler("random") == Filler::Random);
    CHECK(to_string(Filler::Random) == "random");
    CHECK_THROWS(parse_filler("cyclic"));
}
