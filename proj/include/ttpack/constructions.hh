/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_CONSTRUCTIONS_HH
#define TTPACK_GUARD_CONSTRUCTIONS_HH 1

#include <ttpack/tournament.hh>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ttpack
{
    /// How edges inside a vertex class are oriented.
    enum class Filler
    {
        Transitive,     // lower label beats higher label
        Random          // seeded coin per pair
    };

    auto parse_filler(const std::string & name) -> Filler;
    auto to_string(Filler f) -> std::string;

    enum class ConstructionKind
    {
        Turan3,
        QR7,
        Blowup
    };

    struct ConstructionSpec
    {
        ConstructionKind kind = ConstructionKind::Turan3;
        int n = 0;
        Filler filler = Filler::Transitive;
        int factor = 1;
        std::uint64_t seed = 0;
    };

    auto build(const ConstructionSpec & spec) -> Tournament;

    /// ceil(n/3) first, the rest split as evenly as possible, largest first.
    auto turan3_class_sizes(int n) -> std::array<int, 3>;

    /// Class index of every vertex; classes occupy consecutive labels.
    auto turan3_classes(int n) -> std::vector<int>;

    /// ceil(n(n-1)/6 - n/3).
    auto turan3_upper_bound(int n) -> std::int64_t;

    /**
     * Three near-equal classes with cross edges oriented cyclically,
     * V1 -> V2 -> V3 -> V1, so every triangle meeting all three classes is
     * directed. (The orientation list this comes from repeats "from V1 to
     * V2" for the V2-V3 edges; only the cyclic reading gives the bound.)
     */
    auto turan3_tournament(int n, Filler filler = Filler::Transitive, std::uint64_t seed = 0) -> Tournament;

    /// i -> j iff j - i is a nonzero square mod 7.
    auto qr7() -> Tournament;

    /// Vertex v of the base becomes v * factor .. v * factor + factor - 1.
    auto blowup(const Tournament & base, int factor, Filler filler = Filler::Transitive, std::uint64_t seed = 0)
        -> Tournament;

    auto blowup_classes(int base_n, int factor) -> std::vector<int>;

    /// Number of pairs of vertices sharing a class.
    auto intra_class_edges(std::span<const int> class_of) -> std::int64_t;

    /// True if every TT_k copy of t has two vertices in a common class.
    auto every_copy_uses_intra_edge(const Tournament & t, std::span<const int> class_of, int k) -> bool;
}

#endif
