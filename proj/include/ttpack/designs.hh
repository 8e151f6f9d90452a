/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_DESIGNS_HH
#define TTPACK_GUARD_DESIGNS_HH 1

#include <ttpack/tournament.hh>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ttpack
{
    /// Blocks are kept sorted internally; block order is whatever the
    /// constructor produced.
    struct BlockDesign
    {
        int point_count = 0;
        int block_size = 0;
        std::vector<std::vector<int>> blocks;

        auto operator== (const BlockDesign &) const -> bool = default;
    };

    /// Blocks {i, i+1, i+3} mod 7.
    auto fano_plane() -> BlockDesign;

    /// The nine points and twelve lines of the affine plane over F_3.
    auto sts9_base() -> BlockDesign;

    /// Image of a design under point p -> permutation[p].
    auto permute_design(const BlockDesign & d, std::span<const int> permutation) -> BlockDesign;

    /// Order-independent identity of a labelled design: its sorted block masks.
    auto design_key(const BlockDesign & d) -> std::vector<std::uint64_t>;

    /// Uniform random permutation of 0..n-1 drawn from the seed.
    auto random_permutation(int n, std::uint64_t seed) -> std::vector<int>;

    /// The 30 labelled Steiner triple systems on 7 points, in key order.
    auto all_sts7() -> const std::vector<BlockDesign> &;

    /// The 840 labelled Steiner triple systems on 9 points, in key order.
    auto all_sts9() -> const std::vector<BlockDesign> &;

    auto random_sts7(std::uint64_t seed) -> BlockDesign;

    /// Number of blocks inducing a directed triangle.
    auto sts_triangle_count(const Tournament & t, const BlockDesign & d) -> int;

    /// Lines of AG(2, q), point (x, y) numbered q x + y. Only q = 7.
    auto ag2_lines(int q = 7) -> BlockDesign;

    /// Uniform block size, points in range, every pair covered exactly once.
    auto verify_design(const BlockDesign & d) -> bool;

    auto serialize_design(const BlockDesign & d) -> std::string;
    auto parse_design(std::string_view text) -> BlockDesign;
}

#endif
