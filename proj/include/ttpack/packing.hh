/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_PACKING_HH
#define TTPACK_GUARD_PACKING_HH 1

#include <ttpack/tournament.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ttpack
{
    using DirectedEdge = std::pair<int, int>;

    struct TransitiveCopy
    {
        VertexSet vertices = 0;
        std::vector<DirectedEdge> edges;    // sorted, C(k, 2) of them
    };

    /// Every TT_k copy of a host, ordered by sorted vertex list.
    struct CopyList
    {
        int n = 0;
        int k = 0;
        std::vector<TransitiveCopy> copies;
    };

    /// Growable bitset over the edge indices of a host.
    using EdgeBits = std::vector<std::uint64_t>;

    auto make_edge_bits(int n) -> EdgeBits;
    auto test_edge(const EdgeBits & bits, int index) -> bool;
    auto set_edge(EdgeBits & bits, int index) -> void;
    auto count_edges(const EdgeBits & bits) -> int;

    struct Packing
    {
        int n = 0;
        int k = 0;
        std::vector<std::size_t> members;   // indices into the CopyList searched
        std::vector<VertexSet> copies;      // vertex sets of the members, same order
        EdgeBits covered_edges;
        bool optimal = false;
        std::uint64_t nodes_explored = 0;

        auto size() const -> int { return static_cast<int>(copies.size()); }
    };

    struct SolveOptions
    {
        std::optional<std::chrono::milliseconds> time_budget;

        /// Give up (with optimal = false) as soon as a packing this large is
        /// known. Used by minimum sweeps that only care whether a class can
        /// beat a running minimum.
        std::optional<int> stop_at;
    };

    auto enumerate_copies(const Tournament & t, int k) -> CopyList;

    /// Throws std::invalid_argument unless every copy is a genuine TT_k of
    /// the host with its edge list in order and vertex sets distinct.
    auto validate_copy_list(const Tournament & t, const CopyList & copies) -> void;

    /**
     * Maximum edge-disjoint TT_k packing by branch and bound over edges: the
     * least-index edge that can still be covered is either covered by one of
     * the live copies containing it, or abandoned for good.
     */
    auto max_packing_exact(const Tournament & t, int k, const SolveOptions & options = { }) -> Packing;
    auto max_packing_exact(const Tournament & t, const CopyList & copies, const SolveOptions & options = { }) -> Packing;

    /// Maximal packing from a seeded random scan of all copies.
    auto greedy_packing(const Tournament & t, int k, std::uint64_t seed) -> Packing;

    /// Accepted copies of a random-order scan. Copies are given as k vertex
    /// ids each, sorted increasingly within a copy. Result is sorted.
    auto greedy_scan(int n, int k, std::span<const std::uint16_t> flat_copies, std::uint64_t seed)
        -> std::vector<std::size_t>;

    /// Independent certificate check: members are transitive k-sets of the
    /// host, pairwise edge-disjoint, and agree with covered_edges.
    auto verify_packing(const Tournament & t, const Packing & p) -> bool;

    /// The directed edges induced on a vertex set, sorted.
    auto induced_edges(const Tournament & t, VertexSet vertices) -> std::vector<DirectedEdge>;
}

#endif
