/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_TOURNAMENT_HH
#define TTPACK_GUARD_TOURNAMENT_HH 1

#include <ttpack/rational.hh>

#include <array>
#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ttpack
{
    /// A set of vertices of a tournament with at most 64 vertices.
    using VertexSet = std::uint64_t;

    inline auto vertex_count(VertexSet s) -> int
    {
        return std::popcount(s);
    }

    /// Thrown for malformed tournament text; carries the offending byte offset.
    class ParseError : public std::runtime_error
    {
        private:
            std::size_t _offset;

        public:
            ParseError(const std::string & message, std::size_t offset);

            auto offset() const -> std::size_t { return _offset; }
    };

    /**
     * An orientation of the complete graph on n <= 64 vertices, stored as one
     * out-neighbour word per vertex.
     *
     * Every mutator keeps the tournament property: for u != v exactly one of
     * u -> v and v -> u holds.
     */
    class Tournament
    {
        private:
            int _n;
            std::array<std::uint64_t, 64> _out{ };

        public:
            static constexpr int max_vertices = 64;

            /// The transitive tournament i -> j for i < j.
            explicit Tournament(int n);

            auto n() const -> int { return _n; }

            auto all_vertices() const -> VertexSet
            {
                return _n == 64 ? ~VertexSet{ 0 } : (VertexSet{ 1 } << _n) - 1;
            }

            auto beats(int u, int v) const -> bool
            {
                return (_out[u] >> v) & 1;
            }

            auto out_set(int v) const -> VertexSet { return _out[v]; }

            auto in_set(int v) const -> VertexSet
            {
                return all_vertices() & ~_out[v] & ~(VertexSet{ 1 } << v);
            }

            auto out_degree(int v) const -> int { return std::popcount(_out[v]); }

            /// Makes u -> v, flipping v -> u if necessary.
            auto orient(int u, int v) -> void;

            auto operator== (const Tournament &) const -> bool = default;
    };

    struct TriangleCensus
    {
        std::int64_t transitive = 0;
        std::int64_t cyclic = 0;

        auto operator== (const TriangleCensus &) const -> bool = default;
    };

    /// Out-degrees sorted non-increasingly.
    using ScoreSequence = std::vector<int>;

    /// Rank of the pair (i, j), i < j, in lexicographic order.
    inline auto edge_index(int n, int i, int j) -> int
    {
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    }

    inline auto edge_count(int n) -> int
    {
        return n * (n - 1) / 2;
    }

    auto score(const Tournament & t) -> ScoreSequence;

    /// Landau's condition plus the correct total.
    auto is_valid_score(const ScoreSequence & s) -> bool;

    /// Counts by direct triple enumeration, cross-checked against the
    /// out-degree formula; throws std::logic_error if the two disagree.
    auto census(const Tournament & t) -> TriangleCensus;

    /// sum over v of (C(d+(v), 2) + C(n - 1 - d+(v), 2)) / 2.
    auto transitive_triples_by_degrees(const Tournament & t) -> std::int64_t;

    /// k(k-1)(k-3)/8, the least possible number of transitive triples.
    auto eq1_lower_bound(int k) -> Rational;

    auto reverse(const Tournament & t) -> Tournament;

    /// Subtournament on the given vertices, relabelled 0.. in sorted order.
    auto induced(const Tournament & t, std::span<const int> vertices) -> Tournament;
    auto induced(const Tournament & t, VertexSet vertices) -> Tournament;

    /// Each pair oriented by an independent fair coin keyed on (seed, pair index).
    auto random_tournament(int n, std::uint64_t seed) -> Tournament;

    auto transitive_tournament(int n) -> Tournament;
    auto cyclic_triangle() -> Tournament;

    auto is_transitive(const Tournament & t) -> bool;

    /// True if the vertices induce a transitive subtournament.
    auto is_transitive_on(const Tournament & t, VertexSet vertices) -> bool;

    /// A largest vertex set inducing a transitive subtournament, sorted.
    /// Refuses n > 24.
    auto max_transitive_subset(const Tournament & t) -> std::vector<int>;

    auto serialize(const Tournament & t) -> std::string;
    auto parse_tournament(std::string_view text) -> Tournament;

    auto read_tournament_file(const std::string & path) -> Tournament;
    auto write_tournament_file(const std::string & path, const Tournament & t) -> void;
}

#endif
