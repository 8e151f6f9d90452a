/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/packing.hh>
#include <ttpack/random.hh>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ttpack
{
    auto make_edge_bits(int n) -> EdgeBits
    {
        return EdgeBits((edge_count(n) + 63) / 64, 0);
    }

    auto test_edge(const EdgeBits & bits, int index) -> bool
    {
        return (bits[index / 64] >> (index % 64)) & 1;
    }

    auto set_edge(EdgeBits & bits, int index) -> void
    {
        bits[index / 64] |= std::uint64_t{ 1 } << (index % 64);
    }

    auto count_edges(const EdgeBits & bits) -> int
    {
        int result = 0;
        for (auto w : bits)
            result += std::popcount(w);
        return result;
    }

    auto induced_edges(const Tournament & t, VertexSet vertices) -> std::vector<DirectedEdge>
    {
        std::vector<DirectedEdge> result;
        for (auto s = vertices ; s ; s &= s - 1) {
            int u = std::countr_zero(s);
            for (auto r = s & (s - 1) ; r ; r &= r - 1) {
                int v = std::countr_zero(r);
                result.push_back(t.beats(u, v) ? DirectedEdge{ u, v } : DirectedEdge{ v, u });
            }
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    namespace
    {
        auto edge_mask(const Tournament & t, VertexSet vertices, EdgeBits & out) -> void
        {
            for (auto s = vertices ; s ; s &= s - 1) {
                int u = std::countr_zero(s);
                for (auto r = s & (s - 1) ; r ; r &= r - 1)
                    set_edge(out, edge_index(t.n(), u, std::countr_zero(r)));
            }
        }

        auto collect_copies(const Tournament & t, int k, VertexSet chosen, int size, int next, CopyList & out) -> void
        {
            if (size == k) {
                out.copies.push_back(TransitiveCopy{ chosen, induced_edges(t, chosen) });
                return;
            }
            for (int v = next ; v <= t.n() - (k - size) ; ++v) {
                VertexSet extended = chosen | (VertexSet{ 1 } << v);
                if (is_transitive_on(t, extended))
                    collect_copies(t, k, extended, size + 1, v + 1, out);
            }
        }
    }

    auto enumerate_copies(const Tournament & t, int k) -> CopyList
    {
        if (k < 3 || k > t.n())
            throw std::invalid_argument("enumerate_copies needs 3 <= k <= n, got k=" + std::to_string(k)
                    + " n=" + std::to_string(t.n()));
        CopyList result{ t.n(), k, { } };
        collect_copies(t, k, 0, 0, 0, result);
        return result;
    }

    auto validate_copy_list(const Tournament & t, const CopyList & copies) -> void
    {
        if (copies.n != t.n() || copies.k < 3 || copies.k > t.n())
            throw std::invalid_argument("copy list does not match host");
        std::vector<VertexSet> seen;
        for (auto & c : copies.copies) {
            if (vertex_count(c.vertices) != copies.k || (c.vertices & ~t.all_vertices()))
                throw std::invalid_argument("copy has wrong vertex count");
            if (! is_transitive_on(t, c.vertices))
                throw std::invalid_argument("copy is not transitive in host");
            if (c.edges != induced_edges(t, c.vertices))
                throw std::invalid_argument("copy edge list does not match host");
            seen.push_back(c.vertices);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw std::invalid_argument("duplicate copy in copy list");
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        class EdgeBranchAndBound
        {
            private:
                int _edges_per_copy;
                std::size_t _words;
                std::vector<std::uint64_t> _masks;      // copy c occupies [c * words, (c + 1) * words)
                SolveOptions _options;
                std::optional<Clock::time_point> _deadline;

                std::vector<std::size_t> _chosen;
                std::vector<std::size_t> _best;
                std::uint64_t _nodes = 0;
                bool _aborted = false;

                auto mask(std::size_t c) const -> const std::uint64_t *
                {
                    return &_masks[c * _words];
                }

                auto disjoint(std::size_t c, const std::vector<std::uint64_t> & bits) const -> bool
                {
                    auto m = mask(c);
                    for (std::size_t w = 0 ; w < _words ; ++w)
                        if (m[w] & bits[w])
                            return false;
                    return true;
                }

                auto contains(std::size_t c, int edge) const -> bool
                {
                    return (mask(c)[edge / 64] >> (edge % 64)) & 1;
                }

                auto record(const std::vector<std::size_t> & extra) -> void
                {
                    _best = _chosen;
                    _best.insert(_best.end(), extra.begin(), extra.end());
                    if (_options.stop_at && int(_best.size()) >= *_options.stop_at)
                        _aborted = true;
                }

                // Size of a greedy hitting set: each packed copy uses one of
                // its edges exclusively, so a packing is no bigger than any set
                // of edges meeting every live copy.
                auto hitting_bound(const std::vector<std::size_t> & alive, int give_up_above) const -> int
                {
                    std::vector<std::size_t> remaining = alive;
                    int picked = 0;
                    std::vector<int> counts(_words * 64);
                    while (! remaining.empty()) {
                        if (picked >= give_up_above)
                            return picked + 1;
                        std::fill(counts.begin(), counts.end(), 0);
                        for (auto c : remaining) {
                            auto m = mask(c);
                            for (std::size_t w = 0 ; w < _words ; ++w)
                                for (auto bits = m[w] ; bits ; bits &= bits - 1)
                                    ++counts[w * 64 + std::countr_zero(bits)];
                        }
                        int edge = std::max_element(counts.begin(), counts.end()) - counts.begin();
                        std::erase_if(remaining, [&] (std::size_t c) { return contains(c, edge); });
                        ++picked;
                    }
                    return picked;
                }

                auto out_of_time() -> bool
                {
                    if (_deadline && (_nodes & 255) == 0 && Clock::now() >= *_deadline)
                        _aborted = true;
                    return _aborted;
                }

                auto search(const std::vector<std::uint64_t> & blocked, const std::vector<std::size_t> & alive) -> void
                {
                    ++_nodes;
                    if (out_of_time())
                        return;

                    if (alive.empty()) {
                        if (_chosen.size() > _best.size())
                            record({ });
                        return;
                    }

                    std::vector<std::uint64_t> coverable(_words, 0);
                    for (auto c : alive) {
                        auto m = mask(c);
                        for (std::size_t w = 0 ; w < _words ; ++w)
                            coverable[w] |= m[w];
                    }
                    int coverable_count = 0;
                    for (auto w : coverable)
                        coverable_count += std::popcount(w);

                    int best = _best.size();
                    int here = _chosen.size();
                    int bound = here + coverable_count / _edges_per_copy;
                    if (bound <= best)
                        return;
                    bound = std::min(bound, here + hitting_bound(alive, bound - here));
                    if (bound <= best)
                        return;

                    // greedy completion, in copy order
                    std::vector<std::size_t> greedy;
                    std::vector<std::uint64_t> used = blocked;
                    for (auto c : alive)
                        if (disjoint(c, used)) {
                            greedy.push_back(c);
                            auto m = mask(c);
                            for (std::size_t w = 0 ; w < _words ; ++w)
                                used[w] |= m[w];
                        }
                    if (here + int(greedy.size()) > best) {
                        record(greedy);
                        if (_aborted)
                            return;
                    }
                    if (here + int(greedy.size()) >= bound)
                        return;

                    int edge = 0;
                    for (std::size_t w = 0 ; w < _words ; ++w)
                        if (coverable[w]) {
                            edge = w * 64 + std::countr_zero(coverable[w]);
                            break;
                        }

                    for (auto c : alive) {
                        if (! contains(c, edge))
                            continue;
                        std::vector<std::uint64_t> next_blocked = blocked;
                        auto m = mask(c);
                        for (std::size_t w = 0 ; w < _words ; ++w)
                            next_blocked[w] |= m[w];
                        std::vector<std::size_t> next_alive;
                        for (auto d : alive)
                            if (disjoint(d, next_blocked))
                                next_alive.push_back(d);

                        _chosen.push_back(c);
                        search(next_blocked, next_alive);
                        _chosen.pop_back();
                        if (_aborted)
                            return;
                    }

                    // this edge stays uncovered
                    std::vector<std::uint64_t> next_blocked = blocked;
                    next_blocked[edge / 64] |= std::uint64_t{ 1 } << (edge % 64);
                    std::vector<std::size_t> next_alive;
                    for (auto d : alive)
                        if (! contains(d, edge))
                            next_alive.push_back(d);
                    search(next_blocked, next_alive);
                }

            public:
                EdgeBranchAndBound(const Tournament & t, const CopyList & copies, const SolveOptions & options) :
                    _edges_per_copy(copies.k * (copies.k - 1) / 2),
                    _words((edge_count(t.n()) + 63) / 64),
                    _masks(copies.copies.size() * _words, 0),
                    _options(options)
                {
                    for (std::size_t c = 0 ; c < copies.copies.size() ; ++c) {
                        EdgeBits bits(_words, 0);
                        edge_mask(t, copies.copies[c].vertices, bits);
                        std::copy(bits.begin(), bits.end(), _masks.begin() + c * _words);
                    }
                    if (options.time_budget)
                        _deadline = Clock::now() + *options.time_budget;
                }

                auto run(std::size_t copy_count) -> void
                {
                    std::vector<std::size_t> alive(copy_count);
                    std::iota(alive.begin(), alive.end(), 0);
                    search(std::vector<std::uint64_t>(_words, 0), alive);
                }

                auto best() const -> const std::vector<std::size_t> & { return _best; }
                auto nodes() const -> std::uint64_t { return _nodes; }
                auto aborted() const -> bool { return _aborted; }
        };

        auto make_packing(const Tournament & t, const CopyList & copies, std::vector<std::size_t> members) -> Packing
        {
            std::sort(members.begin(), members.end());
            Packing result;
            result.n = t.n();
            result.k = copies.k;
            result.covered_edges = make_edge_bits(t.n());
            for (auto m : members) {
                result.copies.push_back(copies.copies[m].vertices);
                edge_mask(t, copies.copies[m].vertices, result.covered_edges);
            }
            result.members = std::move(members);
            return result;
        }
    }

    auto max_packing_exact(const Tournament & t, int k, const SolveOptions & options) -> Packing
    {
        return max_packing_exact(t, enumerate_copies(t, k), options);
    }

    auto max_packing_exact(const Tournament & t, const CopyList & copies, const SolveOptions & options) -> Packing
    {
        validate_copy_list(t, copies);

        EdgeBranchAndBound search(t, copies, options);
        search.run(copies.copies.size());

        auto result = make_packing(t, copies, search.best());
        result.nodes_explored = search.nodes();
        result.optimal = ! search.aborted();
        return result;
    }

    auto greedy_scan(int n, int k, std::span<const std::uint16_t> flat_copies, std::uint64_t seed)
        -> std::vector<std::size_t>
    {
        std::size_t count = flat_copies.size() / k;
        std::vector<std::uint32_t> order(count);
        std::iota(order.begin(), order.end(), 0);
        CounterRng rng(seed);
        rng.shuffle(std::span<std::uint32_t>(order));

        EdgeBits covered = make_edge_bits(n);
        std::vector<int> edges;
        std::vector<std::size_t> accepted;
        for (auto c : order) {
            auto vertices = flat_copies.subspan(std::size_t(c) * k, k);
            edges.clear();
            bool free = true;
            for (int i = 0 ; i < k && free ; ++i)
                for (int j = i + 1 ; j < k && free ; ++j) {
                    int e = edge_index(n, vertices[i], vertices[j]);
                    free = ! test_edge(covered, e);
                    edges.push_back(e);
                }
            if (! free)
                continue;
            for (auto e : edges)
                set_edge(covered, e);
            accepted.push_back(c);
        }
        std::sort(accepted.begin(), accepted.end());
        return accepted;
    }

    auto greedy_packing(const Tournament & t, int k, std::uint64_t seed) -> Packing
    {
        Packing result;
        if (k > t.n()) {
            result.n = t.n();
            result.k = k;
            result.covered_edges = make_edge_bits(t.n());
            return result;
        }

        auto copies = enumerate_copies(t, k);
        std::vector<std::uint16_t> flat;
        for (auto & c : copies.copies)
            for (auto s = c.vertices ; s ; s &= s - 1)
                flat.push_back(std::countr_zero(s));

        result = make_packing(t, copies, greedy_scan(t.n(), k, flat, seed));
        result.optimal = false;
        return result;
    }

    auto verify_packing(const Tournament & t, const Packing & p) -> bool
    {
        if (p.n != t.n() || p.k < 2)
            return false;

        auto covered = make_edge_bits(t.n());
        for (auto vertices : p.copies) {
            if (vertex_count(vertices) != p.k || (vertices & ~t.all_vertices()))
                return false;

            // transitive iff some ordering has every edge pointing forward
            std::vector<int> members;
            for (auto s = vertices ; s ; s &= s - 1)
                members.push_back(std::countr_zero(s));
            auto inner_degree = [&] (int v) { return std::popcount(t.out_set(v) & vertices); };
            std::sort(members.begin(), members.end(), [&] (int a, int b) { return inner_degree(a) > inner_degree(b); });
            bool ordered = true;
            for (std::size_t i = 0 ; i < members.size() && ordered ; ++i)
                for (std::size_t j = i + 1 ; j < members.size() && ordered ; ++j)
                    ordered = t.beats(members[i], members[j]);
            if (! ordered)
                return false;

            for (std::size_t i = 0 ; i < members.size() ; ++i)
                for (std::size_t j = i + 1 ; j < members.size() ; ++j) {
                    int e = edge_index(t.n(), std::min(members[i], members[j]), std::max(members[i], members[j]));
                    if (test_edge(covered, e))
                        return false;
                    set_edge(covered, e);
                }
        }

        if (! p.covered_edges.empty() && p.covered_edges != covered)
            return false;
        if (! p.members.empty() && p.members.size() != p.copies.size())
            return false;
        return true;
    }
}
