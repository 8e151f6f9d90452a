/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/tournament.hh>
#include <ttpack/random.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace ttpack
{
    ParseError::ParseError(const std::string & message, std::size_t offset) :
        std::runtime_error(message + " at byte offset " + std::to_string(offset)),
        _offset(offset)
    {
    }

    Tournament::Tournament(int n) :
        _n(n)
    {
        if (n < 1 || n > max_vertices)
            throw std::out_of_range("tournament order must be in 1..64, got " + std::to_string(n));
        for (int v = 0 ; v < n ; ++v)
            _out[v] = all_vertices() & ~((VertexSet{ 2 } << v) - 1);
    }

    auto Tournament::orient(int u, int v) -> void
    {
        if (u == v || u < 0 || v < 0 || u >= _n || v >= _n)
            throw std::out_of_range("bad edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        _out[u] |= VertexSet{ 1 } << v;
        _out[v] &= ~(VertexSet{ 1 } << u);
    }

    auto score(const Tournament & t) -> ScoreSequence
    {
        ScoreSequence result;
        for (int v = 0 ; v < t.n() ; ++v)
            result.push_back(t.out_degree(v));
        std::sort(result.begin(), result.end(), std::greater<int>());
        return result;
    }

    auto is_valid_score(const ScoreSequence & s) -> bool
    {
        std::vector<int> ascending(s.begin(), s.end());
        std::sort(ascending.begin(), ascending.end());
        std::int64_t sum = 0;
        for (std::size_t m = 1 ; m <= ascending.size() ; ++m) {
            if (ascending[m - 1] < 0)
                return false;
            sum += ascending[m - 1];
            if (sum < binomial(m, 2))
                return false;
        }
        return sum == binomial(s.size(), 2);
    }

    auto transitive_triples_by_degrees(const Tournament & t) -> std::int64_t
    {
        // each transitive triple has exactly one source and one sink
        std::int64_t twice = 0;
        for (int v = 0 ; v < t.n() ; ++v) {
            int d = t.out_degree(v);
            twice += binomial(d, 2) + binomial(t.n() - 1 - d, 2);
        }
        return twice / 2;
    }

    auto census(const Tournament & t) -> TriangleCensus
    {
        TriangleCensus result;
        int n = t.n();
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                for (int c = b + 1 ; c < n ; ++c) {
                    bool ab = t.beats(a, b), bc = t.beats(b, c), ca = t.beats(c, a);
                    if (ab == bc && bc == ca)
                        ++result.cyclic;
                    else
                        ++result.transitive;
                }

        auto by_degrees = transitive_triples_by_degrees(t);
        if (by_degrees != result.transitive)
            throw std::logic_error("transitive triple count " + std::to_string(result.transitive)
                    + " disagrees with degree formula " + std::to_string(by_degrees));
        return result;
    }

    auto eq1_lower_bound(int k) -> Rational
    {
        if (k < 3)
            throw std::invalid_argument("eq1_lower_bound needs k >= 3");
        return Rational(std::int64_t{ k } * (k - 1) * (k - 3), 8);
    }

    auto reverse(const Tournament & t) -> Tournament
    {
        Tournament result(t.n());
        for (int u = 0 ; u < t.n() ; ++u)
            for (int v = u + 1 ; v < t.n() ; ++v)
                if (t.beats(u, v))
                    result.orient(v, u);
        return result;
    }

    auto induced(const Tournament & t, std::span<const int> vertices) -> Tournament
    {
        VertexSet mask = 0;
        for (int v : vertices) {
            if (v < 0 || v >= t.n())
                throw std::out_of_range("vertex " + std::to_string(v) + " not in tournament");
            mask |= VertexSet{ 1 } << v;
        }
        return induced(t, mask);
    }

    auto induced(const Tournament & t, VertexSet vertices) -> Tournament
    {
        if (vertices == 0)
            throw std::invalid_argument("induced subtournament needs at least one vertex");
        if (vertices & ~t.all_vertices())
            throw std::out_of_range("vertex set exceeds tournament");

        std::vector<int> order;
        for (auto s = vertices ; s ; s &= s - 1)
            order.push_back(std::countr_zero(s));

        Tournament result(order.size());
        for (std::size_t i = 0 ; i < order.size() ; ++i)
            for (std::size_t j = i + 1 ; j < order.size() ; ++j)
                if (! t.beats(order[i], order[j]))
                    result.orient(j, i);
        return result;
    }

    auto random_tournament(int n, std::uint64_t seed) -> Tournament
    {
        Tournament result(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (! (hash64(seed, edge_index(n, i, j)) & 1))
                    result.orient(j, i);
        return result;
    }

    auto transitive_tournament(int n) -> Tournament
    {
        return Tournament(n);
    }

    auto cyclic_triangle() -> Tournament
    {
        Tournament result(3);
        result.orient(2, 0);
        return result;
    }

    auto is_transitive_on(const Tournament & t, VertexSet vertices) -> bool
    {
        // transitive iff the out-degrees inside the set are pairwise distinct
        VertexSet seen = 0;
        for (auto s = vertices ; s ; s &= s - 1) {
            int d = std::popcount(t.out_set(std::countr_zero(s)) & vertices);
            if ((seen >> d) & 1)
                return false;
            seen |= VertexSet{ 1 } << d;
        }
        return true;
    }

    auto is_transitive(const Tournament & t) -> bool
    {
        return is_transitive_on(t, t.all_vertices());
    }

    namespace
    {
        struct TransitiveSubsetSearch
        {
            const Tournament & t;
            VertexSet best = 0;
            int best_size = 0;

            auto expand(VertexSet chosen, int chosen_size, VertexSet candidates) -> void
            {
                if (chosen_size > best_size) {
                    best = chosen;
                    best_size = chosen_size;
                }
                if (chosen_size + std::popcount(candidates) <= best_size)
                    return;

                // whichever vertex comes next, everything after it must be one
                // of its out-neighbours
                int longest = 0;
                for (auto s = candidates ; s ; s &= s - 1)
                    longest = std::max(longest, std::popcount(t.out_set(std::countr_zero(s)) & candidates));
                if (chosen_size + 1 + longest <= best_size)
                    return;

                for (auto s = candidates ; s ; s &= s - 1) {
                    int v = std::countr_zero(s);
                    expand(chosen | (VertexSet{ 1 } << v), chosen_size + 1, candidates & t.out_set(v));
                }
            }
        };
    }

    auto max_transitive_subset(const Tournament & t) -> std::vector<int>
    {
        if (t.n() > 24)
            throw std::invalid_argument("max_transitive_subset refuses n > 24");

        TransitiveSubsetSearch search{ t };
        search.expand(0, 0, t.all_vertices());

        std::vector<int> result;
        for (auto s = search.best ; s ; s &= s - 1)
            result.push_back(std::countr_zero(s));
        return result;
    }

    auto serialize(const Tournament & t) -> std::string
    {
        std::string result = "n=" + std::to_string(t.n()) + "\n";
        for (int i = 0 ; i < t.n() ; ++i)
            for (int j = i + 1 ; j < t.n() ; ++j)
                result += t.beats(i, j) ? '1' : '0';
        result += '\n';
        return result;
    }

    auto parse_tournament(std::string_view text) -> Tournament
    {
        if (! text.starts_with("n="))
            throw ParseError("expected \"n=<int>\"", 0);

        std::size_t pos = 2;
        int n = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), n);
        if (ec != std::errc() || end == text.data() + pos)
            throw ParseError("expected vertex count", pos);
        pos = end - text.data();
        if (n < 1 || n > Tournament::max_vertices)
            throw ParseError("vertex count " + std::to_string(n) + " out of range 1..64", 2);

        if (pos < text.size() && text[pos] == '\r')
            ++pos;
        if (pos < text.size() && text[pos] != '\n')
            throw ParseError("expected end of line", pos);
        ++pos;

        Tournament result(n);
        std::size_t expected = edge_count(n);
        std::size_t i = 0, j = 1;
        for (std::size_t c = 0 ; c < expected ; ++c, ++pos) {
            if (pos >= text.size())
                throw ParseError("expected " + std::to_string(expected) + " edge characters, got "
                        + std::to_string(c), std::min(pos, text.size()));
            if (text[pos] == '0')
                result.orient(j, i);
            else if (text[pos] != '1')
                throw ParseError("edge characters must be 0 or 1", pos);
            if (++j == std::size_t(n)) {
                ++i;
                j = i + 1;
            }
        }

        while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r' || text[pos] == ' '))
            ++pos;
        if (pos < text.size())
            throw ParseError("trailing characters", pos);
        return result;
    }

    auto read_tournament_file(const std::string & path) -> Tournament
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_tournament(buffer.str());
    }

    auto write_tournament_file(const std::string & path, const Tournament & t) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw std::runtime_error("cannot write " + path);
        out << serialize(t);
    }
}
