/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/enumeration.hh>
#include <ttpack/parallel.hh>

#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ttpack
{
    auto CanonicalForm::to_string() const -> std::string
    {
        int m = edge_count(n);
        std::string result(m, '0');
        for (int b = 0 ; b < m ; ++b)
            if ((code >> (m - 1 - b)) & 1)
                result[b] = '1';
        return result;
    }

    auto CanonicalForm::to_tournament() const -> Tournament
    {
        return parse_tournament("n=" + std::to_string(n) + "\n" + to_string() + "\n");
    }

    auto parse_canonical_code(int n, std::string_view bits) -> CanonicalForm
    {
        if (n < 1 || n > 10 || bits.size() != std::size_t(edge_count(n)))
            throw std::invalid_argument("bad canonical code of length " + std::to_string(bits.size())
                    + " for n=" + std::to_string(n));
        CanonicalForm result{ n, 0 };
        for (char c : bits) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("canonical code characters must be 0 or 1");
            result.code = (result.code << 1) | (c == '1');
        }
        return result;
    }

    namespace
    {
        /**
         * Positions are filled left to right. Row i of the code is the
         * adjacency of the vertex at position i to every later position, so
         * once the vertex at position i is chosen, the least row i is obtained
         * by putting, inside every cell of still interchangeable positions,
         * the in-neighbours (zero bits) before the out-neighbours. Only
         * candidates achieving the least row are explored further, and a
         * branch is dropped as soon as its prefix exceeds the best code seen.
         */
        struct CanonicalSearch
        {
            const Tournament & t;
            int n;
            int total_bits;
            std::uint64_t best = ~std::uint64_t{ 0 };
            bool have_best = false;

            struct State
            {
                std::array<int, 10> at;     // vertex at each position
                unsigned cell_starts;       // bit p set iff a cell begins at position p
            };

            auto cell_end(const State & s, int start) const -> int
            {
                int e = start + 1;
                while (e < n && ! ((s.cell_starts >> e) & 1))
                    ++e;
                return e;
            }

            auto place(const State & s, int i, int candidate_pos, State & out) const -> std::uint64_t
            {
                out = s;
                std::swap(out.at[i], out.at[candidate_pos]);
                int v = out.at[i];

                std::uint64_t row = 0;
                out.cell_starts |= 1u << i;
                int start = i + 1, end = cell_end(s, i);
                while (start < n) {
                    // stable partition: in-neighbours of v first
                    std::array<int, 10> zeros, ones;
                    int nz = 0, no = 0;
                    for (int p = start ; p < end ; ++p) {
                        if (t.beats(v, out.at[p]))
                            ones[no++] = out.at[p];
                        else
                            zeros[nz++] = out.at[p];
                    }
                    for (int z = 0 ; z < nz ; ++z)
                        out.at[start + z] = zeros[z];
                    for (int o = 0 ; o < no ; ++o)
                        out.at[start + nz + o] = ones[o];
                    row = (row << (nz + no)) | ((std::uint64_t{ 1 } << no) - 1);
                    out.cell_starts |= 1u << start;
                    if (nz > 0 && no > 0)
                        out.cell_starts |= 1u << (start + nz);
                    start = end;
                    if (start < n)
                        end = cell_end(s, start);
                }
                return row;
            }

            auto search(const State & s, int i, std::uint64_t prefix, int prefix_bits) -> void
            {
                if (have_best && prefix > (best >> (total_bits - prefix_bits)))
                    return;

                if (i >= n - 1) {
                    if (! have_best || prefix < best) {
                        best = prefix;
                        have_best = true;
                    }
                    return;
                }

                int end = cell_end(s, i);
                int row_bits = n - 1 - i;

                std::array<State, 10> children;
                std::array<std::uint64_t, 10> rows;
                std::uint64_t least = ~std::uint64_t{ 0 };
                for (int p = i ; p < end ; ++p) {
                    rows[p - i] = place(s, i, p, children[p - i]);
                    least = std::min(least, rows[p - i]);
                }

                for (int p = i ; p < end ; ++p)
                    if (rows[p - i] == least)
                        search(children[p - i], i + 1, (prefix << row_bits) | least, prefix_bits + row_bits);
            }
        };
    }

    auto canonical_form(const Tournament & t) -> CanonicalForm
    {
        if (t.n() > 10)
            throw std::invalid_argument("canonical_form supports n <= 10, got " + std::to_string(t.n()));

        CanonicalSearch search{ t, t.n(), edge_count(t.n()) };
        CanonicalSearch::State root;
        for (int v = 0 ; v < t.n() ; ++v)
            root.at[v] = v;
        root.cell_starts = 1;
        search.search(root, 0, 0, 0);
        return CanonicalForm{ t.n(), search.best };
    }

    auto enumerate_nonisomorphic(int n, unsigned workers) -> std::vector<Tournament>
    {
        if (n < 1 || n > 8)
            throw std::invalid_argument("enumerate_nonisomorphic supports 1 <= n <= 8, got " + std::to_string(n));

        std::vector<Tournament> classes{ Tournament(1) };
        for (int order = 2 ; order <= n ; ++order) {
            std::vector<std::vector<std::uint64_t>> found(classes.size());
            parallel_for(classes.size(), workers, [&] (std::size_t c) {
                std::set<std::uint64_t> codes;
                for (std::uint64_t mask = 0 ; mask < (std::uint64_t{ 1 } << (order - 1)) ; ++mask) {
                    Tournament extended(order);
                    for (int u = 0 ; u < order - 1 ; ++u)
                        for (int v = u + 1 ; v < order - 1 ; ++v)
                            if (! classes[c].beats(u, v))
                                extended.orient(v, u);
                    for (int u = 0 ; u < order - 1 ; ++u)
                        if ((mask >> u) & 1)
                            extended.orient(order - 1, u);
                    codes.insert(canonical_form(extended).code);
                }
                found[c].assign(codes.begin(), codes.end());
            });

            std::set<std::uint64_t> all;
            for (auto & f : found)
                all.insert(f.begin(), f.end());

            classes.clear();
            for (auto code : all)
                classes.push_back(CanonicalForm{ order, code }.to_tournament());
        }
        return classes;
    }

    auto filter_by_score(std::span<const Tournament> classes, const ScoreSequence & s) -> std::vector<Tournament>
    {
        std::vector<Tournament> result;
        for (auto & t : classes)
            if (score(t) == s)
                result.push_back(t);
        return result;
    }

    auto scores_with_triangle_count(std::span<const Tournament> classes, std::int64_t t) -> std::set<ScoreSequence>
    {
        std::set<ScoreSequence> result;
        for (auto & c : classes)
            if (census(c).cyclic == t)
                result.insert(score(c));
        return result;
    }

    auto scores_with_triangle_count(int n, std::int64_t t) -> std::set<ScoreSequence>
    {
        auto classes = enumerate_nonisomorphic(n);
        return scores_with_triangle_count(classes, t);
    }

    auto default_cache_directory() -> std::filesystem::path
    {
        if (auto env = std::getenv("TTPACK_CACHE_DIR") ; env && *env)
            return env;
        return "cache";
    }

    auto class_cache_path(const std::filesystem::path & dir, int n) -> std::filesystem::path
    {
        return dir / ("classes_n" + std::to_string(n) + "_v" + std::to_string(class_cache_format_version) + ".txt");
    }

    auto write_class_cache(const std::filesystem::path & file, int n, std::span<const Tournament> classes) -> void
    {
        if (file.has_parent_path())
            std::filesystem::create_directories(file.parent_path());
        auto tmp = file;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (! out)
                throw std::runtime_error("cannot write " + tmp.string());
            out << "count=" << classes.size() << " n=" << n << "\n";
            for (auto & t : classes)
                out << canonical_form(t).to_string() << "\n";
        }
        std::filesystem::rename(tmp, file);
    }

    auto read_class_cache(const std::filesystem::path & file) -> std::vector<Tournament>
    {
        std::ifstream in(file);
        if (! in)
            throw std::runtime_error("cannot open " + file.string());

        std::string header;
        std::getline(in, header);
        std::size_t count = 0;
        int n = 0;
        if (std::sscanf(header.c_str(), "count=%zu n=%d", &count, &n) != 2)
            throw std::runtime_error("bad cache header in " + file.string());

        std::vector<Tournament> result;
        std::string line;
        while (result.size() < count && std::getline(in, line)) {
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            result.push_back(parse_canonical_code(n, line).to_tournament());
        }
        if (result.size() != count)
            throw std::runtime_error("truncated cache " + file.string());
        return result;
    }

    auto load_or_enumerate(int n, const std::optional<std::filesystem::path> & cache_dir, unsigned workers)
        -> std::vector<Tournament>
    {
        if (cache_dir) {
            auto file = class_cache_path(*cache_dir, n);
            if (std::filesystem::exists(file)) {
                try {
                    return read_class_cache(file);
                }
                catch (const std::exception &) {
                    // fall through and regenerate
                }
            }
        }

        auto classes = enumerate_nonisomorphic(n, workers);
        if (cache_dir)
            write_class_cache(class_cache_path(*cache_dir, n), n, classes);
        return classes;
    }
}
