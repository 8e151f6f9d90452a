/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/designs.hh>
#include <ttpack/random.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ttpack
{
    auto fano_plane() -> BlockDesign
    {
        BlockDesign result{ 7, 3, { } };
        for (int i = 0 ; i < 7 ; ++i) {
            std::vector<int> block{ i, (i + 1) % 7, (i + 3) % 7 };
            std::sort(block.begin(), block.end());
            result.blocks.push_back(block);
        }
        return result;
    }

    auto sts9_base() -> BlockDesign
    {
        // lines of AG(2, 3), point (x, y) numbered 3 x + y
        BlockDesign result{ 9, 3, { } };
        for (int slope = 0 ; slope < 3 ; ++slope)
            for (int intercept = 0 ; intercept < 3 ; ++intercept) {
                std::vector<int> block;
                for (int x = 0 ; x < 3 ; ++x)
                    block.push_back(3 * x + (slope * x + intercept) % 3);
                std::sort(block.begin(), block.end());
                result.blocks.push_back(block);
            }
        for (int x = 0 ; x < 3 ; ++x)
            result.blocks.push_back({ 3 * x, 3 * x + 1, 3 * x + 2 });
        return result;
    }

    auto permute_design(const BlockDesign & d, std::span<const int> permutation) -> BlockDesign
    {
        if (permutation.size() != std::size_t(d.point_count))
            throw std::invalid_argument("permutation size does not match point count");
        BlockDesign result{ d.point_count, d.block_size, { } };
        for (auto & b : d.blocks) {
            std::vector<int> image;
            for (int p : b)
                image.push_back(permutation[p]);
            std::sort(image.begin(), image.end());
            result.blocks.push_back(image);
        }
        return result;
    }

    auto design_key(const BlockDesign & d) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> result;
        for (auto & b : d.blocks) {
            std::uint64_t mask = 0;
            for (int p : b)
                mask |= std::uint64_t{ 1 } << p;
            result.push_back(mask);
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    auto random_permutation(int n, std::uint64_t seed) -> std::vector<int>
    {
        std::vector<int> result(n);
        std::iota(result.begin(), result.end(), 0);
        CounterRng rng(seed);
        rng.shuffle(std::span<int>(result));
        return result;
    }

    namespace
    {
        auto orbit(const BlockDesign & base) -> std::vector<BlockDesign>
        {
            std::map<std::vector<std::uint64_t>, BlockDesign> seen;
            std::vector<int> permutation(base.point_count);
            std::iota(permutation.begin(), permutation.end(), 0);
            do {
                auto image = permute_design(base, permutation);
                auto key = design_key(image);
                if (! seen.contains(key))
                    seen.emplace(std::move(key), std::move(image));
            } while (std::next_permutation(permutation.begin(), permutation.end()));

            std::vector<BlockDesign> result;
            for (auto & [key, design] : seen) {
                BlockDesign sorted{ design.point_count, design.block_size, { } };
                for (auto mask : key) {
                    std::vector<int> block;
                    for (auto s = mask ; s ; s &= s - 1)
                        block.push_back(std::countr_zero(s));
                    sorted.blocks.push_back(block);
                }
                result.push_back(sorted);
            }
            return result;
        }
    }

    auto all_sts7() -> const std::vector<BlockDesign> &
    {
        static const std::vector<BlockDesign> designs = orbit(fano_plane());
        return designs;
    }

    auto all_sts9() -> const std::vector<BlockDesign> &
    {
        static const std::vector<BlockDesign> designs = orbit(sts9_base());
        return designs;
    }

    auto random_sts7(std::uint64_t seed) -> BlockDesign
    {
        return permute_design(fano_plane(), random_permutation(7, seed));
    }

    auto sts_triangle_count(const Tournament & t, const BlockDesign & d) -> int
    {
        if (d.point_count != t.n() || d.block_size != 3)
            throw std::invalid_argument("triple system on " + std::to_string(d.point_count)
                    + " points does not fit a tournament on " + std::to_string(t.n()) + " vertices");

        int result = 0;
        for (auto & b : d.blocks) {
            bool ab = t.beats(b[0], b[1]), bc = t.beats(b[1], b[2]), ca = t.beats(b[2], b[0]);
            if (ab == bc && bc == ca)
                ++result;
        }
        return result;
    }

    auto ag2_lines(int q) -> BlockDesign
    {
        if (q != 7)
            throw std::invalid_argument("ag2_lines only supports q = 7");

        BlockDesign result{ q * q, q, { } };
        for (int slope = 0 ; slope < q ; ++slope)
            for (int intercept = 0 ; intercept < q ; ++intercept) {
                std::vector<int> line;
                for (int x = 0 ; x < q ; ++x)
                    line.push_back(q * x + (slope * x + intercept) % q);
                result.blocks.push_back(line);
            }
        for (int x = 0 ; x < q ; ++x) {
            std::vector<int> line;
            for (int y = 0 ; y < q ; ++y)
                line.push_back(q * x + y);
            result.blocks.push_back(line);
        }
        return result;
    }

    auto verify_design(const BlockDesign & d) -> bool
    {
        if (d.point_count < 2 || d.block_size < 2 || d.block_size > d.point_count)
            return false;

        std::vector<int> covered(d.point_count * d.point_count, 0);
        for (auto & b : d.blocks) {
            if (int(b.size()) != d.block_size)
                return false;
            for (std::size_t i = 0 ; i < b.size() ; ++i) {
                if (b[i] < 0 || b[i] >= d.point_count)
                    return false;
                for (std::size_t j = i + 1 ; j < b.size() ; ++j) {
                    if (b[i] == b[j])
                        return false;
                    int lo = std::min(b[i], b[j]), hi = std::max(b[i], b[j]);
                    if (++covered[lo * d.point_count + hi] > 1)
                        return false;
                }
            }
        }

        for (int i = 0 ; i < d.point_count ; ++i)
            for (int j = i + 1 ; j < d.point_count ; ++j)
                if (covered[i * d.point_count + j] != 1)
                    return false;
        return true;
    }

    auto serialize_design(const BlockDesign & d) -> std::string
    {
        std::ostringstream out;
        out << "v=" << d.point_count << " k=" << d.block_size << " b=" << d.blocks.size() << "\n";
        for (auto & b : d.blocks) {
            for (std::size_t i = 0 ; i < b.size() ; ++i)
                out << (i ? " " : "") << b[i];
            out << "\n";
        }
        return out.str();
    }

    auto parse_design(std::string_view text) -> BlockDesign
    {
        std::istringstream in{ std::string(text) };
        std::string header;
        std::getline(in, header);
        int v = 0, k = 0;
        std::size_t b = 0;
        if (std::sscanf(header.c_str(), "v=%d k=%d b=%zu", &v, &k, &b) != 3)
            throw std::invalid_argument("bad design header \"" + header + "\"");

        BlockDesign result{ v, k, { } };
        std::string line;
        while (result.blocks.size() < b && std::getline(in, line)) {
            std::istringstream fields(line);
            std::vector<int> block;
            for (int p ; fields >> p ; )
                block.push_back(p);
            if (int(block.size()) != k)
                throw std::invalid_argument("block " + std::to_string(result.blocks.size()) + " has wrong size");
            result.blocks.push_back(block);
        }
        if (result.blocks.size() != b)
            throw std::invalid_argument("design file truncated");
        return result;
    }
}
