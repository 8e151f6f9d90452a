/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/constructions.hh>
#include <ttpack/packing.hh>
#include <ttpack/random.hh>

#include <stdexcept>

namespace ttpack
{
    auto parse_filler(const std::string & name) -> Filler
    {
        if (name == "transitive")
            return Filler::Transitive;
        if (name == "random")
            return Filler::Random;
        throw std::invalid_argument("unknown filler \"" + name + "\"");
    }

    auto to_string(Filler f) -> std::string
    {
        return f == Filler::Transitive ? "transitive" : "random";
    }

    auto build(const ConstructionSpec & spec) -> Tournament
    {
        switch (spec.kind) {
            case ConstructionKind::Turan3: return turan3_tournament(spec.n, spec.filler, spec.seed);
            case ConstructionKind::QR7:    return qr7();
            case ConstructionKind::Blowup: return blowup(qr7(), spec.factor, spec.filler, spec.seed);
        }
        throw std::logic_error("unknown construction");
    }

    auto turan3_class_sizes(int n) -> std::array<int, 3>
    {
        int first = (n + 2) / 3;
        int second = (n - first + 1) / 2;
        return { first, second, n - first - second };
    }

    auto turan3_classes(int n) -> std::vector<int>
    {
        auto sizes = turan3_class_sizes(n);
        std::vector<int> result;
        for (int c = 0 ; c < 3 ; ++c)
            result.insert(result.end(), sizes[c], c);
        return result;
    }

    auto turan3_upper_bound(int n) -> std::int64_t
    {
        return ceil(Rational(std::int64_t{ n } * (n - 1), 6) - Rational(n, 3));
    }

    namespace
    {
        auto fill_classes(Tournament & t, std::span<const int> class_of, Filler filler, std::uint64_t seed) -> void
        {
            for (int i = 0 ; i < t.n() ; ++i)
                for (int j = i + 1 ; j < t.n() ; ++j)
                    if (class_of[i] == class_of[j]) {
                        bool forward = filler == Filler::Transitive || (hash64(seed, edge_index(t.n(), i, j)) & 1);
                        if (forward)
                            t.orient(i, j);
                        else
                            t.orient(j, i);
                    }
        }
    }

    auto turan3_tournament(int n, Filler filler, std::uint64_t seed) -> Tournament
    {
        if (n < 3)
            throw std::invalid_argument("turan3_tournament needs n >= 3");

        auto class_of = turan3_classes(n);
        Tournament result(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (class_of[i] != class_of[j]) {
                    // class c beats class c + 1 mod 3
                    if ((class_of[i] + 1) % 3 == class_of[j])
                        result.orient(i, j);
                    else
                        result.orient(j, i);
                }
        fill_classes(result, class_of, filler, seed);

        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                for (int c = b + 1 ; c < n ; ++c)
                    if (class_of[a] != class_of[b] && class_of[b] != class_of[c] && class_of[a] != class_of[c]
                            && is_transitive_on(result, (VertexSet{ 1 } << a) | (VertexSet{ 1 } << b) | (VertexSet{ 1 } << c)))
                        throw std::logic_error("turan3 construction produced a transitive triple across all classes");
        return result;
    }

    auto qr7() -> Tournament
    {
        Tournament result(7);
        for (int i = 0 ; i < 7 ; ++i)
            for (int j = 0 ; j < 7 ; ++j) {
                int d = ((j - i) % 7 + 7) % 7;
                if (d == 1 || d == 2 || d == 4)
                    result.orient(i, j);
            }
        return result;
    }

    auto blowup_classes(int base_n, int factor) -> std::vector<int>
    {
        std::vector<int> result;
        for (int v = 0 ; v < base_n ; ++v)
            result.insert(result.end(), factor, v);
        return result;
    }

    auto blowup(const Tournament & base, int factor, Filler filler, std::uint64_t seed) -> Tournament
    {
        if (factor < 1)
            throw std::invalid_argument("blow-up factor must be at least 1");
        if (base.n() * factor > Tournament::max_vertices)
            throw std::invalid_argument("blow-up of order " + std::to_string(base.n()) + " by "
                    + std::to_string(factor) + " exceeds 64 vertices");

        int n = base.n() * factor;
        auto class_of = blowup_classes(base.n(), factor);
        Tournament result(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (class_of[i] != class_of[j] && base.beats(class_of[j], class_of[i]))
                    result.orient(j, i);
        fill_classes(result, class_of, filler, seed);

        if (base.n() >= 4 && enumerate_copies(base, 4).copies.empty()
                && ! every_copy_uses_intra_edge(result, class_of, 4))
            throw std::logic_error("blow-up has a TT_4 avoiding every class");
        return result;
    }

    auto intra_class_edges(std::span<const int> class_of) -> std::int64_t
    {
        std::int64_t result = 0;
        for (std::size_t i = 0 ; i < class_of.size() ; ++i)
            for (std::size_t j = i + 1 ; j < class_of.size() ; ++j)
                result += class_of[i] == class_of[j];
        return result;
    }

    auto every_copy_uses_intra_edge(const Tournament & t, std::span<const int> class_of, int k) -> bool
    {
        if (k > t.n())
            return true;
        for (auto & c : enumerate_copies(t, k).copies) {
            std::uint64_t classes = 0;
            for (auto s = c.vertices ; s ; s &= s - 1)
                classes |= std::uint64_t{ 1 } << class_of[std::countr_zero(s)];
            if (std::popcount(classes) == k)
                return false;
        }
        return true;
    }
}
