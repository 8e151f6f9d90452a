/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_RATIONAL_HH
#define TTPACK_GUARD_RATIONAL_HH 1

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace boost
{
    // Under C++20 the rewritten-candidate rules make boost's templated
    // rational == integer overloads call each other forever. Exact
    // non-template overloads win overload resolution and sidestep that.
    inline auto operator== (const rational<std::int64_t> & a, std::int64_t b) -> bool
    {
        return a.denominator() == 1 && a.numerator() == b;
    }

    inline auto operator== (const rational<std::int64_t> & a, int b) -> bool
    {
        return a == std::int64_t{ b };
    }
}

namespace ttpack
{
    using Rational = boost::rational<std::int64_t>;

    /// "p/q" in lowest terms, or just "p" when q = 1.
    auto to_string(const Rational & r) -> std::string;

    /// Accepts "p", "p/q" and decimal forms like "8.75".
    auto parse_rational(std::string_view text) -> Rational;

    auto to_double(const Rational & r) -> double;

    auto ceil(const Rational & r) -> std::int64_t;
    auto floor(const Rational & r) -> std::int64_t;

    inline auto binomial(std::int64_t n, std::int64_t k) -> std::int64_t
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        if (k > n - k)
            k = n - k;
        std::int64_t result = 1;
        for (std::int64_t i = 1 ; i <= k ; ++i)
            result = result * (n - k + i) / i;
        return result;
    }
}

#endif
