/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/rational.hh>

#include <charconv>
#include <stdexcept>
#include <string>

namespace ttpack
{
    auto to_string(const Rational & r) -> std::string
    {
        if (r.denominator() == 1)
            return std::to_string(r.numerator());
        return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    }

    namespace
    {
        auto parse_integer(std::string_view text) -> std::int64_t
        {
            std::int64_t value = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || end != text.data() + text.size() || text.empty())
                throw std::invalid_argument("not an integer: \"" + std::string(text) + "\"");
            return value;
        }
    }

    auto parse_rational(std::string_view text) -> Rational
    {
        if (auto slash = text.find('/') ; slash != std::string_view::npos) {
            auto den = parse_integer(text.substr(slash + 1));
            if (den == 0)
                throw std::invalid_argument("zero denominator");
            return Rational(parse_integer(text.substr(0, slash)), den);
        }

        if (auto dot = text.find('.') ; dot != std::string_view::npos) {
            auto whole = text.substr(0, dot);
            auto fraction = text.substr(dot + 1);
            if (fraction.size() > 15)
                throw std::invalid_argument("too many decimal places");
            bool negative = whole.starts_with('-');
            if (negative)
                whole.remove_prefix(1);
            std::int64_t scale = 1;
            for (std::size_t i = 0 ; i < fraction.size() ; ++i)
                scale *= 10;
            Rational value = Rational(whole.empty() ? 0 : parse_integer(whole))
                + Rational(fraction.empty() ? 0 : parse_integer(fraction), scale);
            return negative ? -value : value;
        }

        return Rational(parse_integer(text));
    }

    auto to_double(const Rational & r) -> double
    {
        return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    }

    auto floor(const Rational & r) -> std::int64_t
    {
        auto q = r.numerator() / r.denominator();
        if (r.numerator() % r.denominator() != 0 && r.numerator() < 0)
            --q;
        return q;
    }

    auto ceil(const Rational & r) -> std::int64_t
    {
        return -floor(-r);
    }
}
