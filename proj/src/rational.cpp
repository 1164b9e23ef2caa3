#include "ajq/rational.hpp"

#include <cctype>

namespace ajq {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty())
        return std::nullopt;

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            return std::nullopt;
        BigInt d{std::string(den)};
        if (d == 0)
            return std::nullopt;
        value = Rational(BigInt{std::string(num)}, d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (whole.empty())
            whole = "0";
        if (!all_digits(whole) || !all_digits(frac))
            return std::nullopt;
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        BigInt numerator = BigInt{std::string(whole)} * scale + BigInt{std::string(frac)};
        value = Rational(numerator, scale);
    } else {
        if (!all_digits(text))
            return std::nullopt;
        value = Rational(BigInt{std::string(text)});
    }
    if (negative)
        value = -value;
    return value;
}

std::string format_rational(const Rational& value) {
    std::string num = numerator(value).str();
    if (denominator(value) == 1)
        return num;
    return num + "/" + denominator(value).str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

} // namespace ajq
