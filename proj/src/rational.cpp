#include "grasscalc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace grasscalc {

BigInt factorial(unsigned n) {
    BigInt acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

std::string rational_to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

bool all_digits(const std::string& s, size_t begin, size_t end) {
    if (begin >= end) return false;
    for (size_t i = begin; i < end; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    const auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a rational literal: \"" + text + "\"");
    };
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!all_digits(text, pos, text.size())) return fail();
        return Rational(BigInt(text));
    }
    if (!all_digits(text, pos, slash)) return fail();
    if (!all_digits(text, slash + 1, text.size())) return fail();
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) return fail();
    return Rational(num, den);
}

}  // namespace grasscalc
