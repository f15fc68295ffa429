#include "perfdel/rational.hpp"

#include <cctype>

namespace perfdel {

std::string to_string(const Rat& q) { return q.str(); }

namespace {

Int parse_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty number");
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw std::invalid_argument("parse_rational: sign without digits");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("parse_rational: invalid character in '" + std::string(s) + "'");
    return Int(std::string(s));
}

} // namespace

Rat parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text, true));
    const Int num = parse_integer(text.substr(0, slash), true);
    const Int den = parse_integer(text.substr(slash + 1), false);
    if (den <= 0) throw std::invalid_argument("parse_rational: denominator must be positive");
    return ratio(num, den);
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

Int floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

Int ceil_rat(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

Int floor_add_sqrt(const Rat& q, const Rat& r) {
    if (r < 0) throw std::invalid_argument("floor_add_sqrt: negative radicand");
    // sqrt(e/f) = sqrt(e*f)/f, so g/f <= sqrt(r) < (g+1)/f with g = isqrt(e*f).
    const Int e = numerator(r), f = denominator(r);
    const Int ef = e * f;
    const Int g = boost::multiprecision::sqrt(ef);
    Int m = floor_rat(q + ratio(g, f));
    // The two bracketing floors differ by at most one; decide exactly:
    // m+1 <= q + sqrt(r)  <=>  (m+1-q) <= 0  or  (m+1-q)^2 <= r.
    const Rat w = Rat(m + 1) - q;
    if (w <= 0 || w * w <= r) ++m;
    return m;
}

Int ceil_sub_sqrt(const Rat& q, const Rat& r) { return -floor_add_sqrt(-q, r); }

} // namespace perfdel
