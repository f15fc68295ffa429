#ifndef PERFDEL_RATIONAL_HPP
#define PERFDEL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace perfdel {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// GMP keeps every mpq canonical (reduced, positive denominator), so Rat
// satisfies the storage invariants by construction.

inline Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    return Rat(num) / Rat(den);
}

inline Rat ratio(long num, long den) { return ratio(Int(num), Int(den)); }

/// Canonical string form: "p/q" with q > 0, or just "p" when q = 1.
std::string to_string(const Rat& q);

/// Parses "p" or "p/q"; sign allowed on p only, q must be positive.
Rat parse_rational(std::string_view text);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

/// floor(q + sqrt(r)) for r >= 0, decided with exact integer arithmetic.
Int floor_add_sqrt(const Rat& q, const Rat& r);

/// ceil(q - sqrt(r)) for r >= 0.
Int ceil_sub_sqrt(const Rat& q, const Rat& r);

} // namespace perfdel

#endif
