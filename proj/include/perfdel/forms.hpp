#ifndef PERFDEL_FORMS_HPP
#define PERFDEL_FORMS_HPP

#include "perfdel/linalg.hpp"

#include <optional>
#include <utility>

namespace perfdel {

struct ParameterOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// phi(x) = alpha*phi1(x) + beta*phi2(x), where phi1(x) = (sum x_i)^2 and
/// phi2(x) is the squared distance from x to the all-ones line.
/// Positive definite iff alpha > 0 and beta > 0.
struct PairForm {
    Rat alpha;
    Rat beta;
    int d = 0;

    Rat eval(const Vec& x) const;
    bool positive_definite() const { return alpha > 0 && beta > 0; }
    bool operator==(const PairForm&) const = default;
};

/// phi(x) = A*|x|^2 + B*(j.x)^2 with j the all-ones vector.
/// Positive definite iff A > 0 and A + B*d > 0 (B may be negative).
struct RadialForm {
    Rat A;
    Rat B;
    int d = 0;

    Rat eval(const Vec& x) const;
    bool positive_definite() const { return A > 0 && A + B * d > 0; }
    bool operator==(const RadialForm&) const = default;
};

/// General inhomogeneous quadratic f(x) = x^T gram x + linear.x + constant.
struct InhomQuadratic {
    Mat gram; // symmetric
    Vec linear;
    Rat constant;

    int dim() const { return gram.rows(); }
    Rat eval(const Vec& x) const;
    bool operator==(const InhomQuadratic&) const = default;
};

/// (phi1(x), phi2(x)) evaluated exactly.
std::pair<Rat, Rat> eval_phi12(const Vec& x);

/// Rewrites alpha*phi1 + beta*phi2 as A|x|^2 + B(j.x)^2:
/// A = beta, B = alpha - beta/d.
RadialForm pair_to_radial(const PairForm& pf);

/// The closed-form family form
///   A = 4k(d - k(2s+1)),  B = d^2 - (4k+2s+1)d + 4k(2s+k).
/// Requires s >= 1, k >= 2, d >= k(2s+1)+1; the result is checked to be
/// positive definite rather than assumed.
RadialForm phi_main(int d, int s, int k);

/// Expands phi(x - center) - radius_sq into (gram, linear, constant).
InhomQuadratic as_inhom(const RadialForm& rf, const Vec& center, const Rat& radius_sq);

/// The degenerate perfect quadratic p(x) = (a.x)(a.x - 1).
InhomQuadratic degenerate_perfect(const Vec& a);

/// Returns c != 0 with g = c*f exactly, or nullopt when no such scalar
/// exists. f must be nonzero.
std::optional<Rat> proportional(const InhomQuadratic& f, const InhomQuadratic& g);

/// Pullback through the affine map y -> origin + basis*y:
/// result(y) = f(origin + basis*y).
InhomQuadratic compose_affine(const InhomQuadratic& f, const Vec& origin, const Mat& basis);

} // namespace perfdel

#endif
