#include "perfdel/forms.hpp"

#include <string>

namespace perfdel {

Rat PairForm::eval(const Vec& x) const {
    const auto [p1, p2] = eval_phi12(x);
    return alpha * p1 + beta * p2;
}

Rat RadialForm::eval(const Vec& x) const {
    Rat norm(0), height(0);
    for (const auto& e : x) {
        norm += e * e;
        height += e;
    }
    return A * norm + B * height * height;
}

Rat InhomQuadratic::eval(const Vec& x) const {
    Rat v = constant;
    for (int i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        v += linear[i] * x[i];
        for (int j = 0; j < dim(); ++j)
            if (gram(i, j) != 0 && x[j] != 0) v += x[i] * gram(i, j) * x[j];
    }
    return v;
}

std::pair<Rat, Rat> eval_phi12(const Vec& x) {
    const int d = static_cast<int>(x.size());
    Rat sum(0), norm(0);
    for (const auto& e : x) {
        sum += e;
        norm += e * e;
    }
    const Rat phi1 = sum * sum;
    return {phi1, norm - phi1 / d}; // |x|^2 = phi2 + (j.x)^2/d
}

RadialForm pair_to_radial(const PairForm& pf) {
    return RadialForm{pf.beta, pf.alpha - pf.beta / pf.d, pf.d};
}

RadialForm phi_main(int d, int s, int k) {
    if (s < 1 || k < 2 || d < k * (2 * s + 1) + 1)
        throw ParameterOutOfRange("phi_main: requires s >= 1, k >= 2, d >= k(2s+1)+1 (d=" +
                                  std::to_string(d) + ", s=" + std::to_string(s) +
                                  ", k=" + std::to_string(k) + ")");
    const Int D = d, S = s, K = k;
    RadialForm rf{Rat(4 * K * (D - K * (2 * S + 1))),
                  Rat(D * D - (4 * K + 2 * S + 1) * D + 4 * K * (2 * S + K)), d};
    if (!rf.positive_definite())
        throw std::logic_error("phi_main: closed form not positive definite");
    return rf;
}

InhomQuadratic as_inhom(const RadialForm& rf, const Vec& center, const Rat& radius_sq) {
    const int d = rf.d;
    if (static_cast<int>(center.size()) != d) throw std::invalid_argument("as_inhom: center dimension mismatch");
    InhomQuadratic f{Mat(d, d), Vec(d, Rat(0)), Rat(0)};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) f.gram(i, j) = (i == j) ? rf.A + rf.B : rf.B;
    const Vec gc = f.gram * center;
    for (int i = 0; i < d; ++i) f.linear[i] = -2 * gc[i];
    f.constant = dot(center, gc) - radius_sq;
    return f;
}

InhomQuadratic degenerate_perfect(const Vec& a) {
    const int d = static_cast<int>(a.size());
    InhomQuadratic f{Mat(d, d), Vec(d, Rat(0)), Rat(0)};
    for (int i = 0; i < d; ++i) {
        f.linear[i] = -a[i];
        for (int j = 0; j < d; ++j) f.gram(i, j) = a[i] * a[j];
    }
    return f;
}

namespace {

Vec flatten(const InhomQuadratic& f) {
    Vec c;
    c.reserve(static_cast<std::size_t>(f.dim()) * f.dim() + f.dim() + 1);
    for (int i = 0; i < f.dim(); ++i)
        for (int j = 0; j < f.dim(); ++j) c.push_back(f.gram(i, j));
    for (const auto& e : f.linear) c.push_back(e);
    c.push_back(f.constant);
    return c;
}

} // namespace

std::optional<Rat> proportional(const InhomQuadratic& f, const InhomQuadratic& g) {
    const Vec fc = flatten(f);
    if (is_zero(fc)) throw std::invalid_argument("proportional: f must be nonzero");
    if (f.dim() != g.dim()) return std::nullopt;
    const Vec gc = flatten(g);
    Rat c(0);
    for (std::size_t i = 0; i < fc.size(); ++i)
        if (fc[i] != 0) { c = gc[i] / fc[i]; break; }
    if (c == 0) return std::nullopt;
    for (std::size_t i = 0; i < fc.size(); ++i)
        if (gc[i] != c * fc[i]) return std::nullopt;
    return c;
}

InhomQuadratic compose_affine(const InhomQuadratic& f, const Vec& origin, const Mat& basis) {
    if (basis.rows() != f.dim() || static_cast<int>(origin.size()) != f.dim())
        throw std::invalid_argument("compose_affine: dimension mismatch");
    const Mat bt = transpose(basis);
    InhomQuadratic g{bt * (f.gram * basis), bt * ((Rat(2) * (f.gram * origin)) + f.linear), f.eval(origin)};
    return g;
}

} // namespace perfdel
