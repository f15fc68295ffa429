#include "perfdel/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace perfdel {

namespace {

Int mod_into(const Int& a, const Int& n) {
    Int m = a % n;
    if (m < 0) m += n;
    return m;
}

// n*x as integers together with the shared residue class mod n;
// nullopt when x is not in the scaled lattice.
std::optional<std::pair<std::vector<Int>, Int>> scaled_integer_form(const Vec& x, const ScaledLattice& lat) {
    if (static_cast<int>(x.size()) != lat.d) return std::nullopt;
    std::vector<Int> w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Rat s = Rat(lat.n) * x[i];
        if (denominator(s) != 1) return std::nullopt;
        w[i] = numerator(s);
    }
    const Int r = mod_into(w[0], lat.n);
    for (const auto& e : w)
        if (mod_into(e, lat.n) != r) return std::nullopt;
    return std::make_pair(std::move(w), r);
}

} // namespace

bool ScaledLattice::contains(const Vec& x) const {
    return scaled_integer_form(x, *this).has_value();
}

Vec ParityFunctional::parity_vector() const {
    Vec l0(d, Rat(1));
    for (int i = 0; i < k; ++i) l0[i] = -1;
    return l0;
}

Vec point_of(const CanonicalRep& rep) {
    Vec x(rep.d, Rat(0));
    const int sign = rep.l >= 0 ? 1 : -1;
    for (int i = 0; i < std::abs(rep.l); ++i) x[i] = sign;
    const Rat shift = ratio(Int(rep.a), Int(rep.n));
    for (auto& e : x) e += shift;
    return x;
}

Rat j_height(const CanonicalRep& rep) {
    return Rat(rep.l) + ratio(Int(rep.a) * rep.d, Int(rep.n));
}

int rep_parity(const CanonicalRep& rep) {
    return static_cast<int>(((rep.l + rep.a) % 2 + 2) % 2);
}

CanonicalRep negated(const CanonicalRep& rep) {
    return CanonicalRep{-rep.l, -rep.a, rep.d, rep.n};
}

std::optional<CanonicalRep> canonical_rep(const Vec& x, const ScaledLattice& lat) {
    auto form = scaled_integer_form(x, lat);
    if (!form) throw std::invalid_argument("canonical_rep: point is not in the lattice");
    const auto& [w, r] = *form;
    const int d = lat.d, n = lat.n;

    // z = x - r*(j/n) is integral; its entries must take at most two
    // consecutive values.
    Int zmin = (w[0] - r) / n, zmax = zmin;
    for (const auto& e : w) {
        const Int z = (e - r) / n;
        zmin = std::min(zmin, z);
        zmax = std::max(zmax, z);
    }
    if (zmax - zmin > 1) return std::nullopt;

    Int a = r + zmin * n;
    if (zmax == zmin) return CanonicalRep{0, static_cast<long long>(a), d, n};

    int ones = 0;
    for (const auto& e : w)
        if ((e - r) / n == zmax) ++ones;
    int l = ones;
    if (2 * l >= d) { // fold into the window -d/2 <= l < d/2
        l = ones - d;
        a += n;
    }
    return CanonicalRep{l, static_cast<long long>(a), d, n};
}

int parity(const Vec& x, const ParityFunctional& pf) {
    const Rat v = dot(pf.parity_vector(), x);
    if (denominator(v) != 1) throw std::invalid_argument("parity: point is not in the lattice");
    return static_cast<int>(mod_into(numerator(v), 2));
}

std::vector<CanonicalRep> candidate_reps(int d, int k) {
    const int n = d - 2 * k;
    if (d < 3 || k < 1 || n < 1) throw std::invalid_argument("candidate_reps: requires d >= 3, k >= 1, d - 2k >= 1");
    std::vector<CanonicalRep> out;
    for (int l = -(d / 2); l <= (d - 1) / 2; ++l) {
        if (l == 0) continue;
        const Int a = ceil_div(Int(-l) * n, Int(d)); // unique a with 0 <= l*n + a*d < d
        CanonicalRep rep{l, static_cast<long long>(a), d, n};
        if (rep_parity(rep) == 1) out.push_back(rep);
    }
    out.push_back(CanonicalRep{0, 1, d, n});
    std::sort(out.begin(), out.end(), [](const CanonicalRep& x, const CanonicalRep& y) {
        return x.l != y.l ? x.l < y.l : x.a < y.a;
    });
    return out;
}

std::optional<std::vector<Int>> AffineLattice::coordinates(const Vec& x) const {
    if (static_cast<int>(x.size()) != ambient_dim()) return std::nullopt;
    const auto y = solve_columns(basis, x - origin);
    if (!y) return std::nullopt;
    std::vector<Int> coords;
    coords.reserve(y->size());
    for (const auto& c : *y) {
        if (denominator(c) != 1) return std::nullopt;
        coords.push_back(numerator(c));
    }
    return coords;
}

Vec AffineLattice::point_at(const std::vector<Int>& coords) const {
    if (static_cast<int>(coords.size()) != rank()) throw std::invalid_argument("point_at: size mismatch");
    Vec x = origin;
    for (int j = 0; j < rank(); ++j) {
        if (coords[j] == 0) continue;
        const Rat c(coords[j]);
        for (int i = 0; i < ambient_dim(); ++i)
            if (basis(i, j) != 0) x[i] += c * basis(i, j);
    }
    return x;
}

std::vector<std::vector<Int>> hnf_columns(std::vector<std::vector<Int>> cols) {
    if (cols.empty()) return cols;
    const std::size_t dim = cols[0].size();
    std::size_t j = 0; // next pivot slot
    for (std::size_t i = 0; i < dim && j < cols.size(); ++i) {
        // gcd-reduce row i across columns >= j by column operations
        std::size_t p = j;
        for (std::size_t l = j; l < cols.size(); ++l)
            if (cols[l][i] != 0) { p = l; break; }
        if (cols[p][i] == 0) continue;
        std::swap(cols[j], cols[p]);
        for (std::size_t l = j + 1; l < cols.size(); ++l) {
            while (cols[l][i] != 0) {
                const Int q = floor_div(cols[l][i], cols[j][i]);
                for (std::size_t rr = 0; rr < dim; ++rr) cols[l][rr] -= q * cols[j][rr];
                if (cols[l][i] != 0) std::swap(cols[l], cols[j]);
            }
        }
        if (cols[j][i] < 0)
            for (std::size_t rr = 0; rr < dim; ++rr) cols[j][rr] = -cols[j][rr];
        // canonical range for earlier columns: entries in [0, pivot)
        for (std::size_t l = 0; l < j; ++l) {
            const Int q = floor_div(cols[l][i], cols[j][i]);
            if (q != 0)
                for (std::size_t rr = 0; rr < dim; ++rr) cols[l][rr] -= q * cols[j][rr];
        }
        ++j;
    }
    cols.resize(j);
    return cols;
}

AffineLattice affine_lattice_from_points(const std::vector<Vec>& points) {
    if (points.empty()) throw std::invalid_argument("affine_lattice_from_points: need at least one point");
    const Vec& origin = points[0];
    const std::size_t dim = origin.size();
    for (const auto& p : points)
        if (p.size() != dim) throw std::invalid_argument("affine_lattice_from_points: mixed dimensions");

    Int denom(1);
    for (const auto& p : points)
        for (const auto& e : p) denom = boost::multiprecision::lcm(denom, denominator(e));

    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Int> g(dim);
        bool nonzero = false;
        for (std::size_t r = 0; r < dim; ++r) {
            const Rat scaled = Rat(denom) * (points[i][r] - points[0][r]);
            g[r] = numerator(scaled);
            nonzero |= g[r] != 0;
        }
        if (nonzero) gens.push_back(std::move(g));
    }

    const auto cols = hnf_columns(std::move(gens));
    Mat basis(static_cast<int>(dim), static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r) basis(static_cast<int>(r), static_cast<int>(c)) = ratio(cols[c][r], denom);
    return AffineLattice{origin, std::move(basis)};
}

AffineLattice odd_class_lattice(int d, int k) {
    const int n = d - 2 * k;
    if (n < 1) throw std::invalid_argument("odd_class_lattice: requires d - 2k >= 1");
    // j/n, -j/n and the standard basis vectors all have odd parity and
    // generate the class affinely.
    std::vector<Vec> pts;
    Vec jn(d, ratio(1, n));
    pts.push_back(jn);
    pts.push_back(-jn);
    for (int i = 0; i < d; ++i) {
        Vec e(d, Rat(0));
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    return affine_lattice_from_points(pts);
}

} // namespace perfdel
