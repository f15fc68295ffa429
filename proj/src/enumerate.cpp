#include "perfdel/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace perfdel {

namespace {

// f(origin + B y) = (y - yc)^T Q (y - yc) + value_at_center, with the
// integral shift yc solving 2 Q yc = -Lvec.
struct ReducedForm {
    Mat q;            // B^T A B, positive definite
    Ldlt factors;     // Q = L D L^T
    Vec center;       // yc (rational)
    Rat value_at_center;
};

ReducedForm reduce_to_lattice(const AffineLattice& lat, const InhomQuadratic& f) {
    if (lat.ambient_dim() != f.dim()) throw std::invalid_argument("enumerate_in_ellipsoid: dimension mismatch");
    const Mat bt = transpose(lat.basis);
    Mat q = bt * (f.gram * lat.basis);
    const Vec lvec = bt * ((Rat(2) * (f.gram * lat.origin)) + f.linear);
    auto factors = ldlt(q);
    if (!factors || !factors->positive_definite)
        throw std::invalid_argument("enumerate_in_ellipsoid: restricted quadratic part is not positive definite");
    Vec center = ldlt_solve(*factors, ratio(-1, 2) * lvec);
    Rat value = f.eval(lat.origin) + dot(lvec, center) / 2;
    return ReducedForm{std::move(q), std::move(*factors), std::move(center), std::move(value)};
}

struct Search {
    const ReducedForm& rf;
    Rat budget; // bound - value_at_center

    int rank() const { return rf.factors.lower.rows(); }

    // Offset of the current level from the already fixed deeper levels:
    // c = sum_{m > level} L(m, level) * t_m.
    Rat carried_offset(int level, const std::vector<Rat>& t) const {
        Rat c(0);
        for (int m = level + 1; m < rank(); ++m)
            if (rf.factors.lower(m, level) != 0 && t[m] != 0) c += rf.factors.lower(m, level) * t[m];
        return c;
    }

    // Integer range of y at `level` given the spent part of the budget.
    std::pair<Int, Int> level_range(int level, const Rat& spent, const Rat& offset) const {
        const Rat rem = budget - spent;
        const Rat radius_sq = rem / rf.factors.diag[level];
        const Rat mid = rf.center[level] - offset;
        return {ceil_sub_sqrt(mid, radius_sq), floor_add_sqrt(mid, radius_sq)};
    }

    void dfs(int level, std::vector<Rat>& t, std::vector<Int>& y, const Rat& spent,
             std::vector<std::vector<Int>>& out) const {
        const Rat offset = carried_offset(level, t);
        const auto [lo, hi] = level_range(level, spent, offset);
        for (Int yi = lo; yi <= hi; ++yi) {
            const Rat ti = Rat(yi) - rf.center[level];
            const Rat term = rf.factors.diag[level] * (ti + offset) * (ti + offset);
            if (spent + term > budget) continue;
            t[level] = ti;
            y[level] = yi;
            if (level == 0)
                out.push_back(y);
            else
                dfs(level - 1, t, y, spent + term, out);
        }
        t[level] = 0;
    }
};

std::vector<Vec> finish(const AffineLattice& lat, std::vector<std::vector<Int>> coords) {
    std::vector<Vec> pts;
    pts.reserve(coords.size());
    for (const auto& y : coords) pts.push_back(lat.point_at(y));
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<Vec> run(const AffineLattice& lat, const InhomQuadratic& f, const Rat& bound, bool parallel) {
    if (lat.rank() == 0) {
        if (f.eval(lat.origin) <= bound) return {lat.origin};
        return {};
    }
    const ReducedForm rf = reduce_to_lattice(lat, f);
    Search search{rf, bound - rf.value_at_center};
    if (search.budget < 0) return {};

    const int top = search.rank() - 1;
    std::vector<std::vector<Int>> coords;

    if (!parallel || search.rank() < 2) {
        std::vector<Rat> t(search.rank(), Rat(0));
        std::vector<Int> y(search.rank(), Int(0));
        search.dfs(top, t, y, Rat(0), coords);
        return finish(lat, std::move(coords));
    }

    const auto [lo, hi] = search.level_range(top, Rat(0), Rat(0));
    const long long width = hi >= lo ? Int(hi - lo).convert_to<long long>() + 1 : 0;
    std::vector<std::vector<std::vector<Int>>> per_branch(static_cast<std::size_t>(width));
#pragma omp parallel for schedule(dynamic)
    for (long long b = 0; b < width; ++b) {
        const Int yi = lo + b;
        std::vector<Rat> t(search.rank(), Rat(0));
        std::vector<Int> y(search.rank(), Int(0));
        const Rat ti = Rat(yi) - rf.center[top];
        const Rat term = rf.factors.diag[top] * ti * ti;
        if (term > search.budget) continue;
        t[top] = ti;
        y[top] = yi;
        search.dfs(top - 1, t, y, term, per_branch[static_cast<std::size_t>(b)]);
    }
    for (auto& branch : per_branch)
        for (auto& y : branch) coords.push_back(std::move(y));
    return finish(lat, std::move(coords));
}

} // namespace

std::vector<Vec> enumerate_in_ellipsoid(const AffineLattice& lat, const InhomQuadratic& f, const Rat& bound) {
    return run(lat, f, bound, true);
}

std::vector<Vec> enumerate_in_ellipsoid_serial(const AffineLattice& lat, const InhomQuadratic& f, const Rat& bound) {
    return run(lat, f, bound, false);
}

double enumeration_node_estimate(const AffineLattice& lat, const InhomQuadratic& f, const Rat& bound) {
    if (lat.rank() == 0) return 1.0;
    const ReducedForm rf = reduce_to_lattice(lat, f);
    const Rat budget = bound - rf.value_at_center;
    if (budget < 0) return 0.0;
    double nodes = 1.0;
    for (int i = 0; i < lat.rank(); ++i) {
        const double width = 2.0 * std::sqrt(Rat(budget / rf.factors.diag[i]).convert_to<double>()) + 1.0;
        nodes *= width;
        if (nodes > 1e18) return 1e18;
    }
    return nodes;
}

} // namespace perfdel
