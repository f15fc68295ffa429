#include "perfdel/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace perfdel {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec operator*(const Mat& m, const Vec& x) {
    if (static_cast<int>(x.size()) != m.cols()) throw std::invalid_argument("mat*vec: size mismatch");
    Vec y(m.rows(), Rat(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && x[j] != 0) y[i] += m(i, j) * x[j];
    return y;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat*mat: size mismatch");
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec+vec: size mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec-vec: size mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Rat& c, const Vec& x) {
    Vec r(x);
    for (auto& e : r) e *= c;
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a);
    for (auto& e : r) e = -e;
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<int> rref(Mat& r) {
    const int nr = r.rows(), nc = r.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int p = -1;
        for (int i = row; i < nr; ++i)
            if (r(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = col; j < nc; ++j) std::swap(r(p, j), r(row, j));
        const Rat inv = Rat(1) / r(row, col);
        for (int j = col; j < nc; ++j) r(row, j) *= inv;
#pragma omp parallel for schedule(static) if (nr >= 96)
        for (int i = 0; i < nr; ++i) {
            if (i == row || r(i, col) == 0) continue;
            const Rat f = r(i, col);
            for (int j = col; j < nc; ++j)
                if (r(row, j) != 0) r(i, j) -= f * r(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

RankNullspace rank_and_nullspace(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("rank_and_nullspace: empty matrix");
    Mat r = m;
    const auto pivots = rref(r);
    RankNullspace out;
    out.rank = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(m.cols(), Rat(0));
        v[fc] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r(static_cast<int>(pr), fc);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

int rank_of(const Mat& m) {
    Mat r = m;
    return static_cast<int>(rref(r).size());
}

int row_span_rank(const std::vector<Vec>& rows, int cols) {
    std::vector<Vec> echelon;           // normalized pivot rows
    std::vector<int> pivot_col;         // ascending
    for (const auto& row : rows) {
        Vec r = row;
        for (std::size_t e = 0; e < echelon.size(); ++e)
            if (r[pivot_col[e]] != 0) {
                const Rat f = r[pivot_col[e]];
                for (int j = pivot_col[e]; j < cols; ++j)
                    if (echelon[e][j] != 0) r[j] -= f * echelon[e][j];
            }
        int p = -1;
        for (int j = 0; j < cols; ++j)
            if (r[j] != 0) { p = j; break; }
        if (p < 0) continue;
        const Rat inv = Rat(1) / r[p];
        for (int j = p; j < cols; ++j) r[j] *= inv;
        const auto pos = std::upper_bound(pivot_col.begin(), pivot_col.end(), p) - pivot_col.begin();
        pivot_col.insert(pivot_col.begin() + pos, p);
        echelon.insert(echelon.begin() + pos, std::move(r));
        if (static_cast<int>(echelon.size()) == cols) break;
    }
    return static_cast<int>(echelon.size());
}

Rat determinant(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
    const int n = m.rows();
    Mat a = m;
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) { p = i; break; }
        if (p < 0) return Rat(0);
        if (p != col) {
            for (int j = col; j < n; ++j) std::swap(a(p, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        const Rat inv = Rat(1) / a(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rat f = a(i, col) * inv;
            for (int j = col; j < n; ++j)
                if (a(col, j) != 0) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

std::optional<Ldlt> ldlt(const Mat& m) {
    const int n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("ldlt: matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument("ldlt: matrix must be symmetric");

    Mat a = m; // lower triangle holds the running Schur complement
    Ldlt f{Mat::identity(n), std::vector<Rat>(n, Rat(0)), true};
    for (int j = 0; j < n; ++j) {
        const Rat p = a(j, j);
        if (p < 0) return std::nullopt;
        if (p == 0) {
            // Semidefinite only if the whole remaining row/column vanishes.
            for (int i = j + 1; i < n; ++i)
                if (a(i, j) != 0) return std::nullopt;
            f.positive_definite = false;
            continue;
        }
        f.diag[j] = p;
        for (int i = j + 1; i < n; ++i) f.lower(i, j) = a(i, j) / p;
        for (int i = j + 1; i < n; ++i) {
            if (a(i, j) == 0) continue;
            for (int c = j + 1; c <= i; ++c)
                if (a(c, j) != 0) a(i, c) -= f.lower(i, j) * a(c, j);
        }
    }
    return f;
}

Vec ldlt_solve(const Ldlt& f, const Vec& rhs) {
    const int n = f.lower.rows();
    if (static_cast<int>(rhs.size()) != n) throw std::invalid_argument("ldlt_solve: size mismatch");
    Vec z = rhs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (f.lower(i, j) != 0) z[i] -= f.lower(i, j) * z[j];
    for (int i = 0; i < n; ++i) {
        if (f.diag[i] == 0) throw std::invalid_argument("ldlt_solve: factor is singular");
        z[i] /= f.diag[i];
    }
    for (int i = n - 1; i >= 0; --i)
        for (int j = i + 1; j < n; ++j)
            if (f.lower(j, i) != 0) z[i] -= f.lower(j, i) * z[j];
    return z;
}

std::optional<Vec> solve_columns(const Mat& basis, const Vec& rhs) {
    const int nr = basis.rows(), nc = basis.cols();
    if (static_cast<int>(rhs.size()) != nr) throw std::invalid_argument("solve_columns: size mismatch");
    if (nc == 0) return is_zero(rhs) ? std::optional<Vec>(Vec{}) : std::nullopt;
    Mat aug(nr, nc + 1);
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nc; ++j) aug(i, j) = basis(i, j);
        aug(i, nc) = rhs[i];
    }
    const auto pivots = rref(aug);
    Vec y(nc, Rat(0));
    int row = 0;
    for (int col : pivots) {
        if (col == nc) return std::nullopt; // pivot in rhs column: inconsistent
        y[col] = aug(row, nc);
        ++row;
    }
    if (static_cast<int>(pivots.size()) < nc) throw std::invalid_argument("solve_columns: columns not independent");
    return y;
}

} // namespace perfdel
