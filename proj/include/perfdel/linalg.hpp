#ifndef PERFDEL_LINALG_HPP
#define PERFDEL_LINALG_HPP

#include "perfdel/rational.hpp"

#include <optional>
#include <vector>

namespace perfdel {

using Vec = std::vector<Rat>;

/// Dense row-major rational matrix. All operations are exact.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rat& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const Mat&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

Vec operator*(const Mat& m, const Vec& x);
Mat operator*(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);

Rat dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& x);
Vec operator-(const Vec& a);
bool is_zero(const Vec& v);

struct RankNullspace {
    int rank = 0;
    std::vector<Vec> nullspace; // exact basis of {v : m v = 0}
};

/// Row reduction with deterministic "first nonzero in column" pivoting.
RankNullspace rank_and_nullspace(const Mat& m);

int rank_of(const Mat& m);

/// Rank of the span of a row list, processed incrementally; returns as
/// soon as the rank reaches `cols`.
int row_span_rank(const std::vector<Vec>& rows, int cols);

/// Exact determinant; throws std::invalid_argument on non-square input.
Rat determinant(const Mat& m);

struct Ldlt {
    Mat lower;             // unit lower triangular
    std::vector<Rat> diag; // pivots; all > 0 iff positive definite
    bool positive_definite = false;
};

/// LDL^T of a symmetric matrix. Returns nullopt when the matrix is
/// indefinite (negative pivot, or a zero pivot whose remaining row does
/// not vanish). A successful result with some zero pivots reports a
/// positive semidefinite matrix.
std::optional<Ldlt> ldlt(const Mat& m);

/// Solves m x = rhs for positive definite m via its LDL^T factors.
Vec ldlt_solve(const Ldlt& f, const Vec& rhs);

/// Exact solution of B y = rhs for a matrix with full column rank;
/// nullopt when the system is inconsistent.
std::optional<Vec> solve_columns(const Mat& basis, const Vec& rhs);

} // namespace perfdel

#endif
