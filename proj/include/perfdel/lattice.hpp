#ifndef PERFDEL_LATTICE_HPP
#define PERFDEL_LATTICE_HPP

#include "perfdel/linalg.hpp"

#include <optional>
#include <vector>

namespace perfdel {

/// The scaled lattice Z^d + Z*(j/n), j the all-ones vector. A point x
/// belongs to it iff n*x is an integer vector whose entries all share one
/// residue mod n. Here n = d - 2k.
struct ScaledLattice {
    int d = 0;
    int n = 0;

    bool contains(const Vec& x) const;
};

/// Parity vector [(-1)^k, 1^(d-k)]; parity(x) = l0.x mod 2 splits the
/// scaled lattice into two classes. The odd class hosts the vertex
/// crosses of the symmetric family.
struct ParityFunctional {
    int d = 0;
    int k = 0;

    Vec parity_vector() const;
};

/// Normal form of a lattice point: a coordinate permutation of
/// [1^l, 0^(d-|l|)] + a*(j/n), with -d/2 <= l < d/2 (negative l means |l|
/// entries equal to -1). parity = (l+a) mod 2, j-height = l + a*d/n.
struct CanonicalRep {
    int l = 0;
    long long a = 0;
    int d = 0;
    int n = 0;

    bool operator==(const CanonicalRep&) const = default;
};

Vec point_of(const CanonicalRep& rep);
Rat j_height(const CanonicalRep& rep);
int rep_parity(const CanonicalRep& rep);
CanonicalRep negated(const CanonicalRep& rep);

/// Canonicalizes a lattice point. Returns nullopt when, after removing
/// the j/n part, the integer entries take more than two values or two
/// non-consecutive values. Throws std::invalid_argument off the lattice.
std::optional<CanonicalRep> canonical_rep(const Vec& x, const ScaledLattice& lat);

/// (l0 . x) mod 2 in {0,1}; throws when x is not a lattice point.
int parity(const Vec& x, const ParityFunctional& pf);

/// All odd-parity canonical reps with -d/2 <= l < d/2 and j-height in
/// [0, d/n) -- i.e. 0 <= l*n + a*d < d -- plus the extra element j/n.
/// For each l != 0 the height window fixes a uniquely. Sorted by l.
std::vector<CanonicalRep> candidate_reps(int d, int k);

/// origin + integer combinations of the basis columns.
struct AffineLattice {
    Vec origin;
    Mat basis; // columns are independent generators

    int ambient_dim() const { return static_cast<int>(origin.size()); }
    int rank() const { return basis.cols(); }

    /// Integer coordinates of x in this lattice, or nullopt.
    std::optional<std::vector<Int>> coordinates(const Vec& x) const;
    bool contains(const Vec& x) const { return coordinates(x).has_value(); }
    Vec point_at(const std::vector<Int>& coords) const;
};

/// The affine lattice generated by a point set: origin is the first
/// point, the basis spans the group generated by all pairwise
/// differences (canonical column Hermite form, so the result does not
/// depend on the input order).
AffineLattice affine_lattice_from_points(const std::vector<Vec>& points);

/// The odd parity class of the scaled lattice for (d, k) as an affine
/// lattice of full rank d.
AffineLattice odd_class_lattice(int d, int k);

/// Canonical column-style Hermite normal form of an integer column set.
std::vector<std::vector<Int>> hnf_columns(std::vector<std::vector<Int>> cols);

} // namespace perfdel

#endif
