#ifndef PERFDEL_POLYTOPES_HPP
#define PERFDEL_POLYTOPES_HPP

#include "perfdel/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace perfdel {

enum class Family { PHalf, PIntegral, GSection };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Deduplicated, lexicographically sorted vertex list with construction
/// parameters. For the G family, d is the polytope dimension and the
/// vertices live in R^{d+1}.
struct VertexSet {
    std::vector<Vec> vertices;
    Family family = Family::PHalf;
    int d = 0;
    int s = 0;
    int k = 0;
    int affine_dim = 0;

    int count() const { return static_cast<int>(vertices.size()); }
};

/// The diagonal set: all coordinate permutations of
///   [1^s, 0^(d-s)]     - (s-1)/(d-2k) * j   and
///   [1^(s+1), 0^(d-s-1)] -  s/(d-2k)    * j.
/// Size C(d,s) + C(d,s+1).
std::vector<Vec> construct_D(int d, int s, int k);

enum class Normalization { Half, Integral };

/// Half:     (union of +/- the diagonal set) / 2.
/// Integral: union of +/- the diagonal set, which lies in the odd
///           parity class of the scaled lattice. Exactly 2x the half
///           vertices; the origin is the center of symmetry of both.
VertexSet construct_P(int d, int s, int k, Normalization norm);

/// Section of the half-normalized (d+1, 1, 2) polytope by the exact
/// hyperplane u.v = 1/2 with u = [-1^2, 1^(d-1)]. Gives the asymmetric
/// family with C(d+2,2) - 1 vertices; requires d >= 6.
VertexSet construct_G(int d);

struct SymmetryInfo {
    bool centrally_symmetric = false;
    std::optional<Vec> center; // barycenter, when symmetric
    int affine_dim = 0;
};

SymmetryInfo symmetry_and_dim(const std::vector<Vec>& vertices);

Int binomial(int n, int k);

} // namespace perfdel

#endif
