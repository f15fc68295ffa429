#ifndef PERFDEL_ENUMERATE_HPP
#define PERFDEL_ENUMERATE_HPP

#include "perfdel/forms.hpp"
#include "perfdel/lattice.hpp"

#include <vector>

namespace perfdel {

/// All lattice points x with f(x) <= bound, as a lexicographically
/// sorted list. The quadratic part of f restricted to the lattice span
/// must be positive definite (std::invalid_argument otherwise).
///
/// Both entry points are exact and return identical lists; the default
/// one fans the outermost branch of the coordinate search out across
/// OpenMP threads, the _serial variant is the single-threaded reference.
std::vector<Vec> enumerate_in_ellipsoid(const AffineLattice& lat, const InhomQuadratic& f, const Rat& bound);
std::vector<Vec> enumerate_in_ellipsoid_serial(const AffineLattice& lat, const InhomQuadratic& f, const Rat& bound);

/// Coarse upper estimate of the search-tree size (product of the
/// per-coordinate interval widths at the root). Used for node budgets.
double enumeration_node_estimate(const AffineLattice& lat, const InhomQuadratic& f, const Rat& bound);

} // namespace perfdel

#endif
