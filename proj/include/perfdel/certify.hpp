#ifndef PERFDEL_CERTIFY_HPP
#define PERFDEL_CERTIFY_HPP

#include "perfdel/enumerate.hpp"
#include "perfdel/forms.hpp"
#include "perfdel/lattice.hpp"
#include "perfdel/polytopes.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace perfdel {

struct DegenerateLine : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Candidate rep together with its image under x -> (phi1(x), phi2(x)).
struct DiagramPoint {
    CanonicalRep rep;
    Rat phi1;
    Rat phi2;
};

/// Diagram points of the candidate set, sorted by (phi2, phi1). Verifies
/// that two points share a phi2 level only when their reps are mutual
/// negations.
std::vector<DiagramPoint> diagram(int d, int k);

std::pair<Rat, Rat> phi12_of_rep(const CanonicalRep& rep);

/// Solves alpha*x1 + beta*x2 = 1 through two diagram points; throws
/// DegenerateLine when they coincide or the system is singular.
PairForm support_line_through(const std::pair<Rat, Rat>& p1, const std::pair<Rat, Rat>& p2, int d);

/// Empty-ellipsoid certificate by the supporting-line method: the line
/// through the images of the two target reps must have alpha, beta > 0
/// and leave every other candidate strictly outside.
struct DelaunayCertificate {
    int d = 0, s = 0, k = 0;
    bool certified = false;
    std::string failure_reason;
    std::optional<CanonicalRep> failure_witness;
    std::optional<PairForm> line;
    std::vector<CanonicalRep> on_line;                 // the two target reps
    std::vector<std::pair<CanonicalRep, Rat>> margins; // alpha*phi1+beta*phi2 - 1, off-line reps
    std::optional<RadialForm> derived_form;
    Rat min_margin; // meaningful when certified
};

DelaunayCertificate delaunay_certificate(int d, int s, int k);

/// Outcome of the exhaustive empty-ellipsoid check over a lattice.
struct BruteForceReport {
    bool certified = false;
    std::optional<Vec> violation; // a lattice point inside, or on the boundary but not a vertex
    long long boundary_count = 0;
    Rat radius_sq;
};

/// Enumerates every lattice point x with f(x) <= common vertex value and
/// certifies iff that set is exactly the vertex set. Equidistance of f on
/// the vertices and membership of the vertices in the lattice are
/// preconditions (std::invalid_argument).
BruteForceReport bruteforce_delaunay(const VertexSet& vs, const InhomQuadratic& f, const AffineLattice& lat);

/// Uniqueness certificate: exact rank/nullspace of the vertex-evaluation
/// matrix over all inhomogeneous quadratic monomials in affine-hull
/// coordinates. Perfect iff the nullity is exactly one.
struct PerfectionCertificate {
    Family family = Family::PHalf;
    int d = 0, s = 0, k = 0;
    int vertex_count = 0;
    int m = 0;       // affine dimension of the hull
    int rank = 0;    // rank of the evaluation matrix
    int nullity = 0; // rank + nullity = C(m+2, 2)
    bool perfect = false;
    std::optional<InhomQuadratic> generator; // in frame coordinates, when nullity = 1
    Vec frame_origin;                        // affine frame used for the coordinates
    Mat frame_basis;
};

PerfectionCertificate perfection_certificate(const VertexSet& vs);

/// The cross criterion for the symmetric family: the integral vertices
/// are pairwise congruent mod twice the lattice, and they are exactly
/// the minimal vectors of the closed-form quadratic on the odd parity
/// class (by exhaustive enumeration).
struct CrossReport {
    bool congruent = false;
    bool minimal = false;
    bool certified = false;
    Rat min_norm;
    long long minimal_count = 0;
    std::optional<Vec> violation;
};

CrossReport cross_minimality_check(int d, int s, int k);

/// Determinants of the two symmetrization systems from the uniqueness
/// proof, assembled exactly, against their closed forms
///   (2/n)(d-1)(s-d+1)(s-d)(d-2-n)  and  8(d-2-n)(-d+s+1),  n = d-2k.
struct UniquenessDeterminants {
    Rat det4;
    Rat det3;
    Rat closed4;
    Rat closed3;
    bool match = false;
};

UniquenessDeterminants uniqueness_determinants(int d, int k, int s);

// --- serialization & re-validation ---------------------------------

nlohmann::json rep_to_json(const CanonicalRep& rep);
CanonicalRep rep_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DelaunayCertificate& cert);
nlohmann::json to_json(const PerfectionCertificate& cert);

nlohmann::json vertex_set_to_json(const VertexSet& vs);
std::vector<Vec> vertices_from_json(const nlohmann::json& j);
std::string vertex_set_to_csv(const VertexSet& vs);

/// Re-checks a serialized supporting-line certificate from its payload
/// alone: candidate set rebuilt from (d, k), line re-evaluated on every
/// element, status and minimum margin reproduced.
bool revalidate_delaunay(const nlohmann::json& cert);

/// Re-checks a serialized perfection certificate against a vertex list:
/// counts, the binomial rank identity, and exact vanishing of the
/// generator on every vertex (in the serialized frame).
bool revalidate_perfection(const nlohmann::json& cert, const std::vector<Vec>& vertices);

} // namespace perfdel

#endif
