#include "perfdel/certify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace perfdel {

using nlohmann::json;

std::pair<Rat, Rat> phi12_of_rep(const CanonicalRep& rep) {
    const Rat h = j_height(rep);
    return {h * h, Rat(std::abs(rep.l)) - ratio(static_cast<long>(rep.l) * rep.l, rep.d)};
}

std::vector<DiagramPoint> diagram(int d, int k) {
    std::vector<DiagramPoint> pts;
    for (const auto& rep : candidate_reps(d, k)) {
        const auto [p1, p2] = phi12_of_rep(rep);
        pts.push_back(DiagramPoint{rep, p1, p2});
    }
    std::sort(pts.begin(), pts.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
        return a.phi2 != b.phi2 ? a.phi2 < b.phi2 : a.phi1 < b.phi1;
    });
    // Shared phi2 levels may come only from +/- pairs.
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i].phi2 == pts[i + 1].phi2 && pts[i + 1].rep != negated(pts[i].rep))
            throw std::logic_error("diagram: non-paired reps on one horizontal level");
    return pts;
}

PairForm support_line_through(const std::pair<Rat, Rat>& p1, const std::pair<Rat, Rat>& p2, int d) {
    const Rat det = p1.first * p2.second - p2.first * p1.second;
    if (det == 0) throw DegenerateLine("support_line_through: points coincide or line passes through 0");
    return PairForm{(p2.second - p1.second) / det, (p1.first - p2.first) / det, d};
}

namespace {

CanonicalRep target_rep(int t, int d, int n) {
    return CanonicalRep{t, 1 - static_cast<long long>(t), d, n};
}

// Margin evaluation shared by certificate construction and re-validation.
struct MarginScan {
    bool ok = true;
    std::optional<CanonicalRep> witness;
    std::string reason;
    std::vector<std::pair<CanonicalRep, Rat>> margins;
    Rat min_margin;
};

MarginScan scan_margins(int d, int k, int s, const PairForm& line) {
    MarginScan out;
    const auto targets = std::pair{phi12_of_rep(target_rep(s, d, d - 2 * k)),
                                   phi12_of_rep(target_rep(s + 1, d, d - 2 * k))};
    bool first = true;
    for (const auto& pt : diagram(d, k)) {
        const auto p = std::pair{pt.phi1, pt.phi2};
        if (p == targets.first || p == targets.second) {
            // only +/- the two targets may sit on the line
            if (std::abs(pt.rep.l) != s && std::abs(pt.rep.l) != s + 1) {
                out.ok = false;
                out.witness = pt.rep;
                out.reason = "unexpected candidate on a target diagram point";
                return out;
            }
            continue;
        }
        const Rat margin = line.alpha * pt.phi1 + line.beta * pt.phi2 - 1;
        out.margins.emplace_back(pt.rep, margin);
        if (first || margin < out.min_margin) {
            out.min_margin = margin;
            first = false;
        }
        if (margin <= 0) {
            out.ok = false;
            out.witness = pt.rep;
            out.reason = "candidate not strictly outside the supporting line";
            return out;
        }
    }
    return out;
}

} // namespace

DelaunayCertificate delaunay_certificate(int d, int s, int k) {
    const int n = d - 2 * k;
    if (n < 1 || s < 1 || k < 2)
        throw std::invalid_argument("delaunay_certificate: requires s >= 1, k >= 2, d - 2k >= 1");
    DelaunayCertificate cert;
    cert.d = d;
    cert.s = s;
    cert.k = k;

    if (2 * (s + 1) >= d) {
        cert.failure_reason = "target rep outside the canonical window: no valid target pair";
        return cert;
    }
    const CanonicalRep vs = target_rep(s, d, n), vs1 = target_rep(s + 1, d, n);
    cert.on_line = {vs, vs1};
    const PairForm line = support_line_through(phi12_of_rep(vs), phi12_of_rep(vs1), d);
    cert.line = line;
    cert.derived_form = pair_to_radial(line);
    if (!(line.alpha > 0 && line.beta > 0)) {
        cert.failure_reason = "supporting line is not positive";
        return cert;
    }
    auto scan = scan_margins(d, k, s, line);
    cert.margins = std::move(scan.margins);
    if (!scan.ok) {
        cert.failure_reason = scan.reason;
        cert.failure_witness = scan.witness;
        return cert;
    }
    cert.min_margin = scan.min_margin;
    cert.certified = true;
    return cert;
}

BruteForceReport bruteforce_delaunay(const VertexSet& vs, const InhomQuadratic& f, const AffineLattice& lat) {
    if (vs.vertices.empty()) throw std::invalid_argument("bruteforce_delaunay: empty vertex set");
    const Rat level = f.eval(vs.vertices.front());
    for (const auto& v : vs.vertices) {
        if (f.eval(v) != level) throw std::invalid_argument("bruteforce_delaunay: vertices are not equidistant under f");
        if (!lat.contains(v)) throw std::invalid_argument("bruteforce_delaunay: vertex outside the lattice");
    }

    BruteForceReport report;
    report.radius_sq = level; // the common vertex value, used as the sublevel bound
    const auto pts = enumerate_in_ellipsoid(lat, f, level);

    std::vector<Vec> expected = vs.vertices;
    std::sort(expected.begin(), expected.end());
    if (pts == expected) {
        report.certified = true;
        report.boundary_count = static_cast<long long>(pts.size());
        return report;
    }
    for (const auto& p : pts)
        if (!std::binary_search(expected.begin(), expected.end(), p)) {
            report.violation = p;
            break;
        }
    // vertices are lattice points at the level, so enumerate returns a
    // superset; a missing violation here would be an internal error
    if (!report.violation) throw std::logic_error("bruteforce_delaunay: mismatch without extra point");
    report.boundary_count = static_cast<long long>(pts.size());
    return report;
}

PerfectionCertificate perfection_certificate(const VertexSet& vs) {
    if (vs.vertices.empty()) throw std::invalid_argument("perfection_certificate: empty vertex set");
    PerfectionCertificate cert;
    cert.family = vs.family;
    cert.d = vs.d;
    cert.s = vs.s;
    cert.k = vs.k;
    cert.vertex_count = vs.count();

    const AffineLattice frame = affine_lattice_from_points(vs.vertices);
    cert.frame_origin = frame.origin;
    cert.frame_basis = frame.basis;
    const int m = frame.rank();
    cert.m = m;

    const int monomials = (m * (m + 1)) / 2 + m + 1;
    Mat eval(vs.count(), monomials);
    for (int r = 0; r < vs.count(); ++r) {
        const auto coords = frame.coordinates(vs.vertices[r]);
        if (!coords) throw std::logic_error("perfection_certificate: vertex outside its own hull lattice");
        Vec y(m);
        for (int i = 0; i < m; ++i) y[i] = Rat((*coords)[i]);
        int c = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) eval(r, c++) = y[i] * y[j];
        for (int i = 0; i < m; ++i) eval(r, c++) = y[i];
        eval(r, c) = 1;
    }

    const auto rn = rank_and_nullspace(eval);
    cert.rank = rn.rank;
    cert.nullity = monomials - rn.rank;
    cert.perfect = cert.nullity == 1;
    if (cert.perfect) {
        const Vec& v = rn.nullspace.front();
        InhomQuadratic g{Mat(m, m), Vec(m, Rat(0)), Rat(0)};
        int c = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                if (i == j)
                    g.gram(i, i) = v[c];
                else
                    g.gram(i, j) = g.gram(j, i) = v[c] / 2;
                ++c;
            }
        for (int i = 0; i < m; ++i) g.linear[i] = v[c++];
        g.constant = v[c];
        for (int r = 0; r < vs.count(); ++r) {
            const auto coords = frame.coordinates(vs.vertices[r]);
            Vec y(m);
            for (int i = 0; i < m; ++i) y[i] = Rat((*coords)[i]);
            if (g.eval(y) != 0) throw std::logic_error("perfection_certificate: generator does not vanish");
        }
        cert.generator = std::move(g);
    }
    return cert;
}

CrossReport cross_minimality_check(int d, int s, int k) {
    const VertexSet vs = construct_P(d, s, k, Normalization::Integral);

    // Congruence mod twice the polytope's own lattice: the diagonals are
    // differences of opposite half-normalization vertices, so the test
    // runs in the difference lattice of the half vertices.
    const VertexSet half = construct_P(d, s, k, Normalization::Half);
    const AffineLattice diff_lattice{Vec(d, Rat(0)), affine_lattice_from_points(half.vertices).basis};

    CrossReport report;
    report.congruent = true;
    const Vec& v0 = vs.vertices.front();
    for (const auto& v : vs.vertices) {
        if (!diff_lattice.contains(ratio(1, 2) * (v - v0))) {
            report.congruent = false;
            break;
        }
    }

    const RadialForm phi = phi_main(d, s, k);
    const Rat level = phi.eval(v0);
    for (const auto& v : vs.vertices)
        if (phi.eval(v) != level) throw std::logic_error("cross_minimality_check: vertices not equidistant");
    report.min_norm = level;

    const auto f = as_inhom(phi, Vec(d, Rat(0)), level);
    const auto brute = bruteforce_delaunay(vs, f, odd_class_lattice(d, k));
    report.minimal = brute.certified;
    report.minimal_count = brute.boundary_count;
    report.violation = brute.violation;
    report.certified = report.congruent && report.minimal;
    return report;
}

UniquenessDeterminants uniqueness_determinants(int d, int k, int s) {
    const int n = d - 2 * k;
    if (n < 1) throw std::invalid_argument("uniqueness_determinants: requires d - 2k >= 1");
    const Rat N(n), D(d), S(s);

    // Diagonal system in (t, alpha, beta, delta): the two vertex
    // conditions followed by the diagonal-sum and off-sum constraints.
    Mat m4(4, 4);
    {
        const Rat s1 = S - 1;
        m4(0, 0) = 1 - 2 * s1 / N + s1 * s1 / (N * N);
        m4(0, 1) = s1 - 2 * s1 * s1 / N + s1 * s1 * (D - 1) / (N * N);
        m4(0, 2) = 2 * s1 - 2 * s1 * (s1 + D - 1) / N + 2 * s1 * s1 * (D - 1) / (N * N);
        m4(0, 3) = s1 * (s1 - 1) - 2 * s1 * s1 * (D - 2) / N + s1 * s1 * (D - 1) * (D - 2) / (N * N);
        m4(1, 0) = 1 - 2 * S / N + S * S / (N * N);
        m4(1, 1) = S - 2 * S * S / N + S * S * (D - 1) / (N * N);
        m4(1, 2) = 2 * S - 2 * S * (S + D - 1) / N + 2 * S * S * (D - 1) / (N * N);
        m4(1, 3) = S * (S - 1) - 2 * S * S * (D - 2) / N + S * S * (D - 1) * (D - 2) / (N * N);
        m4(2, 0) = 1;
        m4(2, 1) = D - 1;
        m4(2, 2) = 0;
        m4(2, 3) = 0;
        m4(3, 0) = 0;
        m4(3, 1) = 0;
        m4(3, 2) = 2 * (D - 1);
        m4(3, 3) = (D - 1) * (D - 2);
    }

    // Off-diagonal system in (alpha, beta, delta): off-sum constraint,
    // the simplified delta equation with its denominator cleared, then
    // the long vertex condition.
    Mat m3(3, 3);
    {
        m3(0, 0) = 2;
        m3(0, 1) = 4 * (D - 2);
        m3(0, 2) = (D - 2) * (D - 3);
        m3(1, 0) = 0;
        m3(1, 1) = -4;
        m3(1, 2) = N - 2 * (D - 3);
        m3(2, 0) = 2 - 4 * S / N;
        m3(2, 1) = 4 * (S - 1) - 4 * S * (S + D - 3) / N;
        m3(2, 2) = (S - 1) * (S - 2) - 2 * S * (S - 1) * (D - 3) / N;
    }

    UniquenessDeterminants out{determinant(m4), determinant(m3),
                         Rat(2) / N * (D - 1) * (S - D + 1) * (S - D) * (D - 2 - N),
                         Rat(8) * (D - 2 - N) * (-D + S + 1), false};
    out.match = out.det4 == out.closed4 && out.det3 == out.closed3;
    return out;
}

namespace {

std::string rat_str(const Rat& q) { return to_string(q); }

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(rat_str(e));
    return a;
}

Vec vec_from_json(const json& a) {
    Vec v;
    for (const auto& e : a) v.push_back(parse_rational(e.get<std::string>()));
    return v;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& rows) {
    const int nr = static_cast<int>(rows.size());
    const int nc = nr > 0 ? static_cast<int>(rows[0].size()) : 0;
    Mat m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = parse_rational(rows[i][j].get<std::string>());
    return m;
}

json inhom_to_json(const InhomQuadratic& f) {
    return json{{"gram", mat_to_json(f.gram)}, {"linear", vec_to_json(f.linear)}, {"constant", rat_str(f.constant)}};
}

InhomQuadratic inhom_from_json(const json& j) {
    return InhomQuadratic{mat_from_json(j.at("gram")), vec_from_json(j.at("linear")),
                          parse_rational(j.at("constant").get<std::string>())};
}

} // namespace

json rep_to_json(const CanonicalRep& rep) {
    return json{{"l", rep.l}, {"a", rep.a}, {"d", rep.d}, {"n", rep.n}};
}

CanonicalRep rep_from_json(const json& j) {
    return CanonicalRep{j.at("l").get<int>(), j.at("a").get<long long>(), j.at("d").get<int>(), j.at("n").get<int>()};
}

json to_json(const DelaunayCertificate& cert) {
    json j{{"d", cert.d}, {"s", cert.s}, {"k", cert.k},
           {"status", cert.certified ? "certified" : "failed"}};
    if (cert.line) {
        j["alpha"] = rat_str(cert.line->alpha);
        j["beta"] = rat_str(cert.line->beta);
    }
    if (!cert.on_line.empty()) {
        json targets = json::array();
        for (const auto& rep : cert.on_line) targets.push_back(rep_to_json(rep));
        j["on_line"] = std::move(targets);
    }
    if (cert.derived_form)
        j["derived_form"] = json{{"A", rat_str(cert.derived_form->A)}, {"B", rat_str(cert.derived_form->B)},
                                 {"d", cert.derived_form->d}};
    if (cert.certified) j["min_margin"] = rat_str(cert.min_margin);
    if (!cert.failure_reason.empty()) j["failure_reason"] = cert.failure_reason;
    if (cert.failure_witness) j["failure_witness"] = rep_to_json(*cert.failure_witness);
    return j;
}

json to_json(const PerfectionCertificate& cert) {
    json j{{"family", family_name(cert.family)},
           {"d", cert.d},
           {"s", cert.s},
           {"k", cert.k},
           {"vertex_count", cert.vertex_count},
           {"m", cert.m},
           {"rank", cert.rank},
           {"nullity", cert.nullity},
           {"status", cert.perfect ? "perfect" : "not_perfect"},
           {"frame", json{{"origin", vec_to_json(cert.frame_origin)}, {"basis", mat_to_json(cert.frame_basis)}}}};
    if (cert.generator) j["generator"] = inhom_to_json(*cert.generator);
    return j;
}

json vertex_set_to_json(const VertexSet& vs) {
    json verts = json::array();
    for (const auto& v : vs.vertices) verts.push_back(vec_to_json(v));
    return json{{"meta",
                 json{{"family", family_name(vs.family)},
                      {"d", vs.d},
                      {"s", vs.s},
                      {"k", vs.k},
                      {"affine_dim", vs.affine_dim},
                      {"count", vs.count()}}},
                {"vertices", std::move(verts)}};
}

std::vector<Vec> vertices_from_json(const json& j) {
    std::vector<Vec> vs;
    for (const auto& row : j.at("vertices")) vs.push_back(vec_from_json(row));
    return vs;
}

std::string vertex_set_to_csv(const VertexSet& vs) {
    std::ostringstream out;
    for (const auto& v : vs.vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << ',';
            out << rat_str(v[i]);
        }
        out << '\n';
    }
    return out.str();
}

bool revalidate_delaunay(const json& cert) {
    const int d = cert.at("d").get<int>();
    const int s = cert.at("s").get<int>();
    const int k = cert.at("k").get<int>();
    const bool claimed = cert.at("status").get<std::string>() == "certified";
    if (!cert.contains("alpha") || !cert.contains("beta"))
        return !claimed; // no line recorded: only a failed certificate is coherent
    const PairForm line{parse_rational(cert.at("alpha").get<std::string>()),
                        parse_rational(cert.at("beta").get<std::string>()), d};

    if (2 * (s + 1) >= d) return !claimed;
    const auto t1 = phi12_of_rep(target_rep(s, d, d - 2 * k));
    const auto t2 = phi12_of_rep(target_rep(s + 1, d, d - 2 * k));
    if (line.alpha * t1.first + line.beta * t1.second != 1) return false;
    if (line.alpha * t2.first + line.beta * t2.second != 1) return false;

    if (cert.contains("derived_form")) {
        const RadialForm rf{parse_rational(cert.at("derived_form").at("A").get<std::string>()),
                            parse_rational(cert.at("derived_form").at("B").get<std::string>()), d};
        if (!(rf == pair_to_radial(line))) return false;
    }

    const bool positive = line.alpha > 0 && line.beta > 0;
    const auto scan = scan_margins(d, k, s, line);
    const bool recomputed = positive && scan.ok;
    if (recomputed != claimed) return false;
    if (claimed && cert.contains("min_margin") &&
        parse_rational(cert.at("min_margin").get<std::string>()) != scan.min_margin)
        return false;
    return true;
}

bool revalidate_perfection(const json& cert, const std::vector<Vec>& vertices) {
    if (cert.at("vertex_count").get<int>() != static_cast<int>(vertices.size())) return false;
    const int m = cert.at("m").get<int>();
    const int rank = cert.at("rank").get<int>();
    const int nullity = cert.at("nullity").get<int>();
    if (Rat(rank + nullity) != ratio((m + 2) * (m + 1), 2)) return false;
    const bool claimed = cert.at("status").get<std::string>() == "perfect";
    if (claimed != (nullity == 1)) return false;
    if (!claimed) return !cert.contains("generator");

    if (!cert.contains("generator") || !cert.contains("frame")) return false;
    const InhomQuadratic g = inhom_from_json(cert.at("generator"));
    const AffineLattice frame{vec_from_json(cert.at("frame").at("origin")), mat_from_json(cert.at("frame").at("basis"))};
    if (g.dim() != m || frame.rank() != m) return false;

    bool nonzero = g.constant != 0 || !is_zero(g.linear);
    for (int i = 0; i < m && !nonzero; ++i)
        for (int j = 0; j < m && !nonzero; ++j) nonzero = g.gram(i, j) != 0;
    if (!nonzero) return false;

    for (const auto& v : vertices) {
        const auto coords = frame.coordinates(v);
        if (!coords) return false;
        Vec y(m);
        for (int i = 0; i < m; ++i) y[i] = Rat((*coords)[i]);
        if (g.eval(y) != 0) return false;
    }
    return true;
}

} // namespace perfdel
