#include "perfdel/cli.hpp"

#include "perfdel/certify.hpp"

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <tuple>

namespace perfdel::cli {

using nlohmann::json;

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file: " + tmp.string());
        f << content;
        if (!f.good()) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

namespace {

void emit(const std::string& artifact, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << artifact;
    else
        write_file_atomic(out_path, artifact);
}

int usage_error(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << '\n';
    return exit_usage;
}

VertexSet build_family(const std::string& family, int d, int s, int k, Normalization norm) {
    if (family == "P") return construct_P(d, s, k, norm);
    if (family == "G") return construct_G(d);
    throw std::invalid_argument("unknown family '" + family + "' (expected P or G)");
}

json oracle_report_json(const BruteForceReport& r, int lattice_rank) {
    json j{{"method", "bruteforce"},
           {"status", r.certified ? "certified" : "failed"},
           {"boundary_count", r.boundary_count},
           {"radius_sq", to_string(r.radius_sq)},
           {"lattice_rank", lattice_rank}};
    if (r.violation) {
        json v = json::array();
        for (const auto& e : *r.violation) v.push_back(to_string(e));
        j["violation"] = std::move(v);
    }
    return j;
}

} // namespace

int run_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.format != "csv" && opt.format != "json")
            return usage_error(err, "format must be csv or json");
        Normalization norm;
        if (opt.normalization == "half")
            norm = Normalization::Half;
        else if (opt.normalization == "integral")
            norm = Normalization::Integral;
        else
            return usage_error(err, "normalization must be half or integral");

        const VertexSet vs = build_family(opt.family, opt.d, opt.s, opt.k, norm);
        const std::string artifact =
            opt.format == "csv" ? vertex_set_to_csv(vs) : vertex_set_to_json(vs).dump(2) + "\n";
        emit(artifact, opt.out, out);
        std::ostream& info = opt.out.empty() ? err : out;
        info << vs.count() << " vertices, affine_dim " << vs.affine_dim << '\n';
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        return usage_error(err, e.what());
    }
}

int run_certify(const CertifyOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        json doc;
        bool delaunay_ok = false, perfection_ok = false;

        if (opt.family == "P") {
            const VertexSet vs = build_family("P", opt.d, opt.s, opt.k, Normalization::Integral);
            doc["params"] = json{{"family", "P"}, {"d", opt.d}, {"s", opt.s}, {"k", opt.k},
                                 {"normalization", "integral"}};
            doc["vertices"] = vertex_set_to_json(vs).at("vertices");

            const DelaunayCertificate cert = delaunay_certificate(opt.d, opt.s, opt.k);
            doc["delaunay"] = to_json(cert);
            delaunay_ok = cert.certified;

            const PerfectionCertificate pc = perfection_certificate(vs);
            doc["perfection"] = to_json(pc);
            perfection_ok = pc.perfect;

            if (opt.oracle) {
                const RadialForm phi = phi_main(opt.d, opt.s, opt.k);
                const auto f = as_inhom(phi, Vec(opt.d, Rat(0)), Rat(0));
                const AffineLattice lat = odd_class_lattice(opt.d, opt.k);
                const Rat level = f.eval(vs.vertices.front());
                const double estimate = enumeration_node_estimate(lat, f, level);
                if (estimate > opt.node_budget)
                    return usage_error(err, "oracle enumeration estimate " + std::to_string(estimate) +
                                                " exceeds node budget " + std::to_string(opt.node_budget));
                const auto oracle = bruteforce_delaunay(vs, f, lat);
                doc["delaunay_oracle"] = oracle_report_json(oracle, lat.rank());
                delaunay_ok = delaunay_ok && oracle.certified;
            }
        } else if (opt.family == "G") {
            const VertexSet vs = construct_G(opt.d);
            doc["params"] = json{{"family", "G"}, {"d", opt.d}};
            doc["vertices"] = vertex_set_to_json(vs).at("vertices");

            // Sections have no supporting-line certificate; the Delaunay
            // property is decided by exhaustive enumeration over the
            // affine lattice spanned by the vertices.
            const RadialForm phi = phi_main(opt.d + 1, 1, 2);
            const auto f = as_inhom(phi, Vec(opt.d + 1, Rat(0)), Rat(0));
            const AffineLattice lat = affine_lattice_from_points(vs.vertices);
            const Rat level = f.eval(vs.vertices.front());
            const double estimate = enumeration_node_estimate(lat, f, level);
            if (estimate > opt.node_budget)
                return usage_error(err, "oracle enumeration estimate " + std::to_string(estimate) +
                                            " exceeds node budget " + std::to_string(opt.node_budget));
            const auto oracle = bruteforce_delaunay(vs, f, lat);
            doc["delaunay_oracle"] = oracle_report_json(oracle, lat.rank());
            delaunay_ok = oracle.certified;

            const PerfectionCertificate pc = perfection_certificate(vs);
            doc["perfection"] = to_json(pc);
            perfection_ok = pc.perfect;
        } else {
            return usage_error(err, "unknown family '" + opt.family + "' (expected P or G)");
        }

        doc["status"] = delaunay_ok && perfection_ok ? "certified" : "failed";
        emit(doc.dump(2) + "\n", opt.out, out);
        std::ostream& info = opt.out.empty() ? err : out;
        info << "delaunay: " << (delaunay_ok ? "certified" : "failed")
             << ", perfection: " << (perfection_ok ? "perfect" : "not perfect") << '\n';
        return delaunay_ok && perfection_ok ? exit_ok : exit_refuted;
    } catch (const std::invalid_argument& e) {
        return usage_error(err, e.what());
    }
}

int run_diagram(const DiagramOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const auto pts = diagram(opt.d, opt.k);
        std::optional<std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>>> targets;
        if (opt.s) {
            const int n = opt.d - 2 * opt.k;
            targets = {phi12_of_rep(CanonicalRep{*opt.s, 1 - static_cast<long long>(*opt.s), opt.d, n}),
                       phi12_of_rep(CanonicalRep{*opt.s + 1, -static_cast<long long>(*opt.s), opt.d, n})};
        }
        std::ostringstream csv;
        csv << "l,a,phi1,phi2,on_line\n";
        for (const auto& p : pts) {
            const bool on_line =
                targets && (std::pair{p.phi1, p.phi2} == targets->first || std::pair{p.phi1, p.phi2} == targets->second);
            csv << p.rep.l << ',' << p.rep.a << ',' << to_string(p.phi1) << ',' << to_string(p.phi2) << ','
                << (on_line ? 1 : 0) << '\n';
        }
        emit(csv.str(), opt.out, out);
        std::ostream& info = opt.out.empty() ? err : out;
        info << pts.size() << " diagram points\n";
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        return usage_error(err, e.what());
    }
}

namespace {

struct ScanCell {
    int d, s, k;
};

json scan_cell_record(const ScanCell& cell, bool oracle, double node_budget, int perfection_max_vertices) {
    const auto start = std::chrono::steady_clock::now();
    json rec{{"d", cell.d}, {"s", cell.s}, {"k", cell.k}, {"n", cell.d - 2 * cell.k}};
    const bool regime = cell.d >= cell.k * (2 * cell.s + 1) + 1;
    rec["family_regime"] = regime;

    const DelaunayCertificate cert = delaunay_certificate(cell.d, cell.s, cell.k);
    rec["delaunay_status"] = cert.certified ? "certified" : "failed";
    if (cert.certified) rec["min_margin"] = to_string(cert.min_margin);
    bool ok = cert.certified;

    const VertexSet vs = construct_P(cell.d, cell.s, cell.k, Normalization::Integral);
    rec["vertex_count"] = vs.count();
    if (vs.count() <= perfection_max_vertices) {
        const PerfectionCertificate pc = perfection_certificate(vs);
        rec["perfection_status"] = pc.perfect ? "perfect" : "not_perfect";
        rec["rank"] = pc.rank;
        rec["nullity"] = pc.nullity;
        ok = ok && pc.perfect;
    } else {
        rec["perfection_status"] = "skipped";
        rec["perfection_skip_reason"] = "vertex count above budget";
    }

    if (oracle) {
        const RadialForm phi = phi_main(cell.d, cell.s, cell.k);
        const auto f = as_inhom(phi, Vec(cell.d, Rat(0)), Rat(0));
        const AffineLattice lat = odd_class_lattice(cell.d, cell.k);
        const Rat level = f.eval(vs.vertices.front());
        if (enumeration_node_estimate(lat, f, level) > node_budget) {
            rec["oracle_status"] = "skipped";
        } else {
            const auto oracle_report = bruteforce_delaunay(vs, f, lat);
            rec["oracle_status"] = oracle_report.certified ? "certified" : "failed";
            ok = ok && oracle_report.certified;
        }
    }

    rec["certified"] = ok;
    rec["runtime_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

} // namespace

int run_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.d_max < 3 || opt.s_max < 1 || opt.k_max < 2)
            return usage_error(err, "scan requires d-max >= 3, s-max >= 1, k-max >= 2");

        std::vector<ScanCell> cells;
        std::vector<json> skipped;
        for (int k = 2; k <= opt.k_max; ++k)
            for (int s = 1; s <= opt.s_max; ++s)
                for (int d = 3; d <= opt.d_max; ++d) {
                    if (d - 2 * k < 1)
                        skipped.push_back(json{{"d", d}, {"s", s}, {"k", k}, {"skipped", true}, {"reason", "n<1"}});
                    else if (d < s + 1)
                        skipped.push_back(json{{"d", d}, {"s", s}, {"k", k}, {"skipped", true}, {"reason", "d<s+1"}});
                    else
                        cells.push_back(ScanCell{d, s, k});
                }

        const auto by_dsk = [](const auto& a, const auto& b) {
            return std::tie(a.at("d"), a.at("s"), a.at("k")) < std::tie(b.at("d"), b.at("s"), b.at("k"));
        };
        std::sort(cells.begin(), cells.end(), [](const ScanCell& a, const ScanCell& b) {
            return std::tie(a.d, a.s, a.k) < std::tie(b.d, b.s, b.k);
        });
        std::sort(skipped.begin(), skipped.end(), by_dsk);

        int jobs = opt.jobs;
        if (jobs <= 0) {
            if (const char* env = std::getenv("PERFDEL_JOBS")) jobs = std::atoi(env);
        }
#ifdef _OPENMP
        if (jobs <= 0) jobs = omp_get_max_threads();
#else
        jobs = 1;
#endif

        std::vector<json> records(cells.size());
        std::string worker_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
        for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
            try {
                records[static_cast<std::size_t>(i)] =
                    scan_cell_record(cells[static_cast<std::size_t>(i)], opt.oracle, opt.node_budget,
                                     opt.perfection_max_vertices);
            } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
                worker_error = e.what();
            }
        }
        if (!worker_error.empty()) return usage_error(err, "scan worker failed: " + worker_error);

        bool all_regime_certified = true;
        int certified_count = 0;
        for (const auto& rec : records) {
            if (rec.at("certified").get<bool>())
                ++certified_count;
            else if (rec.at("family_regime").get<bool>())
                all_regime_certified = false;
        }

        json report{{"grid", json{{"d_max", opt.d_max}, {"s_max", opt.s_max}, {"k_max", opt.k_max}}},
                    {"records", records},
                    {"skipped", skipped},
                    {"summary", json{{"cells", records.size()},
                                     {"certified", certified_count},
                                     {"skipped", skipped.size()},
                                     {"all_regime_certified", all_regime_certified}}}};
        emit(report.dump(2) + "\n", opt.out, out);
        std::ostream& info = opt.out.empty() ? err : out;
        info << records.size() << " cells, " << certified_count << " certified, " << skipped.size() << " skipped\n";
        return all_regime_certified ? exit_ok : exit_refuted;
    } catch (const std::invalid_argument& e) {
        return usage_error(err, e.what());
    }
}

} // namespace perfdel::cli
