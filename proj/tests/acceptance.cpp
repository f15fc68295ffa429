// Acceptance suite: runs every acceptance criterion at its stated
// tolerance (all exact) and prints one pass/fail line per criterion.
// Usage: perfdel_acceptance [path-to-perfdel-cli]

#include "perfdel/certify.hpp"
#include "perfdel/cli.hpp"

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace perfdel;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
    if (!ok) ++failures;
}

double run_timed(const std::function<bool()>& body, bool& ok) {
    const auto start = std::chrono::steady_clock::now();
    ok = body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json slurp_json(const std::string& path) {
    std::ifstream f(path);
    return json::parse(f);
}

Vec zero(int d) { return Vec(d, Rat(0)); }

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "./tools/perfdel";
    const fs::path tmpdir = fs::temp_directory_path() / "perfdel_acceptance";
    fs::create_directories(tmpdir);

    // 1: the worked instance through the real command line
    {
        bool ok = false;
        const std::string out = (tmpdir / "c1.json").string();
        const double secs = run_timed(
            [&] {
                if (run_cli(cli, "certify --family P --d 7 --s 1 --k 2 --out \"" + out + "\"") != 0) return false;
                const json doc = slurp_json(out);
                return doc.at("delaunay").at("alpha") == "3/7" && doc.at("delaunay").at("beta") == "2/3" &&
                       doc.at("delaunay").at("derived_form").at("A") == "2/3" &&
                       doc.at("delaunay").at("derived_form").at("B") == "1/3" &&
                       doc.at("delaunay").at("status") == "certified";
            },
            ok);
        report(1, "supporting line (3/7, 2/3) and derived form (2/3, 1/3) at (7,1,2)", ok && secs < 1.0,
               std::to_string(secs) + " s");
    }

    // 2: derived form is 1/12 of the closed form, which matches the
    //    section-family display at d=6
    {
        const auto cert = delaunay_certificate(7, 1, 2);
        bool ok = cert.certified && cert.derived_form.has_value();
        if (ok) {
            const auto c = proportional(as_inhom(*cert.derived_form, zero(7), Rat(0)),
                                        as_inhom(phi_main(7, 1, 2), zero(7), Rat(0)));
            ok = c.has_value() && *c == 12;
        }
        ok = ok && phi_main(7, 1, 2) == RadialForm{Rat(8), Rat(4), 7};
        const Int d6 = 6;
        ok = ok && phi_main(7, 1, 2) == RadialForm{Rat(8 * (d6 - 5)), Rat(d6 * d6 - 9 * d6 + 22), 7};
        report(2, "derived form proportional to the closed form with factor exactly 12", ok);
    }

    // 3: coefficient identity sweep between the two families
    {
        bool ok = false;
        const double secs = run_timed(
            [&] {
                for (int d = 6; d <= 30; ++d) {
                    const Int D = d;
                    if (!(phi_main(d + 1, 1, 2) == RadialForm{Rat(8 * (D - 5)), Rat(D * D - 9 * D + 22), d + 1}))
                        return false;
                }
                return true;
            },
            ok);
        report(3, "phi(d+1,1,2) = (8(d-5), d^2-9d+22) for 6 <= d <= 30", ok && secs < 1.0,
               std::to_string(secs) + " s");
    }

    // 4: vertex counts across the grid
    {
        bool ok = true;
        for (int k = 2; k <= 4 && ok; ++k)
            for (int s = 1; s <= 3 && ok; ++s)
                for (int d = 2 * k + 1; d <= 24 && ok; ++d) {
                    if (d < s + 1) continue;
                    const Int expected = 2 * (binomial(d, s) + binomial(d, s + 1));
                    ok = Int(construct_P(d, s, k, Normalization::Half).count()) == expected;
                }
        for (int d = 6; d <= 12 && ok; ++d) ok = Int(construct_G(d).count()) == binomial(d + 2, 2) - 1;
        ok = ok && construct_G(6).count() == 27 && construct_G(7).count() == 35;
        report(4, "vertex counts 2(C(d,s)+C(d,s+1)) and C(d+2,2)-1 across the grid", ok);
    }

    // 5: diagram certification over the full admissible grid
    {
        bool ok = false;
        const double secs = run_timed(
            [&] {
                for (int k = 2; k <= 4; ++k)
                    for (int s = 1; s <= 3; ++s)
                        for (int d = k * (2 * s + 1) + 1; d <= 24; ++d) {
                            const auto cert = delaunay_certificate(d, s, k);
                            if (!cert.certified || !(cert.min_margin > 0)) return false;
                        }
                return true;
            },
            ok);
        report(5, "supporting-line certificates across the grid with strict margins", ok && secs < 30.0,
               std::to_string(secs) + " s");
    }

    // 6: oracle equivalence at (7..9, 1, 2)
    {
        bool all_ok = true;
        std::string detail;
        for (int d = 7; d <= 9; ++d) {
            bool ok = false;
            const double secs = run_timed(
                [&] {
                    const auto cert = delaunay_certificate(d, 1, 2);
                    if (!cert.certified) return false;
                    const auto vs = construct_P(d, 1, 2, Normalization::Integral);
                    const auto f = as_inhom(pair_to_radial(*cert.line), zero(d), Rat(0));
                    const auto brute = bruteforce_delaunay(vs, f, odd_class_lattice(d, 2));
                    const Int expected = 2 * (binomial(d, 1) + binomial(d, 2));
                    return brute.certified && Int(brute.boundary_count) == expected;
                },
                ok);
            all_ok = all_ok && ok && secs < 60.0;
            detail += "d=" + std::to_string(d) + ": " + std::to_string(secs) + " s ";
        }
        report(6, "exhaustive enumeration agrees with the supporting-line certificates", all_ok, detail);
    }

    // 7: perfection ranks of the two lead polytopes
    {
        bool ok7 = false, okG = false;
        const double s1 = run_timed(
            [&] {
                const auto cert = perfection_certificate(construct_P(7, 1, 2, Normalization::Half));
                return cert.rank == 35 && cert.nullity == 1 && cert.perfect && cert.vertex_count == 56;
            },
            ok7);
        const double s2 = run_timed(
            [&] {
                const auto cert = perfection_certificate(construct_G(6));
                return cert.rank == 27 && cert.nullity == 1 && cert.perfect && cert.m == 6;
            },
            okG);
        report(7, "perfection ranks 35 (56 vertices) and 27 (27 vertices), nullity 1",
               ok7 && okG && s1 < 5.0 && s2 < 5.0,
               std::to_string(s1) + " s, " + std::to_string(s2) + " s");
    }

    // 8: uniqueness-system determinants across the grid
    {
        bool ok = true;
        const auto pinned = uniqueness_determinants(7, 2, 1);
        ok = pinned.det4 == 240 && pinned.det3 == -80 && pinned.match;
        for (int k = 2; k <= 4 && ok; ++k)
            for (int s = 1; s <= 3 && ok; ++s)
                for (int d = 2 * k + 1; d <= 24 && ok; ++d) ok = uniqueness_determinants(d, k, s).match;
        report(8, "assembled uniqueness-system determinants match the closed forms", ok);
    }

    // 9: serialized certificates re-validate from their payloads
    {
        bool ok = true;
        const std::string out = (tmpdir / "c9.json").string();
        for (const std::string args : {"certify --family P --d 7 --s 1 --k 2", "certify --family P --d 8 --s 1 --k 2",
                                       "certify --family P --d 7 --s 2 --k 2", "certify --family G --d 6"}) {
            const int code = run_cli(cli, args + " --out \"" + out + "\"");
            if (code != 0 && code != 1) {
                ok = false;
                break;
            }
            const json doc = slurp_json(out);
            const auto vertices = vertices_from_json(doc);
            if (doc.contains("delaunay")) ok = ok && revalidate_delaunay(doc.at("delaunay"));
            ok = ok && revalidate_perfection(doc.at("perfection"), vertices);
            // the re-check must also reject a tampered payload
            if (doc.contains("delaunay")) {
                json tampered = doc.at("delaunay");
                tampered["status"] = tampered["status"] == "certified" ? "failed" : "certified";
                ok = ok && !revalidate_delaunay(tampered);
            }
        }
        report(9, "certificates re-check from their serialized payloads", ok);
    }

    // 10: property suites from the module invariants
    {
        bool ok = true;
        std::mt19937_64 rng(977);

        // canonical-rep round trip and uniqueness window
        for (const auto [d, k] : {std::pair{7, 2}, std::pair{8, 2}, std::pair{9, 3}}) {
            const int n = d - 2 * k;
            const ScaledLattice lat{d, n};
            std::uniform_int_distribution<int> ldist(-(d / 2), (d - 1) / 2);
            std::uniform_int_distribution<long long> adist(-5, 5);
            std::vector<int> perm(d);
            for (int i = 0; i < d; ++i) perm[i] = i;
            for (int iter = 0; iter < 50 && ok; ++iter) {
                const CanonicalRep rep{ldist(rng), adist(rng), d, n};
                const Vec pt = point_of(rep);
                auto back = canonical_rep(pt, lat);
                ok = back.has_value() && *back == rep;
                std::shuffle(perm.begin(), perm.end(), rng);
                Vec shuffled(d);
                for (int i = 0; i < d; ++i) shuffled[i] = pt[perm[i]];
                back = canonical_rep(shuffled, lat);
                ok = ok && back.has_value() && *back == rep;
            }
        }

        // central symmetry of the parity classes
        {
            const ParityFunctional pf{9, 2};
            const ScaledLattice lat{9, 5};
            std::uniform_int_distribution<long> z(-4, 4);
            for (int iter = 0; iter < 50 && ok; ++iter) {
                Vec x(9);
                for (auto& e : x) e = z(rng);
                const Rat shift = ratio(z(rng), 5);
                for (auto& e : x) e += shift;
                ok = lat.contains(x) && parity(-x, pf) == parity(x, pf);
            }
        }

        // brute-force minimal vectors land in the candidate set (k = 2, d in 7..9)
        for (int d = 7; d <= 9 && ok; ++d) {
            const int k = 2;
            const ScaledLattice slat{d, d - 2 * k};
            const auto lat = odd_class_lattice(d, k);
            const auto reps = candidate_reps(d, k);
            const auto rf = phi_main(d, 1, k);
            Rat mu;
            bool first = true;
            for (const auto& r : reps) {
                const Rat v = rf.eval(point_of(r));
                if (first || v < mu) mu = v, first = false;
            }
            for (const auto& p : enumerate_in_ellipsoid(lat, as_inhom(rf, zero(d), Rat(0)), mu)) {
                const auto rep = canonical_rep(p, slat);
                const auto neg = canonical_rep(-p, slat);
                const bool in_set = (rep && std::find(reps.begin(), reps.end(), *rep) != reps.end()) ||
                                    (neg && std::find(reps.begin(), reps.end(), *neg) != reps.end());
                ok = ok && in_set;
            }
        }

        // equidistance: squared radius exactly 3 at (7,1,2) on the half normalization
        {
            const auto vs = construct_P(7, 1, 2, Normalization::Half);
            const auto phi = phi_main(7, 1, 2);
            for (const auto& v : vs.vertices) ok = ok && phi.eval(v) == 3;
        }

        // phi1/phi2 permutation and negation invariance
        {
            std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
            for (int iter = 0; iter < 50 && ok; ++iter) {
                Vec x(8);
                for (auto& e : x) e = ratio(num(rng), den(rng));
                const auto p = eval_phi12(x);
                Vec shuffled = x;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                ok = eval_phi12(-x) == p && eval_phi12(shuffled) == p;
            }
        }

        report(10, "module invariant property suites", ok);
    }

    std::error_code ec;
    fs::remove_all(tmpdir, ec);

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED\n";
    return 1;
}
