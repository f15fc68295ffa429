// Compares the OpenMP enumeration kernel against its serial reference,
// and times the parallel row elimination behind the perfection rank.
// Usage: perfdel_bench [bound-multiplier]   (default 3)

#include "perfdel/certify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>

using namespace perfdel;

namespace {

double seconds(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    const int multiplier = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n\n";
#else
    std::cout << "built without OpenMP; parallel entry points run serially\n\n";
#endif

    std::cout << "ellipsoid enumeration, bound = " << multiplier << " x minimal norm\n";
    std::cout << "  (d,k)   points   serial    parallel  speedup\n";
    for (const auto [d, k] : {std::pair{8, 2}, std::pair{9, 2}, std::pair{10, 2}, std::pair{11, 3}}) {
        const auto lat = odd_class_lattice(d, k);
        const auto phi = phi_main(d, 1, k);
        const auto f = as_inhom(phi, Vec(d, Rat(0)), Rat(0));
        const Rat bound = Rat(multiplier) * phi.eval(point_of(CanonicalRep{1, 0, d, d - 2 * k}));

        std::vector<Vec> serial_pts, parallel_pts;
        const double ts = seconds([&] { serial_pts = enumerate_in_ellipsoid_serial(lat, f, bound); });
        const double tp = seconds([&] { parallel_pts = enumerate_in_ellipsoid(lat, f, bound); });
        if (serial_pts != parallel_pts) {
            std::cerr << "MISMATCH between serial and parallel results at (" << d << "," << k << ")\n";
            return 1;
        }
        std::printf("  (%2d,%d)  %7zu  %7.3f s %7.3f s  %.2fx\n", d, k, serial_pts.size(), ts, tp, ts / tp);
    }

    std::cout << "\nperfection rank (parallel row elimination inside rref)\n";
    for (const auto [d, s, k] : {std::tuple{10, 2, 2}, std::tuple{12, 2, 2}, std::tuple{13, 1, 4}}) {
        const auto vs = construct_P(d, s, k, Normalization::Integral);
        PerfectionCertificate cert;
        const double t = seconds([&] { cert = perfection_certificate(vs); });
        std::printf("  (%2d,%d,%d)  %5d vertices  rank %3d  nullity %d  %7.3f s\n", d, s, k, cert.vertex_count,
                    cert.rank, cert.nullity, t);
    }
    return 0;
}
