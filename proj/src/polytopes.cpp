#include "perfdel/polytopes.hpp"

#include "perfdel/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace perfdel {

std::string family_name(Family f) {
    switch (f) {
        case Family::PHalf: return "P-half";
        case Family::PIntegral: return "P-integral";
        case Family::GSection: return "G-section";
    }
    throw std::logic_error("family_name: unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "P-half") return Family::PHalf;
    if (name == "P-integral") return Family::PIntegral;
    if (name == "G-section") return Family::GSection;
    return std::nullopt;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r(1);
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

namespace {

std::vector<Vec> permutations_of(Vec pattern) {
    std::sort(pattern.begin(), pattern.end());
    std::vector<Vec> out;
    do {
        out.push_back(pattern);
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    return out;
}

// [1^m, 0^(d-m)] - shift*j, all permutations
std::vector<Vec> shifted_level_set(int d, int m, const Rat& shift) {
    Vec pattern(d, -shift);
    for (int i = 0; i < m; ++i) pattern[i] = Rat(1) - shift;
    return permutations_of(std::move(pattern));
}

void sort_dedupe(std::vector<Vec>& vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

int affine_dim_of(const std::vector<Vec>& vertices) {
    if (vertices.size() <= 1) return 0;
    std::vector<Vec> diffs;
    diffs.reserve(vertices.size() - 1);
    for (std::size_t i = 1; i < vertices.size(); ++i) diffs.push_back(vertices[i] - vertices[0]);
    return row_span_rank(diffs, static_cast<int>(vertices[0].size()));
}

} // namespace

std::vector<Vec> construct_D(int d, int s, int k) {
    const int n = d - 2 * k;
    if (s < 1 || k < 2 || n < 1)
        throw ParameterOutOfRange("construct_D: requires s >= 1, k >= 2, d - 2k >= 1");
    if (s + 1 > d) throw ParameterOutOfRange("construct_D: requires s + 1 <= d");
    auto out = shifted_level_set(d, s, ratio(s - 1, n));
    auto upper = shifted_level_set(d, s + 1, ratio(s, n));
    out.insert(out.end(), std::make_move_iterator(upper.begin()), std::make_move_iterator(upper.end()));
    return out;
}

VertexSet construct_P(int d, int s, int k, Normalization norm) {
    const auto diag = construct_D(d, s, k);
    std::vector<Vec> vs;
    vs.reserve(2 * diag.size());
    const Rat scale = norm == Normalization::Half ? ratio(1, 2) : Rat(1);
    for (const auto& v : diag) {
        vs.push_back(scale * v);
        vs.push_back(-scale * v);
    }
    sort_dedupe(vs);
    VertexSet result{std::move(vs), norm == Normalization::Half ? Family::PHalf : Family::PIntegral, d, s, k, 0};
    result.affine_dim = affine_dim_of(result.vertices);
    return result;
}

VertexSet construct_G(int d) {
    if (d < 6) throw ParameterOutOfRange("construct_G: requires d >= 6");
    const VertexSet ambient = construct_P(d + 1, 1, 2, Normalization::Half);
    Vec u(d + 1, Rat(1));
    u[0] = u[1] = -1;
    const Rat half = ratio(1, 2);
    std::vector<Vec> vs;
    for (const auto& v : ambient.vertices)
        if (dot(u, v) == half) vs.push_back(v);
    sort_dedupe(vs);
    VertexSet result{std::move(vs), Family::GSection, d, 1, 2, 0};
    result.affine_dim = affine_dim_of(result.vertices);
    return result;
}

SymmetryInfo symmetry_and_dim(const std::vector<Vec>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("symmetry_and_dim: empty vertex set");
    const int dim = static_cast<int>(vertices[0].size());

    Vec center(dim, Rat(0));
    for (const auto& v : vertices) center = center + v;
    center = ratio(1, static_cast<long>(vertices.size())) * center;

    std::vector<Vec> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    bool symmetric = true;
    const Vec twice_center = Rat(2) * center;
    for (const auto& v : sorted) {
        if (!std::binary_search(sorted.begin(), sorted.end(), twice_center - v)) {
            symmetric = false;
            break;
        }
    }

    SymmetryInfo info;
    info.centrally_symmetric = symmetric;
    if (symmetric) info.center = center;
    info.affine_dim = affine_dim_of(vertices);
    return info;
}

} // namespace perfdel
