#include "perfdel/cli.hpp"

#include "perfdel/certify.hpp"

#include <nlohmann/json.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace perfdel;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / fs::path("perfdel_test_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("construct writes the symmetric family") {
    TempDir tmp;
    std::ostringstream out, err;
    cli::ConstructOptions opt;
    opt.family = "P";
    opt.d = 7;
    opt.s = 1;
    opt.k = 2;
    opt.normalization = "half";
    opt.out = tmp.file("p.csv");
    CHECK(cli::run_construct(opt, out, err) == cli::exit_ok);
    const std::string csv = slurp(opt.out);
    CHECK(count_lines(csv) == 56);
    CHECK(out.str().find("56 vertices, affine_dim 7") != std::string::npos);
}

TEST_CASE("construct writes the section family as json") {
    TempDir tmp;
    std::ostringstream out, err;
    cli::ConstructOptions opt;
    opt.family = "G";
    opt.d = 6;
    opt.format = "json";
    opt.out = tmp.file("g.json");
    CHECK(cli::run_construct(opt, out, err) == cli::exit_ok);
    const json doc = json::parse(slurp(opt.out));
    CHECK(doc.at("meta").at("count") == 27);
    CHECK(doc.at("meta").at("family") == "G-section");
    CHECK(doc.at("vertices").size() == 27);
}

TEST_CASE("construct rejects bad parameters with exit 2") {
    std::ostringstream out, err;
    cli::ConstructOptions opt;
    opt.family = "P";
    opt.d = 7;
    opt.s = 1;
    opt.k = 4; // d - 2k < 1
    CHECK(cli::run_construct(opt, out, err) == cli::exit_usage);
    CHECK(!err.str().empty());
    cli::ConstructOptions bad_family = opt;
    bad_family.family = "Q";
    bad_family.k = 2;
    CHECK(cli::run_construct(bad_family, out, err) == cli::exit_usage);
    cli::ConstructOptions bad_norm;
    bad_norm.family = "P";
    bad_norm.d = 7;
    bad_norm.normalization = "thirds";
    CHECK(cli::run_construct(bad_norm, out, err) == cli::exit_usage);
}

TEST_CASE("certify emits a self-contained certified document") {
    TempDir tmp;
    std::ostringstream out, err;
    cli::CertifyOptions opt;
    opt.family = "P";
    opt.d = 7;
    opt.s = 1;
    opt.k = 2;
    opt.out = tmp.file("cert.json");
    CHECK(cli::run_certify(opt, out, err) == cli::exit_ok);
    const json doc = json::parse(slurp(opt.out));
    CHECK(doc.at("status") == "certified");
    CHECK(doc.at("delaunay").at("alpha") == "3/7");
    CHECK(doc.at("delaunay").at("beta") == "2/3");
    CHECK(doc.at("perfection").at("nullity") == 1);
    CHECK(doc.at("vertices").size() == 56);
    // the document re-validates from its own payload
    CHECK(revalidate_delaunay(doc.at("delaunay")));
    CHECK(revalidate_perfection(doc.at("perfection"), vertices_from_json(doc)));
}

TEST_CASE("certify reports mathematical negatives with exit 1") {
    TempDir tmp;
    std::ostringstream out, err;
    cli::CertifyOptions opt;
    opt.family = "P";
    opt.d = 7;
    opt.s = 3;
    opt.k = 2;
    opt.out = tmp.file("cert.json");
    CHECK(cli::run_certify(opt, out, err) == cli::exit_refuted);
    const json doc = json::parse(slurp(opt.out));
    CHECK(doc.at("status") == "failed");
    CHECK(doc.at("delaunay").at("status") == "failed");
    CHECK(revalidate_delaunay(doc.at("delaunay")));
}

TEST_CASE("certify with the oracle and the section family") {
    TempDir tmp;
    std::ostringstream out, err;
    cli::CertifyOptions opt;
    opt.family = "G";
    opt.d = 6;
    opt.oracle = true;
    opt.out = tmp.file("g6.json");
    CHECK(cli::run_certify(opt, out, err) == cli::exit_ok);
    const json doc = json::parse(slurp(opt.out));
    CHECK(doc.at("delaunay_oracle").at("status") == "certified");
    CHECK(doc.at("delaunay_oracle").at("boundary_count") == 27);
    CHECK(doc.at("perfection").at("rank") == 27);
}

TEST_CASE("oracle refuses above the node budget with exit 2") {
    std::ostringstream out, err;
    cli::CertifyOptions opt;
    opt.family = "P";
    opt.d = 7;
    opt.s = 1;
    opt.k = 2;
    opt.oracle = true;
    opt.node_budget = 1.0;
    CHECK(cli::run_certify(opt, out, err) == cli::exit_usage);
    CHECK(err.str().find("budget") != std::string::npos);
}

TEST_CASE("diagram output format and guard") {
    std::ostringstream out, err;
    cli::DiagramOptions opt;
    opt.d = 7;
    opt.k = 2;
    CHECK(cli::run_diagram(opt, out, err) == cli::exit_ok);
    const std::string csv = out.str();
    CHECK(csv.rfind("l,a,phi1,phi2,on_line\n", 0) == 0);
    CHECK(csv.find("0,1,49/9,0,0") != std::string::npos);
    CHECK(count_lines(csv) == 5); // header + 4 points

    std::ostringstream out2, err2;
    cli::DiagramOptions marked = opt;
    marked.s = 1;
    CHECK(cli::run_diagram(marked, out2, err2) == cli::exit_ok);
    CHECK(out2.str().find("1,0,1,6/7,1") != std::string::npos);
    CHECK(out2.str().find("-2,1,1/9,10/7,1") != std::string::npos);

    // n = 1 is admissible and emits data; n <= 0 is rejected
    std::ostringstream out3, err3;
    cli::DiagramOptions boundary{7, 3, std::nullopt, ""};
    CHECK(cli::run_diagram(boundary, out3, err3) == cli::exit_ok);
    CHECK(count_lines(out3.str()) >= 2);
    std::ostringstream out4, err4;
    cli::DiagramOptions bad{7, 4, std::nullopt, ""};
    CHECK(cli::run_diagram(bad, out4, err4) == cli::exit_usage);
}

TEST_CASE("scan certifies the small grid") {
    TempDir tmp;
    std::ostringstream out, err;
    cli::ScanOptions opt;
    opt.d_max = 9;
    opt.s_max = 1;
    opt.k_max = 2;
    opt.jobs = 2;
    opt.out = tmp.file("scan.json");
    CHECK(cli::run_scan(opt, out, err) == cli::exit_ok);
    const json doc = json::parse(slurp(opt.out));
    CHECK(doc.at("summary").at("all_regime_certified") == true);
    bool found = false;
    for (const auto& rec : doc.at("records"))
        if (rec.at("d") == 7 && rec.at("s") == 1 && rec.at("k") == 2) {
            found = true;
            CHECK(rec.at("delaunay_status") == "certified");
            CHECK(rec.at("min_margin") == "4/3");
            CHECK(rec.at("perfection_status") == "perfect");
            CHECK(rec.at("family_regime") == true);
        }
    CHECK(found);
    // skipped cells carry reasons
    bool skipped_found = false;
    for (const auto& rec : doc.at("skipped"))
        if (rec.at("reason") == "n<1") skipped_found = true;
    CHECK(skipped_found);
    CHECK(cli::run_scan(cli::ScanOptions{}, out, err) == cli::exit_usage);
}

TEST_CASE("identical flags produce byte-identical artifacts") {
    TempDir tmp;
    std::ostringstream o1, o2, e1, e2;
    cli::CertifyOptions opt;
    opt.family = "P";
    opt.d = 8;
    opt.s = 1;
    opt.k = 2;
    opt.out = tmp.file("a.json");
    CHECK(cli::run_certify(opt, o1, e1) == cli::exit_ok);
    const std::string first = slurp(opt.out);
    opt.out = tmp.file("b.json");
    CHECK(cli::run_certify(opt, o2, e2) == cli::exit_ok);
    CHECK(first == slurp(opt.out));

    std::ostringstream d1, d2, de1, de2;
    cli::DiagramOptions dopt;
    dopt.d = 19;
    dopt.k = 3;
    CHECK(cli::run_diagram(dopt, d1, de1) == cli::exit_ok);
    CHECK(cli::run_diagram(dopt, d2, de2) == cli::exit_ok);
    CHECK(d1.str() == d2.str());
}

} // TEST_SUITE
