#include "perfdel/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions and machine-checkable certificates for two infinite "
                 "families of perfect Delaunay polytopes"};
    app.require_subcommand(1);

    perfdel::cli::ConstructOptions construct_opt;
    auto* construct = app.add_subcommand("construct", "Build a vertex set and write it as CSV or JSON");
    construct->add_option("--family", construct_opt.family, "P (symmetric) or G (asymmetric section)")->required();
    construct->add_option("--d", construct_opt.d, "dimension parameter")->required();
    construct->add_option("--s", construct_opt.s, "level parameter (P only)");
    construct->add_option("--k", construct_opt.k, "denominator parameter (P only)");
    construct->add_option("--normalization", construct_opt.normalization, "half or integral (P only)");
    construct->add_option("--format", construct_opt.format, "csv or json");
    construct->add_option("--out", construct_opt.out, "output path (default: stdout)");

    perfdel::cli::CertifyOptions certify_opt;
    auto* certify = app.add_subcommand("certify", "Produce Delaunay and perfection certificates");
    certify->add_option("--family", certify_opt.family, "P or G")->required();
    certify->add_option("--d", certify_opt.d, "dimension parameter")->required();
    certify->add_option("--s", certify_opt.s, "level parameter (P only)");
    certify->add_option("--k", certify_opt.k, "denominator parameter (P only)");
    certify->add_flag("--oracle", certify_opt.oracle, "also run the exhaustive empty-ellipsoid check");
    certify->add_option("--node-budget", certify_opt.node_budget, "refuse oracle runs above this node estimate");
    certify->add_option("--out", certify_opt.out, "output path (default: stdout)");

    perfdel::cli::DiagramOptions diagram_opt;
    int diagram_s = -1;
    auto* diagram = app.add_subcommand("diagram", "Export the candidate diagram as CSV");
    diagram->add_option("--d", diagram_opt.d, "dimension parameter")->required();
    diagram->add_option("--k", diagram_opt.k, "denominator parameter")->required();
    diagram->add_option("--s", diagram_s, "mark the supporting-line targets for this level");
    diagram->add_option("--out", diagram_opt.out, "output path (default: stdout)");

    perfdel::cli::ScanOptions scan_opt;
    auto* scan = app.add_subcommand("scan", "Certify a whole parameter grid");
    scan->add_option("--d-max", scan_opt.d_max, "largest dimension")->required();
    scan->add_option("--s-max", scan_opt.s_max, "largest level");
    scan->add_option("--k-max", scan_opt.k_max, "largest denominator parameter");
    scan->add_option("--jobs", scan_opt.jobs, "worker count (default: PERFDEL_JOBS, then all cores)");
    scan->add_flag("--oracle", scan_opt.oracle, "run the exhaustive check on cells within budget");
    scan->add_option("--node-budget", scan_opt.node_budget, "oracle node estimate budget");
    scan->add_option("--perfection-max-vertices", scan_opt.perfection_max_vertices,
                     "skip the perfection rank computation above this vertex count");
    scan->add_option("--out", scan_opt.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return perfdel::cli::exit_usage;
    }

    try {
        if (construct->parsed()) return perfdel::cli::run_construct(construct_opt, std::cout, std::cerr);
        if (certify->parsed()) return perfdel::cli::run_certify(certify_opt, std::cout, std::cerr);
        if (diagram->parsed()) {
            if (diagram_s >= 0) diagram_opt.s = diagram_s;
            return perfdel::cli::run_diagram(diagram_opt, std::cout, std::cerr);
        }
        if (scan->parsed()) return perfdel::cli::run_scan(scan_opt, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return perfdel::cli::exit_usage;
    }
    return perfdel::cli::exit_usage;
}
