#ifndef PERFDEL_CLI_HPP
#define PERFDEL_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace perfdel::cli {

// Exit contract: 0 = certified/ok, 1 = mathematically refuted,
// 2 = usage or resource error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_refuted = 1;
inline constexpr int exit_usage = 2;

struct ConstructOptions {
    std::string family; // "P" or "G"
    int d = 0;
    int s = 1;
    int k = 2;
    std::string normalization = "half"; // "half" or "integral" (P only)
    std::string format = "csv";         // "csv" or "json"
    std::string out;                    // empty: artifact to stdout
};

struct CertifyOptions {
    std::string family;
    int d = 0;
    int s = 1;
    int k = 2;
    bool oracle = false;
    double node_budget = 1e8;
    std::string out;
};

struct DiagramOptions {
    int d = 0;
    int k = 0;
    std::optional<int> s; // marks the two supporting-line targets
    std::string out;
};

struct ScanOptions {
    int d_max = 0;
    int s_max = 1;
    int k_max = 2;
    int jobs = 0; // 0: PERFDEL_JOBS env var, then all cores
    bool oracle = false;
    double node_budget = 1e8;
    int perfection_max_vertices = 1500; // larger cells record perfection as skipped
    std::string out;
};

int run_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err);
int run_certify(const CertifyOptions& opt, std::ostream& out, std::ostream& err);
int run_diagram(const DiagramOptions& opt, std::ostream& out, std::ostream& err);
int run_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err);

void write_file_atomic(const std::string& path, const std::string& content);

} // namespace perfdel::cli

#endif
