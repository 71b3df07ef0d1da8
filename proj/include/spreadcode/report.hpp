#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spreadcode/family_stats.hpp"
#include "spreadcode/gf2_poly.hpp"
#include "spreadcode/io.hpp"

namespace spreadcode {

// The bundled reference characteristics the tool validates itself against:
// per degree, the base generator polynomial, the expected pair
// cross-correlation value set, peak level, family sizes and the -1
// percentages for both the pair table and the Gold table.
struct reference_row {
    int degree;
    const char* base_poly;
    std::vector<corr_value> pair_ccf_values;
    double peak_db;        // appears in both tables (pair CCF, Gold ACF/CCF)
    double pair_percent;   // advisory: not reproducible, reported with deviation
    int gold_size;
    std::vector<corr_value> gold_acf_values;
    double gold_percent;
};

const std::vector<reference_row>& reference_table();      // degrees 3..8
const std::vector<long long>& reference_code_counts();    // degrees 3..10

// Generator pair used for the reference tables at one degree: the fixed
// base polynomial together with the first enumerated partner (canonical
// ascending order) whose pair cross-correlation value set equals the
// reference set.  `partner_candidates` reports how many partners match.
struct pair_selection {
    gf2_poly base;
    gf2_poly partner;
    int partner_candidates;
};
pair_selection reference_pair(int degree);  // degrees 3..8

struct table1_row {
    int degree = 0;
    int length = 0;
    long long computed = 0;
    long long published = 0;
    bool match = false;
};

// One analyzed family next to its reference values, with per-column match
// flags.  Percent matching is advisory for the pair table (the reference
// percentages there are not reproducible; the deviation is reported), and
// a +/-1.0 point comparison for the Gold table.
struct family_table_row {
    int degree = 0;
    int length = 0;
    int family_size = 0;
    std::string base_poly;
    std::string partner_poly;
    int partner_candidates = 0;
    bool preferred = false;
    family_correlation_report stats;
    // reference side
    std::vector<corr_value> ref_acf_values;
    std::vector<corr_value> ref_ccf_values;
    std::optional<double> ref_peak_db;
    double ref_percent = 0.0;
    int ref_family_size = 0;
    // flags
    bool size_match = false;
    bool acf_match = false;
    bool ccf_match = false;
    bool db_match = false;
    bool percent_match = false;
    bool percent_advisory = false;
};

struct report_bundle {
    std::string tool_version;
    std::string percent_rule;
    std::vector<table1_row> table1;
    std::vector<family_table_row> table2;  // m-sequence pairs
    std::vector<family_table_row> table3;  // Gold families
};

// Builds the code-count table for `count_degrees` (within 3..10) and the
// pair/Gold tables for `family_degrees` (within 3..8).
report_bundle build_tables(const std::vector<int>& count_degrees,
                           const std::vector<int>& family_degrees,
                           int threads = 1);

// Gate used for the CLI exit status: code counts, ACF/CCF value sets and
// peak-dB columns must all match.  Percent columns never gate.
bool tables_gate(const report_bundle& b);

// Serialization: one CSV per table plus a metadata document, or a single
// JSON bundle that round-trips losslessly.
std::string table1_to_csv(const report_bundle& b);
std::string table2_to_csv(const report_bundle& b);
std::string table3_to_csv(const report_bundle& b);
ordered_json metadata_to_json(const report_bundle& b);
ordered_json bundle_to_json(const report_bundle& b);

inline constexpr double db_match_tolerance = 0.01;
inline constexpr double percent_match_tolerance = 1.0;

}
