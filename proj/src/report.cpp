#include "spreadcode/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spreadcode/version.hpp"

namespace spreadcode {

namespace {

const char* percent_rule_text =
    "share of -1 values among nonzero-shift periodic correlations of each "
    "seed sequence against every family member (auto and cross)";

const reference_row* find_reference(int degree) {
    for (const auto& row : reference_table())
        if (row.degree == degree) return &row;
    return nullptr;
}

std::string join_values(const std::vector<corr_value>& v) {
    std::string out;
    for (const auto x : v) {
        if (!out.empty()) out += ';';
        out += std::to_string(x);
    }
    return out;
}

std::string db_cell(const std::optional<double>& db) {
    return db ? format_fixed(*db, 2) : "impulsive";
}

bool db_close(const std::optional<double>& computed, const std::optional<double>& ref) {
    if (!computed || !ref) return computed.has_value() == ref.has_value();
    return std::abs(*computed - *ref) <= db_match_tolerance;
}

family_table_row make_family_row(int degree, const code_family& fam,
                                 const pair_selection& sel,
                                 const reference_row& ref, int threads) {
    family_table_row row;
    row.degree = degree;
    row.length = fam.length();
    row.family_size = fam.size();
    row.base_poly = sel.base.to_string();
    row.partner_poly = sel.partner.to_string();
    row.partner_candidates = sel.partner_candidates;
    row.preferred = fam.preferred;
    row.stats = analyze_family(fam, threads);

    const bool gold = fam.kind == family_kind::gold;
    const int n = fam.length();
    if (gold) {
        row.ref_acf_values = ref.gold_acf_values;
        row.ref_ccf_values = ref.pair_ccf_values;  // Gold CCF matches the pair's
        row.ref_peak_db = ref.peak_db;
        row.ref_percent = ref.gold_percent;
        row.ref_family_size = ref.gold_size;
        row.percent_advisory = false;
    } else {
        row.ref_acf_values = {-1, n};  // two-valued by construction
        row.ref_ccf_values = ref.pair_ccf_values;
        row.ref_peak_db = ref.peak_db;
        row.ref_percent = ref.pair_percent;
        row.ref_family_size = 2;
        row.percent_advisory = true;
    }

    row.size_match = row.family_size == row.ref_family_size;
    row.acf_match = row.stats.acf_values == row.ref_acf_values;
    row.ccf_match = row.stats.ccf_values == row.ref_ccf_values;
    // The reference peak level appears once per row; for Gold families both
    // the ACF sidelobe and CCF peaks must sit at it.
    row.db_match = db_close(row.stats.ccf_peak_db, row.ref_peak_db) &&
                   (!gold || db_close(row.stats.acf_peak_db, row.ref_peak_db));
    row.percent_match =
        std::abs(row.stats.percent_minus_one - row.ref_percent) <= percent_match_tolerance;
    return row;
}

}  // namespace

const std::vector<reference_row>& reference_table() {
    static const std::vector<reference_row> rows = {
        {3, "x^3+x^2+1", {-5, -1, 3}, -7.35, 46.1, 9, {-5, -1, 3, 7}, 53.0},
        {4, "x^4+x^3+1", {-5, -1, 3, 7}, -6.62, 34.5, 17, {-5, -1, 3, 7, 15}, 39.4},
        {5, "x^5+x^4+x^3+x^2+1", {-9, -1, 7}, -12.92, 49.2, 33, {-9, -1, 7, 31}, 50.8},
        {6, "x^6+x^5+x^2+x+1", {-17, -1, 15}, -12.47, 74.4, 65, {-17, -1, 15, 63}, 75.2},
        {7, "x^7+x^3+1", {-17, -1, 15}, -18.55, 49.8, 129, {-17, -1, 15, 127}, 50.2},
        {8, "x^8+x^6+x^5+x^3+1", {-33, -17, -1, 15, 31, 63}, -12.14, 40.8, 257,
         {-33, -17, -1, 15, 31, 63, 255}, 41.2},
    };
    return rows;
}

const std::vector<long long>& reference_code_counts() {
    static const std::vector<long long> counts = {2, 2, 6, 6, 18, 16, 48, 60};
    return counts;
}

pair_selection reference_pair(int degree) {
    const reference_row* ref = find_reference(degree);
    if (!ref)
        throw std::invalid_argument("reference pairs cover degrees 3..8 only");
    const gf2_poly base = gf2_poly::from_string(ref->base_poly);
    const chip_array base_seq = generate_m_sequence(base);

    std::optional<gf2_poly> partner;
    int candidates = 0;
    for (const auto& cand : enumerate_primitive(degree)) {
        if (cand == base) continue;
        const auto values =
            distinct_values(periodic_profile(base_seq, generate_m_sequence(cand)));
        if (values == ref->pair_ccf_values) {
            ++candidates;
            if (!partner) partner = cand;
        }
    }
    if (!partner)
        throw std::runtime_error("no partner polynomial reproduces the reference "
                                 "cross-correlation set at degree " +
                                 std::to_string(degree));
    return {base, *partner, candidates};
}

report_bundle build_tables(const std::vector<int>& count_degrees,
                           const std::vector<int>& family_degrees, int threads) {
    report_bundle b;
    b.tool_version = tool_version;
    b.percent_rule = percent_rule_text;

    for (int degree : count_degrees) {
        if (degree < 3 || degree > 10)
            throw std::invalid_argument("code-count table covers degrees 3..10");
        table1_row row;
        row.degree = degree;
        row.length = (1 << degree) - 1;
        row.computed = static_cast<long long>(enumerate_primitive(degree).size());
        row.published = reference_code_counts()[static_cast<std::size_t>(degree - 3)];
        row.match = row.computed == row.published;
        b.table1.push_back(row);
    }

    for (int degree : family_degrees) {
        const reference_row* ref = find_reference(degree);
        if (!ref)
            throw std::invalid_argument("family tables cover degrees 3..8");
        const pair_selection sel = reference_pair(degree);
        b.table2.push_back(make_family_row(
            degree, make_pair_family(sel.base, sel.partner), sel, *ref, threads));
        b.table3.push_back(make_family_row(
            degree, make_gold_family(sel.base, sel.partner), sel, *ref, threads));
    }
    return b;
}

bool tables_gate(const report_bundle& b) {
    for (const auto& row : b.table1)
        if (!row.match) return false;
    for (const auto* table : {&b.table2, &b.table3})
        for (const auto& row : *table)
            if (!(row.size_match && row.acf_match && row.ccf_match && row.db_match))
                return false;
    return true;
}

std::string table1_to_csv(const report_bundle& b) {
    std::string out = "degree,length,computed_count,published_count,match\n";
    for (const auto& row : b.table1)
        out += std::to_string(row.degree) + "," + std::to_string(row.length) + "," +
               std::to_string(row.computed) + "," + std::to_string(row.published) +
               "," + (row.match ? "yes" : "no") + "\n";
    return out;
}

namespace {

std::string family_csv_row(const family_table_row& r) {
    std::string out;
    out += std::to_string(r.degree) + "," + std::to_string(r.length) + "," +
           std::to_string(r.family_size) + ",";
    out += r.base_poly + "," + r.partner_poly + "," +
           std::to_string(r.partner_candidates) + "," + (r.preferred ? "yes" : "no") + ",";
    out += join_values(r.stats.acf_values) + "," + join_values(r.stats.ccf_values) + ",";
    out += db_cell(r.stats.acf_peak_db) + "," + db_cell(r.stats.ccf_peak_db) + ",";
    out += format_fixed(r.stats.percent_minus_one, 1) + ",";
    out += join_values(r.ref_acf_values) + "," + join_values(r.ref_ccf_values) + ",";
    out += db_cell(r.ref_peak_db) + "," + format_fixed(r.ref_percent, 1) + ",";
    out += std::to_string(r.ref_family_size) + ",";
    out += std::string(r.size_match ? "yes" : "no") + "," +
           (r.acf_match ? "yes" : "no") + "," + (r.ccf_match ? "yes" : "no") + "," +
           (r.db_match ? "yes" : "no") + "," + (r.percent_match ? "yes" : "no") + "," +
           (r.percent_advisory ? "yes" : "no") + "\n";
    return out;
}

const char* family_csv_header =
    "degree,length,family_size,base_polynomial,partner_polynomial,"
    "partner_candidates,preferred,acf_values,ccf_values,acf_peak_db,ccf_peak_db,"
    "percent_minus_one,published_acf_values,published_ccf_values,"
    "published_peak_db,published_percent,published_family_size,"
    "size_match,acf_match,ccf_match,db_match,percent_match,percent_advisory\n";

ordered_json family_row_json(const family_table_row& r) {
    ordered_json j;
    j["degree"] = r.degree;
    j["length"] = r.length;
    j["family_size"] = r.family_size;
    j["base_polynomial"] = r.base_poly;
    j["partner_polynomial"] = r.partner_poly;
    j["partner_candidates"] = r.partner_candidates;
    j["preferred"] = r.preferred;
    j["acf_values"] = r.stats.acf_values;
    j["ccf_values"] = r.stats.ccf_values;
    if (r.stats.acf_peak_db) j["acf_peak_db"] = *r.stats.acf_peak_db;
    else j["acf_peak_db"] = nullptr;
    if (r.stats.ccf_peak_db) j["ccf_peak_db"] = *r.stats.ccf_peak_db;
    else j["ccf_peak_db"] = nullptr;
    j["percent_minus_one"] = r.stats.percent_minus_one;
    j["minus_one_count"] = r.stats.minus_one_count;
    j["correlation_entries"] = r.stats.correlation_entries;
    j["impulsive_members"] = r.stats.impulsive_members;
    j["published"] = {
        {"acf_values", r.ref_acf_values},
        {"ccf_values", r.ref_ccf_values},
        {"peak_db", r.ref_peak_db ? ordered_json(*r.ref_peak_db) : ordered_json(nullptr)},
        {"percent", r.ref_percent},
        {"family_size", r.ref_family_size},
    };
    j["match"] = {
        {"size", r.size_match},      {"acf", r.acf_match},
        {"ccf", r.ccf_match},        {"db", r.db_match},
        {"percent", r.percent_match}, {"percent_advisory", r.percent_advisory},
    };
    return j;
}

}  // namespace

std::string table2_to_csv(const report_bundle& b) {
    std::string out = family_csv_header;
    for (const auto& row : b.table2) out += family_csv_row(row);
    return out;
}

std::string table3_to_csv(const report_bundle& b) {
    std::string out = family_csv_header;
    for (const auto& row : b.table3) out += family_csv_row(row);
    return out;
}

ordered_json metadata_to_json(const report_bundle& b) {
    ordered_json j;
    j["tool_version"] = b.tool_version;
    j["percent_rule"] = b.percent_rule;
    j["gate"] = tables_gate(b);
    j["pairs"] = ordered_json::array();
    for (const auto& row : b.table2) {
        j["pairs"].push_back({
            {"degree", row.degree},
            {"base", row.base_poly},
            {"partner", row.partner_poly},
            {"partner_candidates", row.partner_candidates},
            {"preferred", row.preferred},
        });
    }
    return j;
}

ordered_json bundle_to_json(const report_bundle& b) {
    ordered_json j;
    j["metadata"] = metadata_to_json(b);
    j["code_counts"] = ordered_json::array();
    for (const auto& row : b.table1) {
        j["code_counts"].push_back({
            {"degree", row.degree},
            {"length", row.length},
            {"computed", row.computed},
            {"published", row.published},
            {"match", row.match},
        });
    }
    j["pair_table"] = ordered_json::array();
    for (const auto& row : b.table2) j["pair_table"].push_back(family_row_json(row));
    j["gold_table"] = ordered_json::array();
    for (const auto& row : b.table3) j["gold_table"].push_back(family_row_json(row));
    return j;
}

}
