#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "spreadcode/code_family.hpp"
#include "spreadcode/envelope.hpp"
#include "spreadcode/family_stats.hpp"
#include "spreadcode/gf2_poly.hpp"
#include "spreadcode/io.hpp"
#include "spreadcode/report.hpp"
#include "spreadcode/version.hpp"

namespace sc = spreadcode;
namespace fs = std::filesystem;

namespace {

fs::path default_out_dir() {
    if (const char* env = std::getenv("SPREADCODE_OUT_DIR"); env && *env)
        return fs::path(env);
    return fs::path(".");
}

// "--pair p1,p2" carries both generator polynomials in one argument.
std::pair<sc::gf2_poly, sc::gf2_poly> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--pair", "expected two polynomials separated by a comma");
    return {sc::gf2_poly::from_string(text.substr(0, comma)),
            sc::gf2_poly::from_string(text.substr(comma + 1))};
}

// Families come either from the bundled reference pair of a degree (3..8)
// or from an explicit --pair override.
sc::code_family resolve_family(const std::string& kind, int degree,
                               const std::string& pair_text) {
    sc::gf2_poly base(0b111);   // placeholder; reassigned below
    sc::gf2_poly partner(0b111);
    if (!pair_text.empty()) {
        auto [first, second] = parse_pair(pair_text);
        if (degree != 0 && first.degree() != degree)
            throw CLI::ValidationError("--pair", "polynomial degree disagrees with --degree");
        base = first;
        partner = second;
    } else {
        if (degree == 0)
            throw CLI::ValidationError("--degree", "required unless --pair is given");
        const sc::pair_selection sel = sc::reference_pair(degree);
        base = sel.base;
        partner = sel.partner;
    }
    if (kind == "gold") return sc::make_gold_family(base, partner);
    return sc::make_pair_family(base, partner);
}

std::string member_index(int v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%03d", v);
    return buf;
}

void report_written(const fs::path& p) {
    std::printf("wrote %s\n", p.string().c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spreading-code generation, correlation and envelope analysis"};
    app.set_version_flag("--version", sc::tool_version);
    app.require_subcommand(1);

    std::string out_dir = default_out_dir().string();
    int threads = 0;
    app.add_option("--out", out_dir, "output directory (default $SPREADCODE_OUT_DIR or .)")
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads (0 = hardware)")
        ->capture_default_str();

    // tables ---------------------------------------------------------------
    auto* cmd_tables = app.add_subcommand(
        "tables", "reproduce the reference code-count, pair and Gold tables");
    std::vector<int> table_degrees;
    std::string tables_format = "csv";
    cmd_tables->add_option("--degree", table_degrees,
                           "restrict to these degrees (default: all)");
    cmd_tables->add_option("--format", tables_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // profile --------------------------------------------------------------
    auto* cmd_profile = app.add_subcommand(
        "profile", "dump correlation profiles for plotting");
    int profile_degree = 0;
    std::string profile_family = "pn";
    std::string profile_pair;
    std::string profile_mode = "acf";
    std::vector<int> profile_members;
    bool profile_all = false;
    std::string profile_format = "csv";
    cmd_profile->add_option("--degree", profile_degree, "generator degree");
    cmd_profile->add_option("--family", profile_family, "pn or gold")
        ->check(CLI::IsMember({"pn", "gold"}));
    cmd_profile->add_option("--pair", profile_pair,
                            "override generators: \"p1,p2\" in x^a+...+1 form");
    cmd_profile->add_option("--mode", profile_mode, "acf or ccf")
        ->check(CLI::IsMember({"acf", "ccf"}));
    cmd_profile->add_option("--member", profile_members,
                            "member index (one for acf, two for ccf)");
    cmd_profile->add_flag("--all-members", profile_all,
                          "one acf series per family member");
    cmd_profile->add_option("--format", profile_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // papr -----------------------------------------------------------------
    auto* cmd_papr = app.add_subcommand(
        "papr", "sweep envelope peak-to-average power over data-bit patterns");
    int papr_degree = 0;
    std::string papr_family = "gold";
    std::string papr_pair;
    int papr_codes = 1;
    double papr_separation = 1.0;
    int papr_oversampling = 0;
    int papr_samples = 256;
    std::uint64_t papr_seed = sc::papr_default_seed;
    std::string papr_format = "json";
    cmd_papr->add_option("--degree", papr_degree, "generator degree");
    cmd_papr->add_option("--family", papr_family, "pn or gold")
        ->check(CLI::IsMember({"pn", "gold"}));
    cmd_papr->add_option("--pair", papr_pair, "override generators");
    cmd_papr->add_option("--codes", papr_codes, "number of simultaneous codes")
        ->capture_default_str();
    cmd_papr->add_option("--separation", papr_separation, "subcarrier separation F")
        ->capture_default_str();
    cmd_papr->add_option("--oversampling", papr_oversampling,
                         "samples per symbol period (default 4N)");
    cmd_papr->add_option("--random-samples", papr_samples,
                         "patterns drawn when not exhaustive")
        ->capture_default_str();
    cmd_papr->add_option("--seed", papr_seed, "generator seed for sampled patterns");
    cmd_papr->add_option("--format", papr_format,
                         "json summary or csv worst-pattern time series")
        ->check(CLI::IsMember({"csv", "json"}));

    // enumerate-polys --------------------------------------------------------
    auto* cmd_enum = app.add_subcommand(
        "enumerate-polys", "list primitive polynomials of a degree");
    int enum_degree = 0;
    std::string enum_format = "csv";
    cmd_enum->add_option("--degree", enum_degree, "degree 2..16")->required();
    cmd_enum->add_option("--format", enum_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // gen --------------------------------------------------------------------
    auto* cmd_gen = app.add_subcommand("gen", "dump a family's chips");
    int gen_degree = 0;
    std::string gen_family = "pn";
    std::string gen_pair;
    std::string gen_format = "csv";
    cmd_gen->add_option("--degree", gen_degree, "generator degree");
    cmd_gen->add_option("--family", gen_family, "pn or gold")
        ->check(CLI::IsMember({"pn", "gold"}));
    cmd_gen->add_option("--pair", gen_pair, "override generators");
    cmd_gen->add_option("--format", gen_format, "csv (one file per code) or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        const fs::path out(out_dir);

        if (*cmd_tables) {
            std::vector<int> count_degrees = table_degrees;
            std::vector<int> family_degrees;
            if (count_degrees.empty()) {
                for (int d = 3; d <= 10; ++d) count_degrees.push_back(d);
                for (int d = 3; d <= 8; ++d) family_degrees.push_back(d);
            } else {
                for (int d : count_degrees)
                    if (d >= 3 && d <= 8) family_degrees.push_back(d);
            }
            const sc::report_bundle bundle =
                sc::build_tables(count_degrees, family_degrees, threads);
            if (tables_format == "json") {
                const fs::path p = out / "tables.json";
                sc::atomic_write_file(p, sc::bundle_to_json(bundle).dump(2) + "\n");
                report_written(p);
            } else {
                const fs::path p1 = out / "table1.csv";
                const fs::path p2 = out / "table2.csv";
                const fs::path p3 = out / "table3.csv";
                const fs::path pm = out / "metadata.json";
                sc::atomic_write_file(p1, sc::table1_to_csv(bundle));
                sc::atomic_write_file(p2, sc::table2_to_csv(bundle));
                sc::atomic_write_file(p3, sc::table3_to_csv(bundle));
                sc::atomic_write_file(pm, sc::metadata_to_json(bundle).dump(2) + "\n");
                report_written(p1);
                report_written(p2);
                report_written(p3);
                report_written(pm);
            }
            const bool ok = sc::tables_gate(bundle);
            std::printf("reference gate: %s\n", ok ? "pass" : "FAIL");
            return ok ? 0 : 2;
        }

        if (*cmd_profile) {
            const sc::code_family fam =
                resolve_family(profile_family, profile_degree, profile_pair);
            const int degree = fam.generators.front().degree();
            std::string stem = "profile_" + profile_family + "_deg" +
                               std::to_string(degree) + "_" + profile_mode;
            std::string csv;
            sc::ordered_json json;
            json["family"] = profile_family;
            json["degree"] = degree;
            json["mode"] = profile_mode;
            json["series"] = sc::ordered_json::array();
            if (profile_all) {
                if (profile_mode != "acf")
                    throw CLI::ValidationError("--all-members", "only meaningful for acf mode");
                stem += "_all";
                csv = "member,shift,value\n";
                for (int i = 0; i < fam.size(); ++i) {
                    const auto p =
                        sc::periodic_profile(fam.members[i].chips, fam.members[i].chips);
                    for (int d = 0; d < fam.length(); ++d)
                        csv += std::to_string(i) + "," + std::to_string(d) + "," +
                               std::to_string(p[d]) + "\n";
                    auto series = sc::profile_to_json(p, 0);
                    series["label"] = fam.members[i].label;
                    json["series"].push_back(series);
                }
            } else {
                std::vector<int> idx = profile_members;
                if (profile_mode == "acf") {
                    if (idx.empty()) idx = {0};
                    if (idx.size() != 1)
                        throw CLI::ValidationError("--member", "acf mode takes one member");
                    idx = {idx[0], idx[0]};
                } else {
                    if (idx.empty()) idx = {0, 1};
                    if (idx.size() != 2)
                        throw CLI::ValidationError("--member", "ccf mode takes two members");
                }
                for (int i : idx)
                    if (i < 0 || i >= fam.size())
                        throw CLI::ValidationError("--member", "index outside the family");
                stem += "_m" + std::to_string(idx[0]);
                if (profile_mode == "ccf") stem += "_m" + std::to_string(idx[1]);
                const auto p = sc::periodic_profile(fam.members[idx[0]].chips,
                                                    fam.members[idx[1]].chips);
                csv = sc::profile_to_csv(p, 0);
                auto series = sc::profile_to_json(p, 0);
                series["label"] = fam.members[idx[0]].label +
                                  (profile_mode == "ccf" ? " vs " + fam.members[idx[1]].label
                                                         : std::string());
                json["series"].push_back(series);
            }
            const fs::path p = out / (stem + (profile_format == "json" ? ".json" : ".csv"));
            sc::atomic_write_file(p, profile_format == "json" ? json.dump(2) + "\n" : csv);
            report_written(p);
            return 0;
        }

        if (*cmd_papr) {
            const sc::code_family fam =
                resolve_family(papr_family, papr_degree, papr_pair);
            const int degree = fam.generators.front().degree();
            if (papr_oversampling == 0) papr_oversampling = 4 * fam.length();
            const sc::papr_summary sum =
                sc::papr_sweep(fam, papr_codes, papr_separation, papr_oversampling,
                               papr_samples, papr_seed, threads);
            const std::string stem = "papr_" + papr_family + "_deg" +
                                     std::to_string(degree) + "_L" +
                                     std::to_string(papr_codes);
            if (papr_format == "json") {
                sc::ordered_json j =
                    sc::papr_summary_to_json(sum, papr_separation, papr_oversampling);
                j["family"] = papr_family;
                j["degree"] = degree;
                j["generators"] = {fam.generators[0].to_string(),
                                   fam.generators[1].to_string()};
                const fs::path p = out / (stem + ".json");
                sc::atomic_write_file(p, j.dump(2) + "\n");
                report_written(p);
            } else {
                const fs::path p = out / (stem + ".csv");
                sc::atomic_write_file(p, sc::envelope_series_csv(sum.worst_result));
                report_written(p);
            }
            return 0;
        }

        if (*cmd_enum) {
            const auto polys = sc::enumerate_primitive(enum_degree);
            const std::string stem = "polynomials_deg" + std::to_string(enum_degree);
            if (enum_format == "json") {
                sc::ordered_json j;
                j["degree"] = enum_degree;
                j["count"] = polys.size();
                j["polynomials"] = sc::ordered_json::array();
                for (const auto& p : polys) j["polynomials"].push_back(p.to_string());
                const fs::path path = out / (stem + ".json");
                sc::atomic_write_file(path, j.dump(2) + "\n");
                report_written(path);
            } else {
                std::string csv = "polynomial\n";
                for (const auto& p : polys) csv += p.to_string() + "\n";
                const fs::path path = out / (stem + ".csv");
                sc::atomic_write_file(path, csv);
                report_written(path);
            }
            std::printf("%zu primitive polynomials of degree %d\n", polys.size(),
                        enum_degree);
            return 0;
        }

        if (*cmd_gen) {
            const sc::code_family fam = resolve_family(gen_family, gen_degree, gen_pair);
            const int degree = fam.generators.front().degree();
            const std::string stem =
                gen_family + "_deg" + std::to_string(degree) + "_codes";
            if (gen_format == "json") {
                const fs::path p = out / (stem + ".json");
                sc::atomic_write_file(p, sc::family_to_json(fam).dump(2) + "\n");
                report_written(p);
            } else {
                const fs::path dir = out / stem;
                for (int i = 0; i < fam.size(); ++i) {
                    const fs::path p = dir / ("member_" + member_index(i) + ".csv");
                    sc::atomic_write_file(p, sc::sequence_to_csv(fam.members[i]));
                }
                sc::ordered_json meta = sc::family_to_json(fam);
                meta.erase("members");
                sc::ordered_json labels = sc::ordered_json::array();
                for (const auto& m : fam.members) labels.push_back(m.label);
                meta["member_labels"] = labels;
                const fs::path pm = dir / "family.json";
                sc::atomic_write_file(pm, meta.dump(2) + "\n");
                report_written(dir);
            }
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
