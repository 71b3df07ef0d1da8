#include "spreadcode/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace spreadcode {

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string format_fixed(double v, int decimals) {
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;
    const double rounded = std::floor(v * scale + 0.5) / scale;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded);
    // Normalize "-0.00" to "0.00".
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
    return s;
}

ordered_json sequence_to_json(const chip_sequence& s) {
    ordered_json j;
    j["label"] = s.label;
    j["length"] = s.length();
    j["chips"] = std::vector<int>(s.chips.data(), s.chips.data() + s.chips.size());
    return j;
}

chip_sequence sequence_from_json(const ordered_json& j) {
    chip_sequence s;
    s.label = j.at("label").get<std::string>();
    const auto chips = j.at("chips").get<std::vector<int>>();
    if (j.at("length").get<int>() != static_cast<int>(chips.size()))
        throw std::invalid_argument("sequence length field disagrees with chips");
    s.chips = Eigen::Map<const chip_array>(chips.data(),
                                           static_cast<Eigen::Index>(chips.size()));
    if (!is_bipolar(s.chips))
        throw std::invalid_argument("sequence chips must be +1 or -1");
    return s;
}

std::string sequence_to_csv(const chip_sequence& s) {
    std::string out = "chip\n";
    for (Eigen::Index i = 0; i < s.chips.size(); ++i)
        out += std::to_string(s.chips[i]) + "\n";
    return out;
}

std::string profile_to_csv(const corr_profile& p, int first_shift) {
    std::string out = "shift,value\n";
    for (Eigen::Index i = 0; i < p.size(); ++i)
        out += std::to_string(first_shift + static_cast<int>(i)) + "," +
               std::to_string(p[i]) + "\n";
    return out;
}

ordered_json profile_to_json(const corr_profile& p, int first_shift) {
    ordered_json j;
    j["first_shift"] = first_shift;
    j["values"] = std::vector<corr_value>(p.data(), p.data() + p.size());
    return j;
}

ordered_json family_to_json(const code_family& f) {
    ordered_json j;
    j["kind"] = to_string(f.kind);
    std::vector<std::string> gens;
    for (const auto& g : f.generators) gens.push_back(g.to_string());
    j["generators"] = gens;
    j["preferred_pair"] = f.preferred;
    j["length"] = f.length();
    j["size"] = f.size();
    j["members"] = ordered_json::array();
    for (const auto& m : f.members) j["members"].push_back(sequence_to_json(m));
    return j;
}

ordered_json envelope_to_json(const envelope_result& r) {
    ordered_json j;
    j["papr_linear"] = r.papr_linear;
    j["papr_db"] = r.papr_db;
    j["mean_power"] = r.mean_power;
    j["peak_power"] = r.peak_power;
    j["zero_shift_cross"] = r.zero_shift_cross;
    return j;
}

std::string envelope_series_csv(const envelope_result& r) {
    std::string out = "t,power\n";
    const auto samples = r.power_samples.size();
    char buf[64];
    for (Eigen::Index k = 0; k < samples; ++k) {
        std::snprintf(buf, sizeof buf, "%.9f,%.12g\n",
                      static_cast<double>(k) / static_cast<double>(samples),
                      r.power_samples[k]);
        out += buf;
    }
    return out;
}

ordered_json papr_summary_to_json(const papr_summary& s, double separation,
                                  int oversampling) {
    ordered_json j;
    j["code_count"] = s.code_count;
    j["subcarrier_separation"] = separation;
    j["oversampling"] = oversampling;
    j["pattern_count"] = s.pattern_count;
    j["exhaustive"] = s.exhaustive;
    if (!s.exhaustive) j["seed"] = s.seed;
    j["worst_papr_linear"] = s.worst_papr_linear;
    j["worst_papr_db"] = s.worst_papr_db;
    j["mean_papr_linear"] = s.mean_papr_linear;
    j["worst_pattern"] = s.worst_pattern;
    j["worst_envelope"] = envelope_to_json(s.worst_result);
    return j;
}

}
