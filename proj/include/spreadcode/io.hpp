#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "spreadcode/code_family.hpp"
#include "spreadcode/correlation.hpp"
#include "spreadcode/envelope.hpp"
#include "spreadcode/sequence.hpp"

namespace spreadcode {

using ordered_json = nlohmann::ordered_json;

// Writes through a temporary file in the same directory followed by a
// rename, so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

// Fixed-point rendering with half-up rounding (ties away from the floor:
// -7.355 at two decimals prints "-7.35" only if the stored value is above
// -7.355; the rule is floor(v*10^d + 0.5) / 10^d).
std::string format_fixed(double v, int decimals);

// Sequences: JSON {"label","length","chips"} and CSV with one chip per row.
ordered_json sequence_to_json(const chip_sequence& s);
chip_sequence sequence_from_json(const ordered_json& j);
std::string sequence_to_csv(const chip_sequence& s);

// Correlation profiles: CSV (shift,value) rows; `first_shift` labels the
// first row (0 for periodic profiles, -(N-1) for aperiodic ones).
std::string profile_to_csv(const corr_profile& p, int first_shift);
ordered_json profile_to_json(const corr_profile& p, int first_shift);

// Whole family, including the generator polynomials that produced it.
ordered_json family_to_json(const code_family& f);

// Envelope results and PAPR sweeps.
ordered_json envelope_to_json(const envelope_result& r);
std::string envelope_series_csv(const envelope_result& r);
ordered_json papr_summary_to_json(const papr_summary& s, double separation,
                                  int oversampling);

}
