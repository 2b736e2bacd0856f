#pragma once

// Text serialisations: CSV, JSON, SVG and Graphviz DOT.
//
// CSV reals use 12 significant digits. JSON objects keep insertion order so
// identical inputs give byte-identical output.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "patterned/core.hpp"
#include "patterned/curves.hpp"
#include "patterned/dynamics.hpp"
#include "patterned/graphs.hpp"

namespace patterned::io {

using ordered_json = nlohmann::ordered_json;

std::string format_real(double v);

// --- profiles -----------------------------------------------------------

inline constexpr const char* kProfileCsvHeader = "n,digits,small_divisors,matches,match_count,patterned,turn";

void write_profiles_csv(std::ostream& os, const std::vector<DigitDivisorProfile>& rows);
ordered_json to_json(const DigitDivisorProfile& p);
/// Inverse of to_json; throws InvalidInput on malformed input.
DigitDivisorProfile profile_from_json(const nlohmann::ordered_json& j);
/// OEIS b-file: "index value" lines, 1-based.
void write_bfile(std::ostream& os, const std::vector<std::uint64_t>& seq);

// --- reports ------------------------------------------------------------

/// Count report with the published N = 100 claim alongside when limit == 100.
ordered_json to_json(const DensityReport& r);
void write_density_csv(std::ostream& os, const DensityReport& r);
/// Human-readable discrepancy line, or empty when there is nothing to report.
std::string density_discrepancy_note(const DensityReport& r);

// --- curves -------------------------------------------------------------

struct SvgOptions {
  double unit = 20.0;        // pixels per lattice step
  double stroke_width = 0.1; // lattice units
};

void write_curve_svg(std::ostream& os, const curves::LatticeCurve& curve, const SvgOptions& opts = {});
/// One path per placement, each tagged with its tile index.
void write_tessellation_svg(std::ostream& os, const curves::Tessellation& t, const SvgOptions& opts = {});

ordered_json to_json(const curves::CurveStats& s);
void write_curve_stats_csv(std::ostream& os, const curves::CurveStats& s);

// --- graphs -------------------------------------------------------------

void write_dot(std::ostream& os, const graphs::PatternedDag& dag);

// --- dynamics -----------------------------------------------------------

void write_spectrum_csv(std::ostream& os, const dynamics::Spectrum& s);
void write_sweep_csv(std::ostream& os, const std::vector<dynamics::SweepPoint>& points);
/// Wide format: step,pos_1,...,pos_N
void write_walk_csv(std::ostream& os, const std::vector<std::vector<double>>& series);

} // namespace patterned::io
