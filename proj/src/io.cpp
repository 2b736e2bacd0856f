#include "patterned/io.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "patterned/errors.hpp"

namespace patterned::io {

std::string format_real(double v) { return fmt::format("{:.12g}", v); }

namespace {

std::string joined(DigitSet s) {
  std::string out;
  for (int d : s.elements()) {
    if (!out.empty()) out.push_back(';');
    out.push_back(static_cast<char>('0' + d));
  }
  return out;
}

DigitSet digit_set_from_json(const nlohmann::ordered_json& j, const char* key) {
  DigitSet s;
  for (const auto& v : j.at(key)) {
    const int d = v.get<int>();
    if (d < 0 || d > 9) throw InvalidInput(fmt::format("{} entry {} is not a digit", key, d));
    s.insert(d);
  }
  return s;
}

} // namespace

void write_profiles_csv(std::ostream& os, const std::vector<DigitDivisorProfile>& rows) {
  os << kProfileCsvHeader << '\n';
  for (const auto& p : rows) {
    fmt::print(os, "{},{},{},{},{},{},{}\n", p.n, joined(p.digits), joined(p.small_divisors), joined(p.matches),
               p.match_count, p.is_patterned ? "true" : "false",
               p.turn ? std::string(1, to_char(*p.turn)) : std::string());
  }
}

ordered_json to_json(const DigitDivisorProfile& p) {
  ordered_json j;
  j["n"] = p.n;
  j["digits"] = p.digits.elements();
  j["small_divisors"] = p.small_divisors.elements();
  j["matches"] = p.matches.elements();
  j["match_count"] = p.match_count;
  j["patterned"] = p.is_patterned;
  j["turn"] = p.turn ? ordered_json(std::string(1, to_char(*p.turn))) : ordered_json(nullptr);
  return j;
}

DigitDivisorProfile profile_from_json(const nlohmann::ordered_json& j) {
  try {
    DigitDivisorProfile p;
    p.n = j.at("n").get<std::uint64_t>();
    p.digits = digit_set_from_json(j, "digits");
    p.small_divisors = digit_set_from_json(j, "small_divisors");
    p.matches = digit_set_from_json(j, "matches");
    p.match_count = j.at("match_count").get<int>();
    p.is_patterned = j.at("patterned").get<bool>();
    if (!j.at("turn").is_null()) {
      const auto t = j.at("turn").get<std::string>();
      if (t.size() != 1) throw InvalidInput("turn must be \"L\" or \"R\"");
      p.turn = turn_from_char(t[0]);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(fmt::format("malformed profile json: {}", e.what()));
  }
}

void write_bfile(std::ostream& os, const std::vector<std::uint64_t>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) fmt::print(os, "{} {}\n", i + 1, seq[i]);
}

std::string density_discrepancy_note(const DensityReport& r) {
  if (!r.implementations_agree())
    return fmt::format("digit-scan count {} disagrees with divisor-scan count {}", r.digit_scan_count,
                       r.divisor_scan_count);
  if (r.limit == 100 && r.count != kPaperClaimCount100)
    return fmt::format("computed P(100) = {} differs from the published claim {} (difference {})", r.count,
                       kPaperClaimCount100,
                       static_cast<std::int64_t>(r.count) - static_cast<std::int64_t>(kPaperClaimCount100));
  return {};
}

ordered_json to_json(const DensityReport& r) {
  ordered_json j;
  j["limit"] = r.limit;
  j["count"] = r.count;
  j["density"] = r.density;
  j["digit_scan_count"] = r.digit_scan_count;
  j["divisor_scan_count"] = r.divisor_scan_count;
  j["implementations_agree"] = r.implementations_agree();
  if (r.limit == 100) {
    j["paper_claim_count"] = kPaperClaimCount100;
    j["paper_claim_density"] = kPaperClaimDensity100;
    j["discrepancy"] = static_cast<std::int64_t>(r.count) - static_cast<std::int64_t>(kPaperClaimCount100);
  } else {
    j["paper_claim_count"] = nullptr;
    j["paper_claim_density"] = nullptr;
    j["discrepancy"] = nullptr;
  }
  j["note"] = density_discrepancy_note(r);
  return j;
}

void write_density_csv(std::ostream& os, const DensityReport& r) {
  os << "limit,count,density,digit_scan_count,divisor_scan_count,implementations_agree,"
        "paper_claim_count,paper_claim_density,discrepancy,note\n";
  std::string claim_count, claim_density, diff;
  if (r.limit == 100) {
    claim_count = fmt::format("{}", kPaperClaimCount100);
    claim_density = format_real(kPaperClaimDensity100);
    diff = fmt::format("{}", static_cast<std::int64_t>(r.count) - static_cast<std::int64_t>(kPaperClaimCount100));
  }
  std::string note = density_discrepancy_note(r);
  std::replace(note.begin(), note.end(), ',', ';');
  fmt::print(os, "{},{},{},{},{},{},{},{},{},{}\n", r.limit, r.count, format_real(r.density), r.digit_scan_count,
             r.divisor_scan_count, r.implementations_agree() ? "true" : "false", claim_count, claim_density, diff,
             note);
}

// --- SVG ----------------------------------------------------------------

namespace {

struct Box {
  std::int64_t x0, y0, x1, y1;
};

Box inflated(Box b) { return {b.x0 - 1, b.y0 - 1, b.x1 + 1, b.y1 + 1}; }

Box box_of(const std::vector<const curves::LatticeCurve*>& curves) {
  Box b{curves.front()->start().x, curves.front()->start().y, curves.front()->start().x,
        curves.front()->start().y};
  for (const auto* c : curves) {
    for (auto p : c->vertices()) {
      b.x0 = std::min(b.x0, p.x);
      b.y0 = std::min(b.y0, p.y);
      b.x1 = std::max(b.x1, p.x);
      b.y1 = std::max(b.y1, p.y);
    }
  }
  return inflated(b);
}

std::string path_data(const curves::LatticeCurve& c) {
  std::string d = fmt::format("M {} {}", c.start().x, c.start().y);
  for (std::size_t i = 1; i < c.vertices().size(); ++i)
    d += fmt::format(" L {} {}", c.vertices()[i].x, c.vertices()[i].y);
  return d;
}

void svg_open(std::ostream& os, Box b, const SvgOptions& o) {
  const auto w = b.x1 - b.x0;
  const auto h = b.y1 - b.y0;
  fmt::print(os,
             "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
             format_real(static_cast<double>(w) * o.unit), format_real(static_cast<double>(h) * o.unit), b.x0,
             b.y0, w, h);
  // Mirror about the box's horizontal centre line so +y points up while the
  // viewBox stays in lattice coordinates.
  fmt::print(os,
             "<g transform=\"matrix(1 0 0 -1 0 {})\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\" "
             "stroke-linecap=\"round\" stroke-linejoin=\"round\">\n",
             b.y0 + b.y1, format_real(o.stroke_width));
}

void svg_close(std::ostream& os) { os << "</g>\n</svg>\n"; }

} // namespace

void write_curve_svg(std::ostream& os, const curves::LatticeCurve& curve, const SvgOptions& opts) {
  svg_open(os, box_of({&curve}), opts);
  fmt::print(os, "<path d=\"{}\"/>\n", path_data(curve));
  svg_close(os);
}

void write_tessellation_svg(std::ostream& os, const curves::Tessellation& t, const SvgOptions& opts) {
  std::vector<const curves::LatticeCurve*> tiles;
  for (const auto& c : t.tiles) tiles.push_back(&c);
  svg_open(os, box_of(tiles), opts);
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const auto& m = t.placements[i];
    fmt::print(os, "<path data-tile=\"{}\" data-motion=\"rot={} reflect={} t=({},{})\" d=\"{}\"/>\n", i,
               m.rotation, m.reflect ? 1 : 0, m.translation.x, m.translation.y, path_data(t.tiles[i]));
  }
  svg_close(os);
}

ordered_json to_json(const curves::CurveStats& s) {
  ordered_json j;
  j["segment_count"] = s.segment_count;
  j["unique_edge_count"] = s.unique_edge_count;
  j["unique_vertex_count"] = s.unique_vertex_count;
  j["component_count"] = s.component_count;
  j["revisited_vertex_count"] = s.revisited_vertex_count;
  j["bounded_region_count"] = s.bounded_region_count;
  j["bounding_box"] = {s.bounding_box.min.x, s.bounding_box.min.y, s.bounding_box.max.x, s.bounding_box.max.y};
  j["max_turn_run"] = s.max_turn_run;
  return j;
}

void write_curve_stats_csv(std::ostream& os, const curves::CurveStats& s) {
  os << "segment_count,unique_edge_count,unique_vertex_count,component_count,revisited_vertex_count,"
        "bounded_region_count,bbox_min_x,bbox_min_y,bbox_max_x,bbox_max_y,max_turn_run\n";
  fmt::print(os, "{},{},{},{},{},{},{},{},{},{},{}\n", s.segment_count, s.unique_edge_count, s.unique_vertex_count,
             s.component_count, s.revisited_vertex_count, s.bounded_region_count, s.bounding_box.min.x,
             s.bounding_box.min.y, s.bounding_box.max.x, s.bounding_box.max.y, s.max_turn_run);
}

// --- DOT ----------------------------------------------------------------

void write_dot(std::ostream& os, const graphs::PatternedDag& dag) {
  using graphs::NodeKind;
  os << "digraph patterned {\n  rankdir=LR;\n  node [style=filled, fillcolor=white];\n";
  for (const auto& node : dag.nodes) {
    const char* shape = "circle";
    const char* fill = "white";
    const char* extra = "";
    switch (node.kind) {
    case NodeKind::PatternedPrimeDigit1: fill = "lightblue"; break;
    case NodeKind::PatternedPrimeSmall: break;
    case NodeKind::PatternedComposite: shape = "box"; break;
    case NodeKind::GapPrime:
      fill = "lightgray";
      extra = ", style=\"filled,dashed\"";
      break;
    case NodeKind::Unpatterned: shape = "plaintext"; break;
    }
    fmt::print(os, "  {} [shape={}, fillcolor={}, kind=\"{}\"{}];\n", node.n, shape, fill,
               graphs::to_string(node.kind), extra);
  }
  for (const auto& e : dag.edges) {
    if (e.kind == graphs::EdgeKind::Chain)
      fmt::print(os, "  {} -> {} [kind=\"chain\"];\n", e.from, e.to);
    else
      fmt::print(os, "  {} -> {} [kind=\"cluster\", color=blue, style=bold];\n", e.from, e.to);
  }
  os << "}\n";
}

// --- dynamics -----------------------------------------------------------

void write_spectrum_csv(std::ostream& os, const dynamics::Spectrum& s) {
  os << "index,eigenvalue,participation_ratio\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    fmt::print(os, "{},{},{}\n", i + 1, format_real(s.eigenvalues[i]), format_real(s.participation_ratios[i]));
}

void write_sweep_csv(std::ostream& os, const std::vector<dynamics::SweepPoint>& points) {
  os << "s,ground_energy,gap,ground_participation_ratio\n";
  for (const auto& p : points)
    fmt::print(os, "{},{},{},{}\n", format_real(p.s), format_real(p.ground_energy), format_real(p.gap),
               format_real(p.ground_participation_ratio));
}

void write_walk_csv(std::ostream& os, const std::vector<std::vector<double>>& series) {
  os << "step";
  const std::size_t n = series.empty() ? 0 : series.front().size();
  for (std::size_t i = 1; i <= n; ++i) fmt::print(os, ",pos_{}", i);
  os << '\n';
  for (std::size_t t = 0; t < series.size(); ++t) {
    os << t;
    for (double p : series[t]) os << ',' << format_real(p);
    os << '\n';
  }
}

} // namespace patterned::io
