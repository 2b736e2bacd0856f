#include "patterned/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "patterned/core.hpp"
#include "patterned/curves.hpp"
#include "patterned/dynamics.hpp"
#include "patterned/errors.hpp"
#include "patterned/graphs.hpp"
#include "patterned/io.hpp"

namespace patterned::cli {

namespace {

template <typename T>
void read_key(const nlohmann::json& j, const char* key, T& field) {
  if (!j.contains(key)) return;
  try {
    field = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(fmt::format("config key '{}' has the wrong type", key));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot read '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Renders into memory first so a failed open leaves no partial output.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  std::ostringstream buf;
  body(buf);
  if (path.empty() || path == "-") {
    fallback << buf.str();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError(fmt::format("cannot write '{}'", path));
  f << buf.str();
  if (!f) throw IoError(fmt::format("write to '{}' failed", path));
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidInput(msg);
}

void require_finite(double v, const char* name) {
  require(std::isfinite(v), fmt::format("--{} must be finite", name));
}

void require_one_of(const std::string& v, std::initializer_list<const char*> options, const char* name) {
  for (const char* o : options)
    if (v == o) return;
  std::string allowed;
  for (const char* o : options) allowed += allowed.empty() ? o : std::string("|") + o;
  throw InvalidInput(fmt::format("--{} must be one of {}, got '{}'", name, allowed, v));
}

void validate(const RunConfig& c, const std::string& cmd) {
  require(c.limit >= 1 && c.limit <= kMaxInteger, "--limit must lie in 1..2^63-1");
  if (cmd == "dag") require(c.limit >= 2, "--limit must be >= 2 for dag");
  require(c.k >= 1, "--k must be >= 1");
  for (char ch : c.turns) require(ch == 'L' || ch == 'R' || ch == 'l' || ch == 'r', "--turns must contain only L and R");
  require_finite(c.alpha, "alpha");
  require_finite(c.beta, "beta");
  require_finite(c.theta_l, "theta-l");
  require_finite(c.theta_r, "theta-r");
  require_finite(c.g_l, "g-l");
  require_finite(c.g_r, "g-r");
  require_finite(c.omega, "omega");
  require(c.omega > 0, "--omega must be positive");
  require(c.s >= 0.0 && c.s <= 1.0, "--s must lie in [0, 1]");
  require_one_of(c.omega_mode, {"energy", "constant"}, "omega-mode");
  if (cmd == "gen")
    require_one_of(c.format, {"csv", "json", "bfile"}, "format");
  else
    require_one_of(c.format, {"csv", "json"}, "format");
  require(std::isfinite(c.unit) && c.unit > 0, "--unit must be positive");
  require(c.edge_cap >= 1, "--edge-cap must be >= 1");
  require_one_of(c.start_coin, {"L", "R"}, "start-coin");
  require_one_of(c.boundary, {"reflecting", "absorbing"}, "boundary");
  require(c.positions == 0 || c.positions >= 2, "--positions must be >= 2");
  if (cmd == "seahorse-scan") require(c.k <= 24, "--k must be <= 24 for seahorse-scan");
}

std::vector<Turn> curve_turns(const RunConfig& c) {
  return c.turns.empty() ? turn_sequence(c.k) : parse_turns(c.turns);
}

std::vector<curves::RigidMotion> parse_placements(const std::string& spec) {
  std::vector<curves::RigidMotion> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    int rot = 0, refl = 0;
    long long tx = 0, ty = 0;
    char extra = 0;
    if (std::sscanf(item.c_str(), "%d:%d:%lld:%lld%c", &rot, &refl, &tx, &ty, &extra) != 4 ||
        (refl != 0 && refl != 1))
      throw InvalidInput(fmt::format("--placements entry '{}' is not rot:reflect:tx:ty", item));
    out.push_back(curves::RigidMotion::make(rot, refl == 1, {tx, ty}));
  }
  if (out.empty()) throw InvalidInput("--placements is empty");
  return out;
}

dynamics::ChainParams chain_params(const RunConfig& c) {
  dynamics::ChainParams p;
  p.limit = c.limit;
  p.weights = {c.alpha, c.beta};
  p.g_l = c.g_l;
  p.g_r = c.g_r;
  p.omega_mode = c.omega_mode == "constant" ? dynamics::OmegaMode::Constant : dynamics::OmegaMode::Energy;
  p.omega = c.omega;
  p.s = c.s;
  return p;
}

io::ordered_json curve_json(const curves::LatticeCurve& curve, const curves::CurveStats& stats) {
  io::ordered_json j;
  j["turns"] = to_string(curve.source_turns());
  io::ordered_json verts = io::ordered_json::array();
  for (auto p : curve.vertices()) verts.push_back({p.x, p.y});
  j["vertices"] = std::move(verts);
  j["stats"] = io::to_json(stats);
  return j;
}

void write_curve_outputs(const RunConfig& c, const curves::LatticeCurve& curve, std::ostream& out) {
  const auto stats = curves::curve_stats(curve);
  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "json")
      os << curve_json(curve, stats).dump(2) << '\n';
    else
      io::write_curve_stats_csv(os, stats);
  });
  if (!c.svg.empty())
    emit(c.svg, out, [&](std::ostream& os) { io::write_curve_svg(os, curve, {c.unit, 0.1}); });
}

// --- subcommands ----------------------------------------------------------

void cmd_gen(const RunConfig& c, std::ostream& out) {
  std::vector<DigitDivisorProfile> rows;
  for (std::uint64_t n = 1; n <= c.limit; ++n) {
    auto p = profile(n);
    if (p.is_patterned || c.all) rows.push_back(p);
  }
  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "bfile") {
      std::vector<std::uint64_t> seq;
      for (const auto& p : rows)
        if (p.is_patterned) seq.push_back(p.n);
      io::write_bfile(os, seq);
    } else if (c.format == "json") {
      io::ordered_json arr = io::ordered_json::array();
      for (const auto& p : rows) arr.push_back(io::to_json(p));
      os << arr.dump(2) << '\n';
    } else {
      io::write_profiles_csv(os, rows);
    }
  });
}

void cmd_count(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto r = count_and_density(c.limit);
  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "json")
      os << io::to_json(r).dump(2) << '\n';
    else
      io::write_density_csv(os, r);
  });
  if (const auto note = io::density_discrepancy_note(r); !note.empty()) err << "note: " << note << '\n';
}

void cmd_primes(const RunConfig& c, std::ostream& out) {
  io::ordered_json arr = io::ordered_json::array();
  std::vector<std::pair<std::uint64_t, graphs::NodeKind>> rows;
  for (std::uint64_t p : primes_up_to(c.limit)) {
    const auto label = graphs::classify(p);
    if (label.kind == graphs::NodeKind::GapPrime && !c.gap_primes) continue;
    rows.emplace_back(p, label.kind);
  }
  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "json") {
      for (auto [p, k] : rows) arr.push_back({{"p", p}, {"kind", graphs::to_string(k)}});
      os << arr.dump(2) << '\n';
    } else {
      os << "p,kind\n";
      for (auto [p, k] : rows) fmt::print(os, "{},{}\n", p, graphs::to_string(k));
    }
  });
}

void cmd_gaps(const RunConfig& c, std::ostream& out) {
  const auto g = graphs::gap_statistics(c.limit);
  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "json") {
      io::ordered_json j;
      j["gaps"] = io::ordered_json::array();
      for (const auto& gap : g.gaps) j["gaps"].push_back({{"start", gap.start}, {"length", gap.length}});
      j["gap_primes"] = g.gap_primes;
      os << j.dump(2) << '\n';
    } else {
      os << "gap_start,gap_length\n";
      for (const auto& gap : g.gaps) fmt::print(os, "{},{}\n", gap.start, gap.length);
    }
  });
}

void cmd_turns(const RunConfig& c, std::ostream& out) {
  const auto seq = first_patterned(c.k);
  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "json") {
      io::ordered_json arr = io::ordered_json::array();
      for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto p = profile(seq[i]);
        arr.push_back({{"index", i + 1}, {"n", p.n}, {"match_count", p.match_count},
                       {"turn", std::string(1, to_char(*p.turn))}});
      }
      os << arr.dump(2) << '\n';
    } else {
      os << "index,n,match_count,turn\n";
      for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto p = profile(seq[i]);
        fmt::print(os, "{},{},{},{}\n", i + 1, p.n, p.match_count, to_char(*p.turn));
      }
    }
  });
}

void cmd_curve(const RunConfig& c, std::ostream& out) {
  write_curve_outputs(c, curves::trace(curve_turns(c)), out);
}

void cmd_seahorse_scan(const RunConfig& c, std::ostream& out) {
  const auto words = curves::seahorse_scan(c.k);
  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "json") {
      io::ordered_json arr = io::ordered_json::array();
      for (const auto& w : words) arr.push_back({{"length", w.size()}, {"word", to_string(w)}});
      os << arr.dump(2) << '\n';
    } else {
      os << "length,word\n";
      for (const auto& w : words) fmt::print(os, "{},{}\n", w.size(), to_string(w));
    }
  });
}

void cmd_dragon(const RunConfig& c, std::ostream& out) {
  const auto seed = curves::trace(curve_turns(c));
  write_curve_outputs(c, curves::iterate_dragon(seed, c.generations, c.edge_cap), out);
}

void cmd_tessellate(const RunConfig& c, std::ostream& out) {
  const auto t = curves::tessellate(curves::trace(curve_turns(c)), parse_placements(c.placements));
  const auto edges = t.edge_set();
  const auto counts = curves::planar_counts(edges);
  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "json") {
      io::ordered_json j;
      j["tiles"] = t.tiles.size();
      j["unique_edge_count"] = counts.edges;
      j["overlap_count"] = t.overlap_count;
      j["bounded_region_count"] = counts.bounded_regions;
      os << j.dump(2) << '\n';
    } else {
      os << "tiles,unique_edge_count,overlap_count,bounded_region_count\n";
      fmt::print(os, "{},{},{},{}\n", t.tiles.size(), counts.edges, t.overlap_count, counts.bounded_regions);
    }
  });
  if (!c.svg.empty())
    emit(c.svg, out, [&](std::ostream& os) { io::write_tessellation_svg(os, t, {c.unit, 0.1}); });
}

void cmd_dag(const RunConfig& c, std::ostream& out) {
  const auto dag = graphs::build_dag(c.limit, {c.chain, c.cluster, c.gap_primes});
  graphs::verify_acyclic_and_sort(dag);
  emit(c.out, out, [&](std::ostream& os) { io::write_dot(os, dag); });
}

void cmd_walk(const RunConfig& c, std::ostream& out) {
  const std::size_t n = c.positions != 0 ? c.positions : patterned_sequence(c.limit).size();
  require(n >= 2, "walk needs at least two positions");
  require(c.start < n, fmt::format("--start must be < {}", n));
  const auto series =
      dynamics::run_walk(n, c.steps, {c.theta_l, c.theta_r}, c.start, turn_from_char(c.start_coin[0]),
                         std::nullopt,
                         c.boundary == "absorbing" ? dynamics::Boundary::Absorbing : dynamics::Boundary::Reflecting);
  emit(c.out, out, [&](std::ostream& os) { io::write_walk_csv(os, series); });
}

void cmd_modes(const RunConfig& c, std::ostream& out) {
  const auto chain = dynamics::patterned_chain(chain_params(c));
  const auto spec = dynamics::eigensystem(dynamics::build_single_excitation_hamiltonian(chain));
  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "json") {
      io::ordered_json j;
      j["s"] = chain.s;
      j["eigenvalues"] = spec.eigenvalues;
      j["participation_ratios"] = spec.participation_ratios;
      os << j.dump(2) << '\n';
    } else {
      io::write_spectrum_csv(os, spec);
    }
  });
}

void cmd_sweep(const RunConfig& c, std::ostream& out) {
  const auto chain = dynamics::patterned_chain(chain_params(c));
  const auto points = dynamics::adiabatic_sweep(chain, parse_s_grid(c.s_grid));
  emit(c.out, out, [&](std::ostream& os) { io::write_sweep_csv(os, points); });
}

} // namespace

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("config must be a JSON object");
  static const std::set<std::string> known = {
      "limit", "k", "turns", "alpha", "beta", "theta_l", "theta_r", "g_l", "g_r", "omega_mode", "omega", "s",
      "s_grid", "format", "out", "svg", "unit", "generations", "edge_cap", "steps", "positions", "start",
      "start_coin", "boundary", "placements", "all", "gap_primes", "chain", "cluster"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw InvalidInput(fmt::format("unknown config key '{}'", key));

  RunConfig c;
  if (j.contains("limit") && j.at("limit").is_number_integer() && j.at("limit").get<std::int64_t>() < 1)
    throw InvalidInput("config key 'limit' must be >= 1");
  read_key(j, "limit", c.limit);
  read_key(j, "k", c.k);
  read_key(j, "turns", c.turns);
  read_key(j, "alpha", c.alpha);
  read_key(j, "beta", c.beta);
  read_key(j, "theta_l", c.theta_l);
  read_key(j, "theta_r", c.theta_r);
  read_key(j, "g_l", c.g_l);
  read_key(j, "g_r", c.g_r);
  read_key(j, "omega_mode", c.omega_mode);
  read_key(j, "omega", c.omega);
  read_key(j, "s", c.s);
  read_key(j, "s_grid", c.s_grid);
  read_key(j, "format", c.format);
  read_key(j, "out", c.out);
  read_key(j, "svg", c.svg);
  read_key(j, "unit", c.unit);
  read_key(j, "generations", c.generations);
  read_key(j, "edge_cap", c.edge_cap);
  read_key(j, "steps", c.steps);
  read_key(j, "positions", c.positions);
  read_key(j, "start", c.start);
  read_key(j, "start_coin", c.start_coin);
  read_key(j, "boundary", c.boundary);
  read_key(j, "placements", c.placements);
  read_key(j, "all", c.all);
  read_key(j, "gap_primes", c.gap_primes);
  read_key(j, "chain", c.chain);
  read_key(j, "cluster", c.cluster);
  return c;
}

std::vector<double> parse_s_grid(const std::string& spec) {
  std::vector<double> grid;
  auto to_double = [&](const std::string& tok) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw InvalidInput(fmt::format("--s-grid: '{}' is not a number", tok));
    return v;
  };

  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(tok);
    if (parts.size() != 3) throw InvalidInput("--s-grid range must be start:stop:count");
    const double a = to_double(parts[0]);
    const double b = to_double(parts[1]);
    const double n = to_double(parts[2]);
    if (n < 1 || n != std::floor(n) || n > 1e6) throw InvalidInput("--s-grid count must be a positive integer");
    const auto count = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < count; ++i)
      grid.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  } else {
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ',');) grid.push_back(to_double(tok));
  }
  if (grid.empty()) throw InvalidInput("--s-grid is empty");
  for (double s : grid)
    if (!(s >= 0.0 && s <= 1.0)) throw InvalidInput(fmt::format("--s-grid value {} outside [0, 1]", s));
  return grid;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size())
        path = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0)
        path = args[i].substr(9);
      if (path.empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(read_file(path));
      } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(fmt::format("config '{}' is not valid JSON: {}", path, e.what()));
      }
      cfg = config_from_json(j);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  CLI::App app{"Digit-divisor patterned numbers: sequences, curves, DAGs and walk dynamics", "patterned"};
  app.require_subcommand(1, 1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with RunConfig keys; flags override it");

  auto out_opts = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv or json");
    sub->add_option("-o,--out", cfg.out, "output path (default stdout)");
  };
  auto limit_opt = [&](CLI::App* sub) { sub->add_option("--limit", cfg.limit, "upper bound N"); };
  auto chain_opts = [&](CLI::App* sub) {
    limit_opt(sub);
    sub->add_option("--alpha", cfg.alpha, "energy weight per divisor-digit match");
    sub->add_option("--beta", cfg.beta, "energy penalty for a repeated turn");
    sub->add_option("--g-l", cfg.g_l, "coupling after an L site");
    sub->add_option("--g-r", cfg.g_r, "coupling after an R site");
    sub->add_option("--omega-mode", cfg.omega_mode, "energy | constant");
    sub->add_option("--omega", cfg.omega, "site frequency when omega-mode is constant");
  };
  auto curve_opts = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "number of patterned numbers driving the turns");
    sub->add_option("--turns", cfg.turns, "explicit L/R word (overrides --k)");
    sub->add_option("--svg", cfg.svg, "write an SVG drawing here");
    sub->add_option("--unit", cfg.unit, "SVG pixels per lattice step");
  };

  auto* gen = app.add_subcommand("gen", "patterned numbers <= limit with their profiles");
  limit_opt(gen);
  out_opts(gen);
  gen->add_flag("--all", cfg.all, "include non-patterned rows");

  auto* count = app.add_subcommand("count", "count and density, with the published N=100 claim");
  limit_opt(count);
  out_opts(count);

  auto* primes = app.add_subcommand("primes", "patterned primes (and gap primes with --gap-primes)");
  limit_opt(primes);
  out_opts(primes);
  primes->add_flag("--gap-primes", cfg.gap_primes, "also list gap primes");

  auto* gaps = app.add_subcommand("gaps", "runs of non-patterned integers and gap primes");
  limit_opt(gaps);
  out_opts(gaps);

  auto* turns = app.add_subcommand("turns", "turn sequence of the first k patterned numbers");
  turns->add_option("--k", cfg.k, "length");
  out_opts(turns);

  auto* curve = app.add_subcommand("curve", "trace a turn word; statistics and optional SVG");
  curve_opts(curve);
  out_opts(curve);

  auto* scan = app.add_subcommand("seahorse-scan", "all seahorse words up to length k");
  scan->add_option("--k", cfg.k, "maximum word length");
  out_opts(scan);

  auto* dragon = app.add_subcommand("dragon", "iterate G -> G + Rot90(G) + v");
  curve_opts(dragon);
  out_opts(dragon);
  dragon->add_option("--generations", cfg.generations, "number of doublings");
  dragon->add_option("--edge-cap", cfg.edge_cap, "maximum segment count");

  auto* tess = app.add_subcommand("tessellate", "union of rigid-motion copies of a traced curve");
  curve_opts(tess);
  out_opts(tess);
  tess->add_option("--placements", cfg.placements, "rot:reflect:tx:ty entries separated by ';'");

  auto* dag = app.add_subcommand("dag", "patterned-number DAG as Graphviz DOT");
  limit_opt(dag);
  dag->add_option("-o,--out", cfg.out, "output path (default stdout)");
  dag->add_flag("!--no-chain", cfg.chain, "omit consecutive-patterned edges");
  dag->add_flag("!--no-cluster", cfg.cluster, "omit patterned-prime edges");
  dag->add_flag("--gap-primes", cfg.gap_primes, "add gap primes as isolated nodes");

  auto* walk = app.add_subcommand("walk", "coined walk on the patterned chain; distribution per step");
  limit_opt(walk);
  walk->add_option("-o,--out", cfg.out, "output path (default stdout)");
  walk->add_option("--positions", cfg.positions, "chain length (default: patterned count <= limit)");
  walk->add_option("--steps", cfg.steps, "number of steps");
  walk->add_option("--theta-l", cfg.theta_l, "coin angle at L sites (radians)");
  walk->add_option("--theta-r", cfg.theta_r, "coin angle at R sites (radians)");
  walk->add_option("--start", cfg.start, "0-based start position");
  walk->add_option("--start-coin", cfg.start_coin, "L or R");
  walk->add_option("--boundary", cfg.boundary, "reflecting | absorbing");

  auto* modes = app.add_subcommand("modes", "single-excitation spectrum of H(s)");
  chain_opts(modes);
  out_opts(modes);
  modes->add_option("--s", cfg.s, "interpolation parameter in [0, 1]");

  auto* sweep = app.add_subcommand("sweep", "ground energy, gap and ground-mode PR over an s grid");
  chain_opts(sweep);
  sweep->add_option("-o,--out", cfg.out, "output path (default stdout)");
  sweep->add_option("--s-grid", cfg.s_grid, "start:stop:count or comma list");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    validate(cfg, cmd);
    if (cmd == "gen") cmd_gen(cfg, out);
    else if (cmd == "count") cmd_count(cfg, out, err);
    else if (cmd == "primes") cmd_primes(cfg, out);
    else if (cmd == "gaps") cmd_gaps(cfg, out);
    else if (cmd == "turns") cmd_turns(cfg, out);
    else if (cmd == "curve") cmd_curve(cfg, out);
    else if (cmd == "seahorse-scan") cmd_seahorse_scan(cfg, out);
    else if (cmd == "dragon") cmd_dragon(cfg, out);
    else if (cmd == "tessellate") cmd_tessellate(cfg, out);
    else if (cmd == "dag") cmd_dag(cfg, out);
    else if (cmd == "walk") cmd_walk(cfg, out);
    else if (cmd == "modes") cmd_modes(cfg, out);
    else if (cmd == "sweep") cmd_sweep(cfg, out);
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

} // namespace patterned::cli
