#include "patterned/dynamics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "patterned/errors.hpp"

namespace patterned::dynamics {

Trajectory deterministic_walk(std::size_t k, Turn initial_coin) {
  if (k == 0) throw InvalidInput("walk length k must be >= 1");
  const auto seq = first_patterned(k);

  // (node index, coin) state plus the turtle pose it drives.
  std::size_t node = 0;
  Turn coin = initial_coin;
  curves::Point pos{};
  int heading = 0; // 0=E, 1=N, 2=W, 3=S
  constexpr std::int64_t dx[] = {1, 0, -1, 0};
  constexpr std::int64_t dy[] = {0, 1, 0, -1};

  Trajectory t;
  t.vertices.push_back(pos);
  for (std::size_t step = 0; step < k; ++step) {
    // |p_n>|c> -> |p_{n+1}>|turn(p_n)>; c is overwritten, never read.
    const Turn emitted = turn(seq[node]);
    pos = {pos.x + dx[heading], pos.y + dy[heading]};
    heading = (heading + (emitted == Turn::L ? 1 : 3)) % 4;
    coin = emitted;
    t.vertices.push_back(pos);
    t.steps.push_back({node + 1, seq[node], coin, pos, static_cast<curves::Heading>(heading)});
    ++node;
  }
  return t;
}

WalkState WalkState::localized(std::size_t positions, std::size_t at, Turn coin) {
  if (at >= positions) throw InvalidInput(fmt::format("start position {} outside 0..{}", at, positions - 1));
  WalkState s(positions);
  s.at(at, coin) = 1.0;
  return s;
}

double WalkState::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

std::vector<double> WalkState::distribution() const {
  std::vector<double> p(positions());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(at(i, Turn::L)) + std::norm(at(i, Turn::R));
  return p;
}

WalkState unitary_walk_step(const WalkState& state, const CoinSpec& coins, const std::vector<Turn>& turns,
                            Boundary boundary) {
  const std::size_t n = state.positions();
  if (n == 0) throw InvalidInput("walk state has no positions");
  if (turns.size() != n)
    throw InvalidInput(fmt::format("need one turn per position: {} turns for {} positions", turns.size(), n));
  const double norm = state.norm();
  if (boundary == Boundary::Reflecting ? std::abs(norm - 1.0) > kNormTolerance : norm > 1.0 + kNormTolerance)
    throw InvalidInput(fmt::format("walk state norm {:.15g} is not 1", norm));

  const double cl = std::cos(coins.theta_l), sl = std::sin(coins.theta_l);
  const double cr = std::cos(coins.theta_r), sr = std::sin(coins.theta_r);

  WalkState next(n);
  next.step_count = state.step_count + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = turns[i] == Turn::L;
    const double c = left ? cl : cr;
    const double s = left ? sl : sr;
    const auto aL = state.at(i, Turn::L);
    const auto aR = state.at(i, Turn::R);
    const auto bL = c * aL - s * aR;
    const auto bR = s * aL + c * aR;

    if (i > 0)
      next.at(i - 1, Turn::L) += bL;
    else if (boundary == Boundary::Reflecting)
      next.at(i, Turn::R) += bL;

    if (i + 1 < n)
      next.at(i + 1, Turn::R) += bR;
    else if (boundary == Boundary::Reflecting)
      next.at(i, Turn::L) += bR;
  }
  return next;
}

std::vector<std::vector<double>> run_walk(std::size_t positions, std::size_t steps, const CoinSpec& coins,
                                          std::size_t start, Turn start_coin,
                                          std::optional<std::vector<Turn>> turns, Boundary boundary) {
  if (positions < 2) throw InvalidInput(fmt::format("walk needs >= 2 positions, got {}", positions));
  const std::vector<Turn> site_turns = turns ? std::move(*turns) : turn_sequence(positions);
  WalkState state = WalkState::localized(positions, start, start_coin);
  std::vector<std::vector<double>> series;
  series.reserve(steps + 1);
  series.push_back(state.distribution());
  for (std::size_t t = 0; t < steps; ++t) {
    state = unitary_walk_step(state, coins, site_turns, boundary);
    series.push_back(state.distribution());
  }
  return series;
}

std::vector<double> energy_landscape(std::uint64_t limit, EnergyWeights weights) {
  std::vector<double> energies;
  std::optional<Turn> prev;
  for (std::uint64_t n : patterned_sequence(limit)) {
    energies.push_back(site_energy(n, prev, weights));
    prev = turn(n);
  }
  return energies;
}

void OscillatorChain::validate() const {
  if (omegas.empty()) throw InvalidInput("oscillator chain needs at least one site");
  for (double w : omegas)
    if (!(w > 0.0) || !std::isfinite(w))
      throw InvalidInput(fmt::format("site frequencies must be positive and finite, got {}", w));
  if (turns.size() + 1 != omegas.size())
    throw InvalidInput(fmt::format("chain of {} sites needs {} turns, got {}", omegas.size(), omegas.size() - 1,
                                   turns.size()));
  if (!(s >= 0.0 && s <= 1.0)) throw InvalidInput(fmt::format("s must lie in [0, 1], got {}", s));
  if (!std::isfinite(g_l) || !std::isfinite(g_r)) throw InvalidInput("couplings must be finite");
}

OscillatorChain patterned_chain(const ChainParams& p) {
  OscillatorChain chain;
  const auto seq = patterned_sequence(p.limit);
  if (p.omega_mode == OmegaMode::Energy)
    chain.omegas = energy_landscape(p.limit, p.weights);
  else
    chain.omegas.assign(seq.size(), p.omega);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) chain.turns.push_back(turn(seq[i]));
  chain.g_l = p.g_l;
  chain.g_r = p.g_r;
  chain.s = p.s;
  chain.validate();
  return chain;
}

SymTridiagonal build_single_excitation_hamiltonian(const OscillatorChain& chain) {
  chain.validate();
  SymTridiagonal h;
  h.diag.reserve(chain.omegas.size());
  for (double w : chain.omegas) h.diag.push_back((1.0 - chain.s) * w);
  h.off.reserve(chain.turns.size());
  for (Turn t : chain.turns) h.off.push_back(chain.s * (t == Turn::L ? chain.g_l : chain.g_r));
  return h;
}

std::vector<SweepPoint> adiabatic_sweep(const OscillatorChain& chain_template, const std::vector<double>& s_grid) {
  if (chain_template.omegas.size() < 2) throw InvalidInput("adiabatic sweep needs at least two sites");
  std::vector<SweepPoint> out;
  out.reserve(s_grid.size());
  OscillatorChain chain = chain_template;
  for (double s : s_grid) {
    chain.s = s;
    const auto h = build_single_excitation_hamiltonian(chain);
    Spectrum spec;
    try {
      spec = eigensystem(h);
    } catch (const NumericalFailure& e) {
      throw NumericalFailure(fmt::format("at s = {:.12g}: {}", s, e.what()));
    }
    out.push_back({s, spec.eigenvalues[0], spec.eigenvalues[1] - spec.eigenvalues[0],
                   spec.participation_ratios[0]});
  }
  return out;
}

} // namespace patterned::dynamics
