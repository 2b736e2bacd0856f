#pragma once

// Walks and oscillator spectra on the chain of patterned numbers.
//
// Two walk flavours live here. The literal turn operator
//   U |p_n>|c> = |p_{n+1}>|turn(p_n)>
// discards the incoming coin, so it is not unitary; it is executed as a
// deterministic classical rewrite. The coined walk replaces it with a per-site
// coin rotation whose angle is picked by the site's turn, followed by a
// coin-conditioned shift, and is exactly unitary.
//
// Oscillator physics is restricted to the single-excitation sector, where
// H(s) = (1-s) H0 + s Hint is a real symmetric tridiagonal matrix.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "patterned/core.hpp"
#include "patterned/curves.hpp"
#include "patterned/tridiag.hpp"

namespace patterned::dynamics {

// --- deterministic walk -------------------------------------------------

struct WalkStep {
  std::size_t index = 0;       // 1-based position in the patterned sequence
  std::uint64_t value = 0;     // p_index
  Turn coin = Turn::L;         // coin after the step, turn(p_index)
  curves::Point position;      // lattice point reached by this step
  curves::Heading heading = curves::Heading::E; // heading after turning
};

struct Trajectory {
  std::vector<curves::Point> vertices; // start point followed by each step's position
  std::vector<WalkStep> steps;
};

/// Applies the literal turn operator k times starting from |p_1>|initial_coin>,
/// tracking the geometric position on the lattice. The incoming coin never
/// influences the result.
Trajectory deterministic_walk(std::size_t k, Turn initial_coin = Turn::L);

// --- coined walk --------------------------------------------------------

struct CoinSpec {
  double theta_l = std::numbers::pi / 4;
  double theta_r = -std::numbers::pi / 4;
};

enum class Boundary { Reflecting, Absorbing };

inline constexpr double kNormTolerance = 1e-10;

/// Amplitudes over (position 0..N-1) x (coin L, R).
class WalkState {
public:
  using Amplitude = std::complex<double>;

  WalkState() = default;
  explicit WalkState(std::size_t positions) : amps_(2 * positions) {}

  static WalkState localized(std::size_t positions, std::size_t at, Turn coin);

  std::size_t positions() const { return amps_.size() / 2; }
  Amplitude& at(std::size_t pos, Turn coin) { return amps_[2 * pos + (coin == Turn::R)]; }
  const Amplitude& at(std::size_t pos, Turn coin) const { return amps_[2 * pos + (coin == Turn::R)]; }

  double norm() const;
  /// Marginal probability per position.
  std::vector<double> distribution() const;

  std::size_t step_count = 0;

private:
  std::vector<Amplitude> amps_;
};

/// One coin-then-shift step. Coin L moves toward position 0, coin R away.
/// At a reflecting wall the move is reversed (coin flips, position stays);
/// at an absorbing wall the amplitude is discarded.
/// Throws InvalidInput if the state is not normalised (reflecting) or has
/// norm above 1 (absorbing), or if turns.size() != positions.
WalkState unitary_walk_step(const WalkState& state, const CoinSpec& coins, const std::vector<Turn>& turns,
                            Boundary boundary = Boundary::Reflecting);

/// Position distributions after 0, 1, ..., steps steps. Site turns default to
/// turn_sequence(positions).
std::vector<std::vector<double>> run_walk(std::size_t positions, std::size_t steps, const CoinSpec& coins,
                                          std::size_t start, Turn start_coin,
                                          std::optional<std::vector<Turn>> turns = std::nullopt,
                                          Boundary boundary = Boundary::Reflecting);

// --- energies and oscillator chains -------------------------------------

/// E(p_n) for every patterned p_n <= limit, using the previous site's turn
/// as the curvature reference.
std::vector<double> energy_landscape(std::uint64_t limit, EnergyWeights weights);

struct OscillatorChain {
  std::vector<double> omegas;
  double g_l = 1.0;
  double g_r = 1.0;
  std::vector<Turn> turns; // one per adjacent pair
  double s = 0.0;

  /// Throws InvalidInput on broken invariants.
  void validate() const;
};

enum class OmegaMode { Constant, Energy };

struct ChainParams {
  std::uint64_t limit = 100;
  EnergyWeights weights{};
  double g_l = 1.0;
  double g_r = 1.0;
  OmegaMode omega_mode = OmegaMode::Energy;
  double omega = 1.0; // used when omega_mode == Constant
  double s = 0.5;
};

/// Chain over the patterned numbers <= limit: omega_n from energy_landscape
/// (or constant), turns[n] = turn(p_n) for n = 1..N-1.
OscillatorChain patterned_chain(const ChainParams& params);

/// Diagonal (1-s) omega_n, off-diagonal s g_{turns[n]}.
SymTridiagonal build_single_excitation_hamiltonian(const OscillatorChain& chain);

struct SweepPoint {
  double s = 0.0;
  double ground_energy = 0.0;
  double gap = 0.0; // lambda_2 - lambda_1
  double ground_participation_ratio = 0.0;
};

/// Spectra of H(s) for each s in s_grid using the chain's omegas, couplings
/// and turns (its own s is ignored). Needs at least two sites.
std::vector<SweepPoint> adiabatic_sweep(const OscillatorChain& chain_template, const std::vector<double>& s_grid);

} // namespace patterned::dynamics
