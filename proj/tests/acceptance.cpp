// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include <fmt/core.h>

#include "patterned/cli.hpp"
#include "patterned/core.hpp"
#include "patterned/curves.hpp"
#include "patterned/dynamics.hpp"
#include "patterned/graphs.hpp"
#include "patterned/tridiag.hpp"

using namespace patterned;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!r.ok) ++failures;
  fmt::print("[{}] {:2d} {} ({:.2f} s){}{}\n", r.ok ? "PASS" : "FAIL", id, title, secs,
             r.detail.empty() ? "" : ": ", r.detail);
  std::fflush(stdout);
}

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
  std::ostringstream o, e;
  const int code = cli::run_cli(args, o, e);
  out = o.str();
  err = e.str();
  return code;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_digit_one(std::uint64_t n) {
  for (; n; n /= 10)
    if (n % 10 == 1) return true;
  return false;
}

} // namespace

int main() {
  criterion(1, "dual implementations agree for n in 1..1e6 within 10 s", [] {
    const auto t0 = Clock::now();
    for (std::uint64_t n = 1; n <= 1'000'000; ++n)
      if (detail::is_patterned_digit_scan(n) != detail::is_patterned_divisor_scan(n))
        return Outcome{false, fmt::format("disagree at n={}", n)};
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return Outcome{secs < 10.0, fmt::format("{:.3f} s", secs)};
  });

  criterion(2, "two-digit closed form over all 90 pairs", [] {
    for (int a = 1; a <= 9; ++a)
      for (int b = 0; b <= 9; ++b)
        if (is_patterned_two_digit(a, b) != is_patterned(static_cast<std::uint64_t>(10 * a + b)))
          return Outcome{false, fmt::format("mismatch at {}{}", a, b)};
    return Outcome{};
  });

  criterion(3, "prime theorem to 1e5 and primes --limit 100", [] {
    for (auto p : primes_up_to(100'000))
      if (is_patterned(p) != (p <= 9 || has_digit_one(p))) return Outcome{false, fmt::format("p={}", p)};
    std::string out, err;
    if (run({"primes", "--limit", "100"}, out, err) != 0) return Outcome{false, err};
    std::istringstream in(out);
    std::string line;
    std::getline(in, line);
    std::vector<std::uint64_t> got;
    while (std::getline(in, line)) got.push_back(std::stoull(line.substr(0, line.find(','))));
    const std::vector<std::uint64_t> want{2, 3, 5, 7, 11, 13, 17, 19, 31, 41, 61, 71};
    return Outcome{got == want, fmt::format("{} primes emitted", got.size())};
  });

  criterion(4, "count reconciliation at limit 100", [] {
    const auto r = count_and_density(100);
    std::string out, err;
    if (run({"count", "--limit", "100"}, out, err) != 0) return Outcome{false, err};
    const bool agree = r.implementations_agree();
    const bool side_by_side = out.find(fmt::format("100,{},", r.count)) != std::string::npos &&
                              out.find(",72,0.72,") != std::string::npos;
    const bool note = r.count == kPaperClaimCount100 || err.find("72") != std::string::npos;
    return Outcome{agree && side_by_side && note,
                   fmt::format("oracle {} vs claim {}, scans {}/{}", r.count, kPaperClaimCount100,
                               r.digit_scan_count, r.divisor_scan_count)};
  });

  criterion(5, "Euler count equals flood fill for all 8190 words of length <= 12 within 30 s", [] {
    const auto t0 = Clock::now();
    std::size_t words = 0;
    for (std::size_t len = 1; len <= 12; ++len) {
      for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        std::vector<Turn> w(len);
        for (std::size_t i = 0; i < len; ++i) w[i] = (mask >> i) & 1u ? Turn::R : Turn::L;
        const auto c = curves::trace(w);
        ++words;
        if (curves::curve_stats(c).bounded_region_count != curves::region_count_flood(c))
          return Outcome{false, to_string(w)};
      }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return Outcome{words == 8190 && secs < 30.0, fmt::format("{} words, {:.3f} s", words, secs)};
  });

  criterion(6, "deterministic walk equals traced curve for k <= 500", [] {
    for (std::size_t k = 1; k <= 500; ++k) {
      const auto traj = dynamics::deterministic_walk(k);
      if (traj.vertices != curves::trace(turn_sequence(k)).vertices())
        return Outcome{false, fmt::format("k={}", k)};
    }
    return Outcome{};
  });

  criterion(7, "coined walk on 69 positions keeps norm over 1000 steps", [] {
    const std::size_t n = patterned_sequence(100).size();
    const auto turns = turn_sequence(n);
    auto state = dynamics::WalkState::localized(n, n / 2, Turn::R);
    double drift = 0;
    for (int step = 0; step < 1000; ++step) {
      state = dynamics::unitary_walk_step(state, {}, turns);
      drift = std::max(drift, std::abs(state.norm() - 1.0));
    }
    return Outcome{n == 69 && drift < 1e-10, fmt::format("N={}, drift {:.3e}", n, drift)};
  });

  criterion(8, "uniform chain closed form and trace", [] {
    const double omega = 1.3, g = 0.8;
    double worst = 0, worst_trace = 0;
    for (std::size_t n : {2, 5, 50, 200}) {
      for (double s : {0.0, 0.5, 1.0}) {
        dynamics::OscillatorChain c;
        c.omegas.assign(n, omega);
        c.turns = turn_sequence(n - 1);
        c.g_l = c.g_r = g;
        c.s = s;
        const auto h = dynamics::build_single_excitation_hamiltonian(c);
        const auto sp = dynamics::eigensystem(h);
        std::vector<double> expect;
        for (std::size_t j = 1; j <= n; ++j)
          expect.push_back((1 - s) * omega + 2 * s * g * std::cos(j * std::numbers::pi / (n + 1.0)));
        std::sort(expect.begin(), expect.end());
        double sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
          worst = std::max(worst, std::abs(sp.eigenvalues[j] - expect[j]));
          sum += sp.eigenvalues[j];
        }
        const double scale = std::max(std::abs(h.trace()), h.norm1());
        worst_trace = std::max(worst_trace, std::abs(sum - h.trace()) / scale);
      }
    }
    return Outcome{worst < 1e-8 && worst_trace < 1e-8,
                   fmt::format("max eigen error {:.2e}, trace error {:.2e}", worst, worst_trace)};
  });

  criterion(9, "H(0) spectrum equals the sorted frequencies", [] {
    auto c = dynamics::patterned_chain({.limit = 100, .s = 0.0});
    const auto sp = dynamics::eigensystem(dynamics::build_single_excitation_hamiltonian(c));
    auto omegas = c.omegas;
    std::sort(omegas.begin(), omegas.end());
    double worst = 0;
    for (std::size_t i = 0; i < omegas.size(); ++i) worst = std::max(worst, std::abs(sp.eigenvalues[i] - omegas[i]));
    return Outcome{sp.eigenvalues.size() == omegas.size() && worst <= 1e-10, fmt::format("max error {:.2e}", worst)};
  });

  criterion(10, "DAG invariants at 1e4 and prime partition", [] {
    const auto dag = graphs::build_dag(10'000, {.include_gap_primes = true});
    const auto order = graphs::verify_acyclic_and_sort(dag);
    const auto count = patterned_sequence(10'000).size();
    if (order.size() != dag.nodes.size()) return Outcome{false, "sort dropped nodes"};
    if (dag.edge_count(graphs::EdgeKind::Chain) != count - 1) return Outcome{false, "chain edge count"};
    const auto sieve = prime_sieve(10'000);
    std::size_t primes = 0, covered = 0;
    for (std::uint64_t p = 2; p <= 10'000; ++p) {
      if (!sieve[p]) continue;
      ++primes;
      const auto kind = graphs::classify(p).kind;
      const bool patterned_prime = kind == graphs::NodeKind::PatternedPrimeDigit1 || kind == graphs::NodeKind::PatternedPrimeSmall;
      const bool gap_prime = kind == graphs::NodeKind::GapPrime;
      if (patterned_prime == gap_prime || patterned_prime != is_patterned(p)) return Outcome{false, fmt::format("p={}", p)};
      ++covered;
    }
    return Outcome{covered == primes, fmt::format("{} nodes, {} edges, {} primes", dag.nodes.size(), dag.edges.size(), primes)};
  });

  criterion(11, "dragon doubling for g <= 10 from a 3-segment seed", [] {
    auto g = curves::trace(parse_turns("LRL"));
    const std::size_t s0 = g.segment_count();
    if (s0 != 3) return Outcome{false, "seed"};
    for (std::size_t gen = 1; gen <= 10; ++gen) {
      const auto next = curves::iterate_dragon(g, 1);
      if (next.segment_count() != s0 << gen) return Outcome{false, fmt::format("g={} segments {}", gen, next.segment_count())};
      const auto rot = curves::RigidMotion::make(90, false, {});
      const auto v = g.end() - rot.apply(g.start());
      const auto copy = curves::apply_motion(g, curves::RigidMotion::make(90, false, v));
      if (copy.start() != g.end() || next.vertices()[g.segment_count()] != g.end())
        return Outcome{false, fmt::format("junction at g={}", gen)};
      if (!std::equal(copy.vertices().begin(), copy.vertices().end(), next.vertices().begin() + g.segment_count()))
        return Outcome{false, fmt::format("copy mismatch at g={}", gen)};
      g = next;
    }
    return Outcome{true, fmt::format("{} segments at g=10", g.segment_count())};
  });

  criterion(12, "curve, dag and modes outputs are byte-identical across runs", [] {
    const auto dir = std::filesystem::temp_directory_path();
    const std::vector<std::vector<std::string>> commands{
        {"curve", "--k", "300", "--format", "json"},
        {"dag", "--limit", "1000"},
        {"modes", "--limit", "300"},
    };
    for (const auto& base : commands) {
      std::string first;
      for (int runs = 0; runs < 2; ++runs) {
        const auto path = dir / fmt::format("patterned_acceptance_{}_{}.out", base[0], runs);
        auto args = base;
        args.insert(args.end(), {"--out", path.string()});
        std::string out, err;
        if (run(args, out, err) != 0) return Outcome{false, base[0] + ": " + err};
        const auto bytes = slurp(path);
        std::filesystem::remove(path);
        if (bytes.empty()) return Outcome{false, base[0] + " produced no output"};
        if (runs == 0) first = bytes;
        else if (bytes != first) return Outcome{false, base[0] + " differs"};
      }
    }
    return Outcome{};
  });

  fmt::print("{} of 12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
