#include "patterned/core.hpp"

#include <cmath>
#include <fmt/format.h>

#include "patterned/errors.hpp"

namespace patterned {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw InvalidInput(fmt::format("{} must be >= 1, got 0", what));
  if (n > kMaxInteger)
    throw InvalidInput(fmt::format("{} = {} exceeds 2^63-1", what, n));
}

} // namespace

std::vector<int> DigitSet::elements() const {
  std::vector<int> out;
  for (int d = 0; d <= 9; ++d)
    if (contains(d)) out.push_back(d);
  return out;
}

std::string DigitSet::str() const {
  std::string s;
  for (int d : elements()) s.push_back(static_cast<char>('0' + d));
  return s;
}

char to_char(Turn t) { return t == Turn::L ? 'L' : 'R'; }

Turn turn_from_char(char c) {
  switch (c) {
  case 'L': case 'l': return Turn::L;
  case 'R': case 'r': return Turn::R;
  default: throw InvalidInput(fmt::format("turn must be L or R, got '{}'", c));
  }
}

std::string to_string(const std::vector<Turn>& turns) {
  std::string s;
  s.reserve(turns.size());
  for (Turn t : turns) s.push_back(to_char(t));
  return s;
}

std::vector<Turn> parse_turns(const std::string& word) {
  std::vector<Turn> out;
  out.reserve(word.size());
  for (char c : word) out.push_back(turn_from_char(c));
  return out;
}

DigitSet digit_set(std::uint64_t n) {
  DigitSet s;
  do {
    s.insert(static_cast<int>(n % 10));
    n /= 10;
  } while (n != 0);
  return s;
}

DigitSet small_divisor_set(std::uint64_t n) {
  DigitSet s;
  for (int d = 1; d <= 9; ++d)
    if (n % static_cast<std::uint64_t>(d) == 0) s.insert(d);
  return s;
}

DigitDivisorProfile profile(std::uint64_t n) {
  require_positive(n, "n");
  DigitDivisorProfile p;
  p.n = n;
  p.digits = digit_set(n);
  p.small_divisors = small_divisor_set(n);
  p.matches = p.digits & p.small_divisors;
  p.match_count = p.matches.size();
  p.is_patterned = p.match_count > 0;
  if (p.is_patterned) p.turn = (p.match_count % 2 == 1) ? Turn::L : Turn::R;
  return p;
}

namespace detail {

bool is_patterned_digit_scan(std::uint64_t n) {
  for (std::uint64_t rest = n; rest != 0; rest /= 10) {
    const std::uint64_t d = rest % 10;
    if (d != 0 && n % d == 0) return true;
  }
  return false;
}

bool is_patterned_divisor_scan(std::uint64_t n) {
  for (std::uint64_t d = 1; d <= 9; ++d) {
    if (n % d != 0) continue;
    for (std::uint64_t rest = n; rest != 0; rest /= 10)
      if (rest % 10 == d) return true;
  }
  return false;
}

} // namespace detail

bool is_patterned(std::uint64_t n) {
  require_positive(n, "n");
  return detail::is_patterned_digit_scan(n);
}

bool is_patterned_two_digit(int a, int b) {
  if (a < 1 || a > 9) throw InvalidInput(fmt::format("tens digit must be 1..9, got {}", a));
  if (b < 0 || b > 9) throw InvalidInput(fmt::format("units digit must be 0..9, got {}", b));
  // a | 0 holds; 0 divides nothing.
  return b % a == 0 || (b != 0 && (10 * a + b) % b == 0);
}

bool is_patterned_prime(std::uint64_t p) {
  require_positive(p, "p");
  return p <= 9 || digit_set(p).contains(1);
}

std::vector<std::uint64_t> patterned_sequence(std::uint64_t limit) {
  require_positive(limit, "limit");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (detail::is_patterned_digit_scan(n)) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> first_patterned(std::size_t k) {
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (std::uint64_t n = 1; out.size() < k; ++n)
    if (detail::is_patterned_digit_scan(n)) out.push_back(n);
  return out;
}

DensityReport count_and_density(std::uint64_t limit) {
  require_positive(limit, "limit");
  DensityReport r;
  r.limit = limit;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    r.digit_scan_count += detail::is_patterned_digit_scan(n) ? 1 : 0;
    r.divisor_scan_count += detail::is_patterned_divisor_scan(n) ? 1 : 0;
  }
  r.count = r.digit_scan_count;
  r.density = static_cast<double>(r.count) / static_cast<double>(limit);
  return r;
}

Turn turn(std::uint64_t n) {
  const auto p = profile(n);
  if (!p.turn) throw DomainError(fmt::format("turn undefined: {} is not patterned", n));
  return *p.turn;
}

std::vector<Turn> turn_sequence(std::size_t k) {
  if (k == 0) throw InvalidInput("k must be >= 1");
  std::vector<Turn> out;
  out.reserve(k);
  for (std::uint64_t n : first_patterned(k)) out.push_back(*profile(n).turn);
  return out;
}

double site_energy(std::uint64_t n, std::optional<Turn> prev_turn, EnergyWeights w) {
  if (!std::isfinite(w.alpha) || !std::isfinite(w.beta))
    throw InvalidInput("alpha and beta must be finite");
  const auto p = profile(n);
  if (!p.is_patterned)
    throw DomainError(fmt::format("site energy undefined: {} is not patterned", n));
  const double repeat = (prev_turn && *prev_turn == *p.turn) ? 1.0 : 0.0;
  return w.alpha * p.match_count + w.beta * repeat;
}

std::vector<bool> prime_sieve(std::uint64_t limit) {
  std::vector<bool> is_p(limit + 1, true);
  is_p[0] = false;
  if (limit >= 1) is_p[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (is_p[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) is_p[j] = false;
  return is_p;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  const auto sieve = prime_sieve(limit);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (sieve[i]) out.push_back(i);
  return out;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

} // namespace patterned
