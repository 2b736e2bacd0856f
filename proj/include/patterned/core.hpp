#pragma once

// Digit-divisor classification of positive integers.
//
// A positive integer n is "patterned" when some digit d in 1..9 of its
// base-10 expansion divides n. The set of such witnessing digits is the
// match set; its parity assigns each patterned number a turn L (odd) or R
// (even), which drives the curve and dynamics layers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace patterned {

/// Bitmask over decimal digits 0..9; bit d is set when digit d is present.
class DigitSet {
public:
  constexpr DigitSet() = default;
  constexpr explicit DigitSet(std::uint16_t bits) : bits_(bits & 0x3FFu) {}

  constexpr bool contains(int d) const { return d >= 0 && d <= 9 && ((bits_ >> d) & 1u); }
  constexpr void insert(int d) { bits_ = static_cast<std::uint16_t>(bits_ | (1u << d)); }
  constexpr int size() const { return __builtin_popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint16_t bits() const { return bits_; }

  constexpr DigitSet operator&(DigitSet o) const { return DigitSet(bits_ & o.bits_); }
  constexpr bool operator==(const DigitSet&) const = default;

  /// Members in ascending order.
  std::vector<int> elements() const;
  /// Ascending digits concatenated, e.g. {1,2} -> "12"; empty set -> "".
  std::string str() const;

private:
  std::uint16_t bits_ = 0;
};

enum class Turn : std::uint8_t { L, R };

char to_char(Turn t);
/// Parses 'L'/'R' (case-insensitive). Throws InvalidInput otherwise.
Turn turn_from_char(char c);
std::string to_string(const std::vector<Turn>& turns);
std::vector<Turn> parse_turns(const std::string& word);

struct DigitDivisorProfile {
  std::uint64_t n = 0;
  DigitSet digits;
  DigitSet small_divisors; // d in 1..9 with d | n
  DigitSet matches;        // digits & small_divisors, never contains 0
  int match_count = 0;
  bool is_patterned = false;
  std::optional<Turn> turn; // set iff is_patterned

  bool operator==(const DigitDivisorProfile&) const = default;
};

struct DensityReport {
  std::uint64_t limit = 0;
  std::uint64_t count = 0;
  double density = 0.0;
  // Counts from the two independent predicates; both equal `count` unless
  // something is badly wrong.
  std::uint64_t digit_scan_count = 0;
  std::uint64_t divisor_scan_count = 0;

  bool implementations_agree() const {
    return digit_scan_count == divisor_scan_count;
  }
};

/// Largest accepted argument (2^63 - 1).
inline constexpr std::uint64_t kMaxInteger = 0x7FFF'FFFF'FFFF'FFFFull;

/// Count and density the literature reports for N = 100. Reference values only.
inline constexpr std::uint64_t kPaperClaimCount100 = 72;
inline constexpr double kPaperClaimDensity100 = 0.72;

DigitSet digit_set(std::uint64_t n);
DigitSet small_divisor_set(std::uint64_t n);

DigitDivisorProfile profile(std::uint64_t n);

bool is_patterned(std::uint64_t n);

namespace detail {
// Walks the decimal digits of n and stops at the first one dividing n.
bool is_patterned_digit_scan(std::uint64_t n);
// Tries d = 1..9 as divisors first, then looks for d among the digits.
bool is_patterned_divisor_scan(std::uint64_t n);
} // namespace detail

/// Closed form for n = 10a + b: (a | b) or (b != 0 and b | n).
bool is_patterned_two_digit(int a, int b);

/// For a prime p: p <= 9 or the digit 1 occurs in p. No divisor search.
bool is_patterned_prime(std::uint64_t p);

std::vector<std::uint64_t> patterned_sequence(std::uint64_t limit);

/// First k patterned numbers.
std::vector<std::uint64_t> first_patterned(std::size_t k);

DensityReport count_and_density(std::uint64_t limit);

/// Throws DomainError when n is not patterned.
Turn turn(std::uint64_t n);

std::vector<Turn> turn_sequence(std::size_t k);

/// Energy weights for a patterned site.
struct EnergyWeights {
  double alpha = 1.0; // per divisor-digit match
  double beta = 0.5;  // penalty when the turn repeats the previous one
};

/// E = alpha * match_count + beta * [prev_turn == turn(n)].
double site_energy(std::uint64_t n, std::optional<Turn> prev_turn, EnergyWeights w);

// --- primes -------------------------------------------------------------

/// Sieve of Eratosthenes; result[i] is true iff i is prime, for i <= limit.
std::vector<bool> prime_sieve(std::uint64_t limit);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);
/// Deterministic trial division, independent of the sieve.
bool is_prime_trial(std::uint64_t n);

} // namespace patterned
