#pragma once

// DAGs over patterned numbers. Every edge points from a smaller integer to a
// larger one, so acyclicity holds by construction and ascending order is a
// valid topological order.

#include <cstdint>
#include <string_view>
#include <vector>

namespace patterned::graphs {

enum class NodeKind {
  PatternedPrimeSmall,  // prime p <= 9
  PatternedPrimeDigit1, // prime > 9 containing the digit 1
  GapPrime,             // prime > 9 without a digit 1 (not patterned)
  PatternedComposite,   // patterned and not prime (includes 1)
  Unpatterned,
};

std::string_view to_string(NodeKind k);

struct NodeLabel {
  std::uint64_t n = 0;
  NodeKind kind = NodeKind::Unpatterned;
  bool operator==(const NodeLabel&) const = default;
};

/// Classifies n using the core predicate and trial-division primality.
NodeLabel classify(std::uint64_t n);

enum class EdgeKind {
  Chain,   // consecutive patterned numbers
  Cluster, // consecutive patterned primes
};

std::string_view to_string(EdgeKind k);

struct DagEdge {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  EdgeKind kind = EdgeKind::Chain;
  bool operator==(const DagEdge&) const = default;
};

struct PatternedDag {
  std::vector<NodeLabel> nodes; // ascending by n
  std::vector<DagEdge> edges;

  std::size_t edge_count(EdgeKind k) const;
};

struct DagOptions {
  bool include_chain = true;
  bool include_prime_cluster = true;
  bool include_gap_primes = false; // isolated annotated nodes
};

/// Requires limit >= 2.
PatternedDag build_dag(std::uint64_t limit, DagOptions opts = {});

/// Kahn's algorithm, smallest ready node first. Throws InvariantViolation on
/// an edge with from >= to, an edge to an unknown node, or a cycle.
std::vector<std::uint64_t> verify_acyclic_and_sort(const PatternedDag& dag);

struct Gap {
  std::uint64_t start = 0;
  std::uint64_t length = 0;
  bool operator==(const Gap&) const = default;
};

struct GapStatistics {
  std::vector<Gap> gaps;                // maximal runs of non-patterned n <= limit
  std::vector<std::uint64_t> gap_primes; // primes > 9 without digit 1
};

GapStatistics gap_statistics(std::uint64_t limit);

} // namespace patterned::graphs
