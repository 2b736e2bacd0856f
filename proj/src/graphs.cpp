#include "patterned/graphs.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>

#include <fmt/format.h>

#include "patterned/core.hpp"
#include "patterned/errors.hpp"

namespace patterned::graphs {

std::string_view to_string(NodeKind k) {
  switch (k) {
  case NodeKind::PatternedPrimeSmall: return "patterned_prime_small";
  case NodeKind::PatternedPrimeDigit1: return "patterned_prime_digit1";
  case NodeKind::GapPrime: return "gap_prime";
  case NodeKind::PatternedComposite: return "patterned_composite";
  case NodeKind::Unpatterned: return "unpatterned";
  }
  return "?";
}

std::string_view to_string(EdgeKind k) { return k == EdgeKind::Chain ? "chain" : "cluster"; }

namespace {

NodeKind kind_of(std::uint64_t n, bool prime) {
  if (prime) {
    if (n <= 9) return NodeKind::PatternedPrimeSmall;
    return digit_set(n).contains(1) ? NodeKind::PatternedPrimeDigit1 : NodeKind::GapPrime;
  }
  return is_patterned(n) ? NodeKind::PatternedComposite : NodeKind::Unpatterned;
}

bool is_patterned_prime_kind(NodeKind k) {
  return k == NodeKind::PatternedPrimeSmall || k == NodeKind::PatternedPrimeDigit1;
}

} // namespace

NodeLabel classify(std::uint64_t n) {
  if (n == 0) throw InvalidInput("node value must be >= 1");
  return {n, kind_of(n, is_prime_trial(n))};
}

std::size_t PatternedDag::edge_count(EdgeKind k) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [k](const DagEdge& e) { return e.kind == k; }));
}

PatternedDag build_dag(std::uint64_t limit, DagOptions opts) {
  if (limit < 2) throw InvalidInput(fmt::format("dag limit must be >= 2, got {}", limit));
  if (limit > kMaxInteger) throw InvalidInput("dag limit exceeds 2^63-1");
  const auto sieve = prime_sieve(limit);

  PatternedDag dag;
  std::vector<std::uint64_t> patterned_nodes;
  std::vector<std::uint64_t> patterned_primes;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const NodeKind k = kind_of(n, sieve[n]);
    if (k == NodeKind::Unpatterned) continue;
    if (k == NodeKind::GapPrime) {
      if (opts.include_gap_primes) dag.nodes.push_back({n, k});
      continue;
    }
    dag.nodes.push_back({n, k});
    patterned_nodes.push_back(n);
    if (is_patterned_prime_kind(k)) patterned_primes.push_back(n);
  }

  if (opts.include_chain)
    for (std::size_t i = 1; i < patterned_nodes.size(); ++i)
      dag.edges.push_back({patterned_nodes[i - 1], patterned_nodes[i], EdgeKind::Chain});
  if (opts.include_prime_cluster)
    for (std::size_t i = 1; i < patterned_primes.size(); ++i)
      dag.edges.push_back({patterned_primes[i - 1], patterned_primes[i], EdgeKind::Cluster});
  return dag;
}

std::vector<std::uint64_t> verify_acyclic_and_sort(const PatternedDag& dag) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (const auto& node : dag.nodes)
    if (!index.emplace(node.n, index.size()).second)
      throw InvariantViolation(fmt::format("duplicate node {}", node.n));

  std::vector<std::vector<std::size_t>> out(dag.nodes.size());
  std::vector<std::size_t> indegree(dag.nodes.size(), 0);
  for (const auto& e : dag.edges) {
    if (e.from >= e.to)
      throw InvariantViolation(fmt::format("edge ({}, {}) does not point to a larger number", e.from, e.to));
    const auto u = index.find(e.from);
    const auto v = index.find(e.to);
    if (u == index.end() || v == index.end())
      throw InvariantViolation(fmt::format("edge ({}, {}) references an unknown node", e.from, e.to));
    out[u->second].push_back(v->second);
    ++indegree[v->second];
  }

  using Item = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t i = 0; i < dag.nodes.size(); ++i)
    if (indegree[i] == 0) ready.emplace(dag.nodes[i].n, i);

  std::vector<std::uint64_t> order;
  order.reserve(dag.nodes.size());
  while (!ready.empty()) {
    const auto [n, i] = ready.top();
    ready.pop();
    order.push_back(n);
    for (std::size_t j : out[i])
      if (--indegree[j] == 0) ready.emplace(dag.nodes[j].n, j);
  }
  if (order.size() != dag.nodes.size())
    throw InvariantViolation("cycle detected in patterned dag");
  return order;
}

GapStatistics gap_statistics(std::uint64_t limit) {
  if (limit == 0) throw InvalidInput("limit must be >= 1");
  if (limit > kMaxInteger) throw InvalidInput("limit exceeds 2^63-1");
  GapStatistics g;
  std::uint64_t run_start = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (!is_patterned(n)) {
      if (run_start == 0) run_start = n;
      continue;
    }
    if (run_start != 0) {
      g.gaps.push_back({run_start, n - run_start});
      run_start = 0;
    }
  }
  if (run_start != 0) g.gaps.push_back({run_start, limit - run_start + 1});

  for (std::uint64_t p : primes_up_to(limit))
    if (!is_patterned_prime(p)) g.gap_primes.push_back(p);
  return g;
}

} // namespace patterned::graphs
