#include <doctest.h>

#include <algorithm>
#include <set>

#include "patterned/core.hpp"
#include "patterned/errors.hpp"
#include "patterned/graphs.hpp"

using namespace patterned;
using namespace patterned::graphs;

namespace {

bool has_edge(const PatternedDag& d, std::uint64_t u, std::uint64_t v, EdgeKind k) {
  return std::find(d.edges.begin(), d.edges.end(), DagEdge{u, v, k}) != d.edges.end();
}

const std::vector<std::uint64_t> kPatternedPrimes100 = {2, 3, 5, 7, 11, 13, 17, 19, 31, 41, 61, 71};

} // namespace

TEST_CASE("build_dag examples") {
  const auto d19 = build_dag(19);
  CHECK(has_edge(d19, 11, 13, EdgeKind::Cluster));
  CHECK(has_edge(d19, 13, 17, EdgeKind::Cluster));
  CHECK(has_edge(d19, 17, 19, EdgeKind::Cluster));

  const auto d3 = build_dag(3, {true, false, false});
  CHECK(d3.edges == std::vector<DagEdge>{{1, 2, EdgeKind::Chain}, {2, 3, EdgeKind::Chain}});

  const auto d100 = build_dag(100, {false, true, false});
  std::vector<std::uint64_t> path;
  for (const auto& e : d100.edges) {
    if (path.empty()) path.push_back(e.from);
    REQUIRE(e.from == path.back());
    path.push_back(e.to);
  }
  CHECK(path == kPatternedPrimes100);

  CHECK_THROWS_AS(build_dag(1), InvalidInput);
}

TEST_CASE("gap primes appear only on request") {
  const auto without = build_dag(30);
  const auto with = build_dag(30, {true, true, true});
  auto has_node = [](const PatternedDag& d, std::uint64_t n) {
    return std::any_of(d.nodes.begin(), d.nodes.end(), [n](const NodeLabel& l) { return l.n == n; });
  };
  CHECK_FALSE(has_node(without, 23));
  CHECK(has_node(with, 23));
  CHECK(has_node(with, 29));
  for (const auto& e : with.edges) {
    CHECK(e.from != 23);
    CHECK(e.to != 23);
  }
  CHECK(std::is_sorted(with.nodes.begin(), with.nodes.end(),
                       [](const NodeLabel& a, const NodeLabel& b) { return a.n < b.n; }));
}

TEST_CASE("topological sort") {
  const auto d = build_dag(500, {true, true, true});
  const auto order = verify_acyclic_and_sort(d);
  std::vector<std::uint64_t> ascending;
  for (const auto& n : d.nodes) ascending.push_back(n.n);
  CHECK(order == ascending);

  PatternedDag bad;
  bad.nodes = {{3, NodeKind::PatternedPrimeSmall}, {5, NodeKind::PatternedPrimeSmall}};
  bad.edges = {{5, 3, EdgeKind::Chain}};
  CHECK_THROWS_AS(verify_acyclic_and_sort(bad), InvariantViolation);

  PatternedDag dangling;
  dangling.nodes = {{3, NodeKind::PatternedPrimeSmall}};
  dangling.edges = {{3, 4, EdgeKind::Chain}};
  CHECK_THROWS_AS(verify_acyclic_and_sort(dangling), InvariantViolation);

  const auto big = build_dag(10000);
  CHECK(verify_acyclic_and_sort(big).size() == big.nodes.size());
}

TEST_CASE("dag edge invariants") {
  for (std::uint64_t limit : {2u, 10u, 99u, 1000u, 4321u}) {
    const auto d = build_dag(limit);
    for (const auto& e : d.edges) REQUIRE(e.from < e.to);
    CHECK(d.edge_count(EdgeKind::Chain) == patterned_sequence(limit).size() - 1);
  }
}

TEST_CASE("node labels agree with core predicates and trial division") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const auto label = classify(n);
    const bool prime = is_prime_trial(n);
    const bool pat = is_patterned(n);
    switch (label.kind) {
    case NodeKind::PatternedPrimeSmall: REQUIRE((prime && pat && n <= 9)); break;
    case NodeKind::PatternedPrimeDigit1: REQUIRE((prime && pat && n > 9)); break;
    case NodeKind::GapPrime: REQUIRE((prime && !pat)); break;
    case NodeKind::PatternedComposite: REQUIRE((!prime && pat)); break;
    case NodeKind::Unpatterned: REQUIRE((!prime && !pat)); break;
    }
  }
}

TEST_CASE("gap statistics") {
  const auto g30 = gap_statistics(30);
  CHECK(g30.gaps == std::vector<Gap>{{23, 1}, {27, 1}, {29, 1}});
  CHECK(gap_statistics(9).gaps.empty());

  const auto g100 = gap_statistics(100);
  CHECK(g100.gap_primes == std::vector<std::uint64_t>{23, 29, 37, 43, 47, 53, 59, 67, 73, 79, 83, 89, 97});

  std::set<std::uint64_t> all(kPatternedPrimes100.begin(), kPatternedPrimes100.end());
  all.insert(g100.gap_primes.begin(), g100.gap_primes.end());
  const auto primes = primes_up_to(100);
  CHECK(std::vector<std::uint64_t>(all.begin(), all.end()) == primes);
  CHECK(all.size() == kPatternedPrimes100.size() + g100.gap_primes.size());

  // Runs cover exactly the non-patterned integers.
  const auto g = gap_statistics(5000);
  std::size_t covered = 0;
  for (const auto& gap : g.gaps) {
    for (std::uint64_t n = gap.start; n < gap.start + gap.length; ++n) REQUIRE_FALSE(is_patterned(n));
    REQUIRE(is_patterned(gap.start - 1));
    if (gap.start + gap.length <= 5000) REQUIRE(is_patterned(gap.start + gap.length));
    covered += gap.length;
  }
  CHECK(covered == 5000 - patterned_sequence(5000).size());

  // A trailing run at the limit is closed at the limit.
  CHECK(gap_statistics(23).gaps == std::vector<Gap>{{23, 1}});
}
