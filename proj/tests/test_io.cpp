#include <doctest.h>

#include <random>
#include <sstream>

#include "patterned/errors.hpp"
#include "patterned/io.hpp"

using namespace patterned;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

} // namespace

TEST_CASE("profile csv") {
  std::ostringstream empty;
  io::write_profiles_csv(empty, {});
  CHECK(empty.str() == std::string(io::kProfileCsvHeader) + "\n");

  std::ostringstream os;
  io::write_profiles_csv(os, {profile(36), profile(23)});
  CHECK(os.str() == "n,digits,small_divisors,matches,match_count,patterned,turn\n"
                    "36,3;6,1;2;3;4;6;9,3;6,2,true,R\n"
                    "23,2;3,1,,0,false,\n");
}

TEST_CASE("profile json round-trips") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = 1 + rng() % (i < 1000 ? 5000 : kMaxInteger);
    const auto p = profile(n);
    const auto text = io::to_json(p).dump();
    REQUIRE(io::profile_from_json(io::ordered_json::parse(text)) == p);
  }
  CHECK_THROWS_AS(io::profile_from_json(io::ordered_json::parse(R"({"n": 3})")), InvalidInput);
  CHECK(io::to_json(profile(12)).dump() ==
        R"({"n":12,"digits":[1,2],"small_divisors":[1,2,3,4,6],"matches":[1,2],"match_count":2,"patterned":true,"turn":"R"})");
}

TEST_CASE("bfile") {
  std::ostringstream os;
  io::write_bfile(os, {1, 2, 3, 10});
  CHECK(os.str() == "1 1\n2 2\n3 3\n4 10\n");
}

TEST_CASE("real formatting uses 12 significant digits") {
  CHECK(io::format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(io::format_real(0.69) == "0.69");
  CHECK(io::format_real(2.0) == "2");
}

TEST_CASE("density report carries the published claim") {
  const auto r = count_and_density(100);
  std::ostringstream os;
  io::write_density_csv(os, r);
  CHECK(os.str().find("100,69,0.69,69,69,true,72,0.72,-3,") != std::string::npos);
  const auto j = io::to_json(r);
  CHECK(j["paper_claim_count"] == 72);
  CHECK(j["discrepancy"] == -3);
  CHECK_FALSE(j["note"].get<std::string>().empty());

  const auto r50 = count_and_density(50);
  CHECK(io::to_json(r50)["paper_claim_count"].is_null());
  CHECK(io::density_discrepancy_note(r50).empty());
}

TEST_CASE("unit square svg") {
  std::ostringstream os;
  io::write_curve_svg(os, curves::trace(parse_turns("RRRR")));
  const auto svg = os.str();
  CHECK(svg.find("viewBox=\"-1 -2 3 3\"") != std::string::npos);
  CHECK(count_of(svg, "<path") == 1);
  CHECK(svg.find("d=\"M 0 0 L 1 0 L 1 -1 L 0 -1 L 0 0\"") != std::string::npos);
  CHECK(count_of(svg, " L ") == 4);
  CHECK(svg.find("matrix(1 0 0 -1 0 -1)") != std::string::npos);
  CHECK(svg.find("width=\"60\"") != std::string::npos);
}

TEST_CASE("tessellation svg has one labelled path per placement") {
  std::vector<curves::RigidMotion> rot4;
  for (int r : {0, 90, 180, 270}) rot4.push_back(curves::RigidMotion::make(r, false, {}));
  const auto t = curves::tessellate(curves::trace(parse_turns("RRRR")), rot4);
  std::ostringstream os;
  io::write_tessellation_svg(os, t);
  const auto svg = os.str();
  CHECK(count_of(svg, "<path") == 4);
  for (int i = 0; i < 4; ++i) CHECK(svg.find("data-tile=\"" + std::to_string(i) + "\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"-2 -2 4 4\"") != std::string::npos);
}

TEST_CASE("dot output") {
  std::ostringstream os;
  io::write_dot(os, graphs::build_dag(19));
  const auto dot = os.str();
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("11 -> 13") != std::string::npos);
  CHECK(dot.find("  11 [shape=circle, fillcolor=lightblue") != std::string::npos);
  CHECK(dot.find("  2 [shape=circle, fillcolor=white") != std::string::npos);
  CHECK(dot.find("  12 [shape=box") != std::string::npos);
}

TEST_CASE("spectrum, sweep and walk csv") {
  dynamics::Spectrum sp;
  sp.eigenvalues = {-1.0, 0.5};
  sp.participation_ratios = {1.0, 2.0};
  std::ostringstream a;
  io::write_spectrum_csv(a, sp);
  CHECK(a.str() == "index,eigenvalue,participation_ratio\n1,-1,1\n2,0.5,2\n");

  std::ostringstream b;
  io::write_sweep_csv(b, {{0.5, 1.0, 0.25, 3.0}});
  CHECK(b.str() == "s,ground_energy,gap,ground_participation_ratio\n0.5,1,0.25,3\n");

  std::ostringstream c;
  io::write_walk_csv(c, {{1.0, 0.0}, {0.5, 0.5}});
  CHECK(c.str() == "step,pos_1,pos_2\n0,1,0\n1,0.5,0.5\n");
}
