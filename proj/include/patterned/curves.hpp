#pragma once

// Unit-step lattice curves driven by L/R turn words.
//
// A curve is traced turtle-style: for each turn, advance one unit along the
// current heading and then rotate the heading by 90 degrees. k turns give k
// segments; the last turn only fixes the exit heading.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "patterned/core.hpp"

namespace patterned::curves {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const Point&) const = default;
  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
};

/// Counter-clockwise order, so +1 is a left turn.
enum class Heading : std::uint8_t { E = 0, N = 1, W = 2, S = 3 };

Point unit_step(Heading h);
Heading turned(Heading h, Turn t);
Heading heading_of(Point step); // step must be a unit axis vector
char to_char(Heading h);

/// Undirected unit edge, stored with a < b.
struct Edge {
  Point a;
  Point b;

  Edge(Point p, Point q) : a(p < q ? p : q), b(p < q ? q : p) {}
  auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

struct BoundingBox {
  Point min;
  Point max;
  bool operator==(const BoundingBox&) const = default;
};

class LatticeCurve {
public:
  /// Single vertex at the origin, heading E.
  LatticeCurve() : vertices_{Point{}} {}

  /// Builds a curve from an explicit vertex path. Consecutive vertices must be
  /// unit lattice neighbours; throws InvalidInput otherwise.
  static LatticeCurve from_path(std::vector<Point> vertices,
                                std::optional<Heading> exit_heading = std::nullopt);

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Heading>& headings() const { return headings_; }
  /// Empty unless produced by trace().
  const std::vector<Turn>& source_turns() const { return source_turns_; }
  std::optional<Heading> exit_heading() const { return exit_heading_; }

  std::size_t segment_count() const { return headings_.size(); }
  Point start() const { return vertices_.front(); }
  Point end() const { return vertices_.back(); }

  EdgeSet edge_set() const;

  bool operator==(const LatticeCurve&) const = default;

private:
  friend LatticeCurve trace(const std::vector<Turn>&, Point, Heading);

  std::vector<Point> vertices_;
  std::vector<Heading> headings_;
  std::vector<Turn> source_turns_;
  std::optional<Heading> exit_heading_;
};

LatticeCurve trace(const std::vector<Turn>& turns, Point start = {}, Heading initial = Heading::E);

struct CurveStats {
  std::size_t segment_count = 0;
  std::size_t unique_edge_count = 0;
  std::size_t unique_vertex_count = 0;
  std::size_t component_count = 0;
  /// Distinct vertices that occur more than once along the path.
  std::size_t revisited_vertex_count = 0;
  /// Bounded faces, E - V + C on the deduplicated graph.
  std::size_t bounded_region_count = 0;
  BoundingBox bounding_box;
  /// Longest run of identical turns in source_turns (0 if none).
  std::size_t max_turn_run = 0;
};

CurveStats curve_stats(const LatticeCurve& curve);

/// Planar statistics of a bare edge set (vertex/edge/component counts and the
/// Euler-relation face count). Used for curves and tessellations alike.
struct PlanarCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t bounded_regions = 0;
};
PlanarCounts planar_counts(const EdgeSet& edges);

/// Counts enclosed cell components by flood fill from outside the bounding box.
/// Independent of the Euler computation.
std::size_t region_count_flood(const EdgeSet& edges);
std::size_t region_count_flood(const LatticeCurve& curve);

std::size_t max_turn_run(const std::vector<Turn>& turns);

// --- rigid motions ------------------------------------------------------

/// p -> Rot(rotation) * Flip(p) + translation, Flip = (x, -y) when reflect.
struct RigidMotion {
  int rotation = 0; // degrees: 0, 90, 180, 270
  bool reflect = false;
  Point translation{};

  static RigidMotion identity() { return {}; }
  /// Throws InvalidInput unless rotation is a multiple of 90.
  static RigidMotion make(int rotation_degrees, bool reflect, Point translation);

  Point apply(Point p) const;
  /// Linear part only.
  Point apply_vector(Point v) const;
  Heading apply(Heading h) const;

  /// (*this)(other(p)).
  RigidMotion after(const RigidMotion& other) const;
  RigidMotion inverse() const;

  bool operator==(const RigidMotion&) const = default;
};

LatticeCurve apply_motion(const LatticeCurve& curve, const RigidMotion& motion);

// --- seahorse -----------------------------------------------------------

struct SeahorseReport {
  bool max_turn_run_ok = false; // no run of 3+ identical turns
  bool single_region_ok = false;
  bool reflection_ok = false;   // edge-set reflection carrying start to end
  bool is_seahorse = false;
};

/// Requires a traced curve (non-empty source_turns); throws InvalidInput otherwise.
SeahorseReport is_seahorse(const LatticeCurve& curve);

/// Lattice reflection (axis vertical, horizontal or diagonal) that maps the
/// curve's edge set onto itself and the start vertex onto the end vertex.
std::optional<RigidMotion> find_start_end_reflection(const LatticeCurve& curve);

/// All seahorse words of length 1..max_length, shortest first, then
/// lexicographic with L < R.
std::vector<std::vector<Turn>> seahorse_scan(std::size_t max_length);

// --- dragon iteration ---------------------------------------------------

inline constexpr std::size_t kDefaultEdgeCap = std::size_t{1} << 20;

/// One generation: G -> G followed by Rot90(G) + v, v = end(G) - Rot90(start(G)).
/// The copy starts where the original ends, so the result is again a path.
/// Throws ResourceLimit when the segment count would exceed edge_cap.
LatticeCurve iterate_dragon(const LatticeCurve& curve, std::size_t generations,
                            std::size_t edge_cap = kDefaultEdgeCap);

// --- tessellations ------------------------------------------------------

struct Tessellation {
  LatticeCurve base_curve;
  std::vector<RigidMotion> placements;
  std::vector<LatticeCurve> tiles; // tiles[i] = placements[i](base_curve)
  /// Union edge set; each edge maps to the tile indices containing it.
  std::map<Edge, std::vector<std::size_t>> edge_labels;
  std::size_t overlap_count = 0;

  EdgeSet edge_set() const;
};

/// Throws InvalidInput on empty placements.
Tessellation tessellate(const LatticeCurve& curve, const std::vector<RigidMotion>& placements);

} // namespace patterned::curves
