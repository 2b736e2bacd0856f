#include "patterned/curves.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

#include "patterned/errors.hpp"

namespace patterned::curves {

Point unit_step(Heading h) {
  switch (h) {
  case Heading::E: return {1, 0};
  case Heading::N: return {0, 1};
  case Heading::W: return {-1, 0};
  case Heading::S: return {0, -1};
  }
  return {};
}

Heading turned(Heading h, Turn t) {
  const int delta = t == Turn::L ? 1 : 3;
  return static_cast<Heading>((static_cast<int>(h) + delta) % 4);
}

Heading heading_of(Point step) {
  if (step == Point{1, 0}) return Heading::E;
  if (step == Point{0, 1}) return Heading::N;
  if (step == Point{-1, 0}) return Heading::W;
  if (step == Point{0, -1}) return Heading::S;
  throw InvalidInput(fmt::format("({}, {}) is not a unit lattice step", step.x, step.y));
}

char to_char(Heading h) { return "ENWS"[static_cast<int>(h)]; }

LatticeCurve LatticeCurve::from_path(std::vector<Point> vertices,
                                     std::optional<Heading> exit_heading) {
  if (vertices.empty()) throw InvalidInput("a lattice curve needs at least one vertex");
  LatticeCurve c;
  c.headings_.reserve(vertices.size() - 1);
  for (std::size_t i = 1; i < vertices.size(); ++i)
    c.headings_.push_back(heading_of(vertices[i] - vertices[i - 1]));
  c.vertices_ = std::move(vertices);
  c.exit_heading_ = exit_heading;
  return c;
}

EdgeSet LatticeCurve::edge_set() const {
  EdgeSet edges;
  for (std::size_t i = 1; i < vertices_.size(); ++i) edges.emplace(vertices_[i - 1], vertices_[i]);
  return edges;
}

LatticeCurve trace(const std::vector<Turn>& turns, Point start, Heading initial) {
  LatticeCurve c;
  c.vertices_.assign(1, start);
  c.vertices_.reserve(turns.size() + 1);
  c.headings_.reserve(turns.size());
  Point p = start;
  Heading h = initial;
  for (Turn t : turns) {
    p = p + unit_step(h);
    c.vertices_.push_back(p);
    c.headings_.push_back(h);
    h = turned(h, t);
  }
  c.source_turns_ = turns;
  c.exit_heading_ = h;
  return c;
}

std::size_t max_turn_run(const std::vector<Turn>& turns) {
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < turns.size(); ++i) {
    run = (i > 0 && turns[i] == turns[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

namespace {

struct PointHash {
  std::size_t operator()(Point p) const noexcept {
    return std::hash<std::int64_t>{}(p.x) * 0x9E3779B97F4A7C15ull ^ std::hash<std::int64_t>{}(p.y);
  }
};

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

BoundingBox bbox_of(const std::vector<Point>& pts) {
  BoundingBox b{pts.front(), pts.front()};
  for (Point p : pts) {
    b.min = {std::min(b.min.x, p.x), std::min(b.min.y, p.y)};
    b.max = {std::max(b.max.x, p.x), std::max(b.max.y, p.y)};
  }
  return b;
}

} // namespace

PlanarCounts planar_counts(const EdgeSet& edges) {
  std::unordered_map<Point, std::size_t, PointHash> index;
  for (const Edge& e : edges) {
    index.try_emplace(e.a, index.size());
    index.try_emplace(e.b, index.size());
  }
  DisjointSets sets(index.size());
  std::size_t components = index.size();
  for (const Edge& e : edges)
    if (sets.unite(index[e.a], index[e.b])) --components;

  PlanarCounts c;
  c.vertices = index.size();
  c.edges = edges.size();
  c.components = components;
  // E - V + C >= 0 for any graph (cycle rank).
  c.bounded_regions = c.edges + c.components - c.vertices;
  return c;
}

CurveStats curve_stats(const LatticeCurve& curve) {
  CurveStats s;
  const auto& verts = curve.vertices();
  s.segment_count = curve.segment_count();

  std::map<Point, std::size_t> visits;
  for (Point p : verts) ++visits[p];
  s.unique_vertex_count = visits.size();
  s.revisited_vertex_count = static_cast<std::size_t>(
      std::count_if(visits.begin(), visits.end(), [](const auto& kv) { return kv.second > 1; }));

  const auto pc = planar_counts(curve.edge_set());
  s.unique_edge_count = pc.edges;
  // A single-vertex curve has no edges but is still one component.
  s.component_count = pc.edges == 0 ? 1 : pc.components;
  s.bounded_region_count = pc.bounded_regions;
  s.bounding_box = bbox_of(verts);
  s.max_turn_run = max_turn_run(curve.source_turns());
  return s;
}

std::size_t region_count_flood(const EdgeSet& edges) {
  if (edges.empty()) return 0;
  std::int64_t x0 = edges.begin()->a.x, x1 = x0, y0 = edges.begin()->a.y, y1 = y0;
  for (const Edge& e : edges) {
    for (Point p : {e.a, e.b}) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  // Cell (i, j) is the unit square with lower-left corner (i, j). Cells
  // x0-1..x1 by y0-1..y1 cover the box plus a one-cell border ring.
  const std::int64_t cx0 = x0 - 1, cy0 = y0 - 1;
  const auto w = static_cast<std::size_t>(x1 - cx0 + 1);
  const auto h = static_cast<std::size_t>(y1 - cy0 + 1);
  auto at = [&](std::size_t i, std::size_t j) { return j * w + i; };

  auto blocked = [&](std::size_t i, std::size_t j, int dir) {
    const std::int64_t x = cx0 + static_cast<std::int64_t>(i);
    const std::int64_t y = cy0 + static_cast<std::int64_t>(j);
    switch (dir) {
    case 0: return edges.count(Edge({x + 1, y}, {x + 1, y + 1})) > 0; // east wall
    case 1: return edges.count(Edge({x, y + 1}, {x + 1, y + 1})) > 0; // north wall
    case 2: return edges.count(Edge({x, y}, {x, y + 1})) > 0;         // west wall
    default: return edges.count(Edge({x, y}, {x + 1, y})) > 0;        // south wall
    }
  };

  std::vector<int> label(w * h, -1);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::size_t enclosed = 0;
  int next_label = 0;
  for (std::size_t j = 0; j < h; ++j) {
    for (std::size_t i = 0; i < w; ++i) {
      if (label[at(i, j)] != -1) continue;
      bool touches_outside = false;
      label[at(i, j)] = next_label;
      stack.assign(1, {i, j});
      while (!stack.empty()) {
        auto [ci, cj] = stack.back();
        stack.pop_back();
        if (ci == 0 || cj == 0 || ci + 1 == w || cj + 1 == h) touches_outside = true;
        const std::pair<std::ptrdiff_t, std::ptrdiff_t> deltas[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        for (int d = 0; d < 4; ++d) {
          const auto ni = static_cast<std::ptrdiff_t>(ci) + deltas[d].first;
          const auto nj = static_cast<std::ptrdiff_t>(cj) + deltas[d].second;
          if (ni < 0 || nj < 0 || ni >= static_cast<std::ptrdiff_t>(w) ||
              nj >= static_cast<std::ptrdiff_t>(h))
            continue;
          if (blocked(ci, cj, d)) continue;
          auto& l = label[at(static_cast<std::size_t>(ni), static_cast<std::size_t>(nj))];
          if (l != -1) continue;
          l = next_label;
          stack.emplace_back(static_cast<std::size_t>(ni), static_cast<std::size_t>(nj));
        }
      }
      if (!touches_outside) ++enclosed;
      ++next_label;
    }
  }
  return enclosed;
}

std::size_t region_count_flood(const LatticeCurve& curve) {
  return region_count_flood(curve.edge_set());
}

// --- rigid motions ------------------------------------------------------

namespace {

// Integer 2x2 matrix, row-major.
struct Linear {
  std::int64_t a, b, c, d;
  Point operator*(Point p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  Linear operator*(const Linear& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

Linear rotation_matrix(int degrees) {
  switch (((degrees % 360) + 360) % 360) {
  case 0: return {1, 0, 0, 1};
  case 90: return {0, -1, 1, 0};
  case 180: return {-1, 0, 0, -1};
  default: return {0, 1, -1, 0};
  }
}

Linear linear_part(const RigidMotion& m) {
  const Linear flip = m.reflect ? Linear{1, 0, 0, -1} : Linear{1, 0, 0, 1};
  return rotation_matrix(m.rotation) * flip;
}

RigidMotion from_linear(const Linear& l, Point t) {
  RigidMotion m;
  m.reflect = (l.a * l.d - l.b * l.c) < 0;
  // Flip fixes e1, so the first column is Rot * e1.
  const Point col{l.a, l.c};
  m.rotation = col == Point{1, 0} ? 0 : col == Point{0, 1} ? 90 : col == Point{-1, 0} ? 180 : 270;
  m.translation = t;
  return m;
}

} // namespace

RigidMotion RigidMotion::make(int rotation_degrees, bool reflect, Point translation) {
  if (rotation_degrees % 90 != 0)
    throw InvalidInput(fmt::format("rotation must be a multiple of 90 degrees, got {}", rotation_degrees));
  return {((rotation_degrees % 360) + 360) % 360, reflect, translation};
}

Point RigidMotion::apply_vector(Point v) const { return linear_part(*this) * v; }

Point RigidMotion::apply(Point p) const { return apply_vector(p) + translation; }

Heading RigidMotion::apply(Heading h) const { return heading_of(apply_vector(unit_step(h))); }

RigidMotion RigidMotion::after(const RigidMotion& other) const {
  const Linear l = linear_part(*this);
  return from_linear(l * linear_part(other), l * other.translation + translation);
}

RigidMotion RigidMotion::inverse() const {
  // Orthogonal integer matrix: inverse is the transpose.
  const Linear l = linear_part(*this);
  const Linear lt{l.a, l.c, l.b, l.d};
  const Point t = lt * translation;
  return from_linear(lt, {-t.x, -t.y});
}

LatticeCurve apply_motion(const LatticeCurve& curve, const RigidMotion& motion) {
  std::vector<Point> verts;
  verts.reserve(curve.vertices().size());
  for (Point p : curve.vertices()) verts.push_back(motion.apply(p));
  std::optional<Heading> exit;
  if (curve.exit_heading()) exit = motion.apply(*curve.exit_heading());
  return LatticeCurve::from_path(std::move(verts), exit);
}

// --- seahorse -----------------------------------------------------------

std::optional<RigidMotion> find_start_end_reflection(const LatticeCurve& curve) {
  const Point s = curve.start();
  const Point e = curve.end();
  // Linear parts of the four lattice reflections: axis vertical, horizontal,
  // along y = x, along y = -x.
  const RigidMotion axes[] = {{180, true, {}}, {0, true, {}}, {90, true, {}}, {270, true, {}}};
  const EdgeSet edges = curve.edge_set();
  for (RigidMotion m : axes) {
    m.translation = e - m.apply_vector(s);
    // Translation must be perpendicular to the axis, otherwise this is a glide.
    if (m.apply(m.apply(s)) != s) continue;
    bool symmetric = true;
    for (const Edge& ed : edges) {
      if (!edges.count(Edge(m.apply(ed.a), m.apply(ed.b)))) {
        symmetric = false;
        break;
      }
    }
    if (symmetric) return m;
  }
  return std::nullopt;
}

SeahorseReport is_seahorse(const LatticeCurve& curve) {
  if (curve.source_turns().empty())
    throw InvalidInput("seahorse classification needs a traced curve with a turn word");
  SeahorseReport r;
  r.max_turn_run_ok = max_turn_run(curve.source_turns()) <= 2;
  r.single_region_ok = planar_counts(curve.edge_set()).bounded_regions == 1;
  r.reflection_ok = find_start_end_reflection(curve).has_value();
  r.is_seahorse = r.max_turn_run_ok && r.single_region_ok && r.reflection_ok;
  return r;
}

std::vector<std::vector<Turn>> seahorse_scan(std::size_t max_length) {
  if (max_length > 30) throw ResourceLimit("seahorse scan limited to words of length <= 30");
  std::vector<std::vector<Turn>> found;
  std::vector<Turn> word;
  for (std::size_t len = 1; len <= max_length; ++len) {
    word.assign(len, Turn::L);
    const std::uint64_t count = std::uint64_t{1} << len;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      // Most significant position first so enumeration is lexicographic.
      for (std::size_t i = 0; i < len; ++i)
        word[i] = ((bits >> (len - 1 - i)) & 1u) ? Turn::R : Turn::L;
      if (max_turn_run(word) > 2) continue;
      if (is_seahorse(trace(word)).is_seahorse) found.push_back(word);
    }
  }
  return found;
}

// --- dragon iteration ---------------------------------------------------

LatticeCurve iterate_dragon(const LatticeCurve& curve, std::size_t generations, std::size_t edge_cap) {
  LatticeCurve current = curve;
  const RigidMotion quarter{90, false, {}};
  for (std::size_t g = 0; g < generations; ++g) {
    const std::size_t segs = current.segment_count();
    if (segs > edge_cap / 2)
      throw ResourceLimit(fmt::format("dragon generation {} would exceed the edge cap of {} ({} segments)",
                                      g + 1, edge_cap, 2 * segs));
    RigidMotion place = quarter;
    place.translation = current.end() - quarter.apply(current.start());
    const LatticeCurve copy = apply_motion(current, place);

    std::vector<Point> verts = current.vertices();
    verts.insert(verts.end(), copy.vertices().begin() + 1, copy.vertices().end());
    current = LatticeCurve::from_path(std::move(verts), copy.exit_heading());
  }
  return current;
}

// --- tessellations ------------------------------------------------------

EdgeSet Tessellation::edge_set() const {
  EdgeSet out;
  for (const auto& kv : edge_labels) out.insert(kv.first);
  return out;
}

Tessellation tessellate(const LatticeCurve& curve, const std::vector<RigidMotion>& placements) {
  if (placements.empty()) throw InvalidInput("tessellation needs at least one placement");
  Tessellation t;
  t.base_curve = curve;
  t.placements = placements;
  std::size_t per_tile_total = 0;
  for (std::size_t i = 0; i < placements.size(); ++i) {
    t.tiles.push_back(apply_motion(curve, placements[i]));
    const EdgeSet tile_edges = t.tiles.back().edge_set();
    per_tile_total += tile_edges.size();
    for (const Edge& e : tile_edges) t.edge_labels.try_emplace(e).first->second.push_back(i);
  }
  t.overlap_count = per_tile_total - t.edge_labels.size();
  return t;
}

} // namespace patterned::curves
