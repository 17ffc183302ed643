#include "shatter/geom.hpp"

#include <algorithm>
#include <sstream>

#include "flat.hpp"

namespace shatter {

bool lex_less(const Pt& a, const Pt& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

int orientation(const Pt& p, const Pt& q, const Pt& r) {
  Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(cross);
}

std::vector<Pt> convex_hull(std::vector<Pt> points) {
  if (points.empty()) return {};
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const size_t m = points.size();
  if (m <= 1) return points;
  std::vector<Pt> hull(2 * m);
  size_t k = 0;
  for (size_t i = 0; i < m; ++i) {  // lower chain
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  size_t lower = k + 1;
  for (size_t i = m - 1; i-- > 0;) {  // upper chain
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

Halfplane make_halfplane(const Rat& a, const Rat& b, const Rat& c) {
  if (a == 0 && b == 0) throw ValidationError("halfplane with zero normal");
  Rat s = a != 0 ? rat_abs(a) : rat_abs(b);
  return Halfplane{Rat(a / s), Rat(b / s), Rat(c / s)};
}

bool halfplane_contains(const Halfplane& h, const Pt& p) {
  return h.a * p.x + h.b * p.y <= h.c;
}

namespace {

bool cyclic_equal(const std::vector<Pt>& a, const std::vector<Pt>& b) {
  if (a.size() != b.size()) return false;
  const size_t m = a.size();
  for (size_t shift = 0; shift < m; ++shift) {
    bool match = true;
    for (size_t i = 0; i < m && match; ++i) match = a[(shift + i) % m] == b[i];
    if (match) return true;
  }
  return false;
}

}  // namespace

ConvexBody make_body(int id, std::vector<Pt> vertices) {
  if (vertices.empty()) throw ValidationError("body with no vertices");
  if (vertices.size() == 2 && vertices[0] == vertices[1])
    throw ValidationError("segment with equal endpoints");
  if (vertices.size() >= 3) {
    std::vector<Pt> hull = convex_hull(vertices);
    if (!cyclic_equal(hull, vertices))
      throw ValidationError("polygon vertex list is not strictly convex CCW");
  }
  return ConvexBody{id, std::move(vertices)};
}

Family make_family(std::vector<ConvexBody> bodies) {
  for (size_t i = 0; i < bodies.size(); ++i) {
    if (bodies[i].id != static_cast<int>(i))
      throw ValidationError("body ids must be 0..n-1 in order");
  }
  Family f;
  f.bodies = std::move(bodies);
  return f;
}

Family make_lifted_family(std::vector<ConvexBody> bodies, std::vector<long long> levels) {
  if (levels.size() != bodies.size())
    throw ValidationError("lifted family requires one level per body");
  Family f = make_family(std::move(bodies));
  f.ambient = Ambient::Lifted3d;
  f.levels = std::move(levels);
  return f;
}

bool body_in_halfplane(const ConvexBody& c, const Halfplane& h) {
  for (const auto& v : c.vertices)
    if (!halfplane_contains(h, v)) return false;
  return true;
}

namespace {

bool between_coordwise(const Pt& a, const Pt& b, const Pt& p) {
  Rat lox = std::min(a.x, b.x), hix = std::max(a.x, b.x);
  Rat loy = std::min(a.y, b.y), hiy = std::max(a.y, b.y);
  return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
  return orientation(a, b, p) == 0 && between_coordwise(a, b, p);
}

bool segments_intersect(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2) {
  int d1 = orientation(b1, b2, a1);
  int d2 = orientation(b1, b2, a2);
  int d3 = orientation(a1, a2, b1);
  int d4 = orientation(a1, a2, b2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && between_coordwise(b1, b2, a1)) return true;
  if (d2 == 0 && between_coordwise(b1, b2, a2)) return true;
  if (d3 == 0 && between_coordwise(a1, a2, b1)) return true;
  if (d4 == 0 && between_coordwise(a1, a2, b2)) return true;
  return false;
}

bool point_in_body(const Pt& p, const ConvexBody& b) {
  switch (b.kind()) {
    case BodyKind::Point:
      return p == b.vertices[0];
    case BodyKind::Segment:
      return on_segment(b.vertices[0], b.vertices[1], p);
    case BodyKind::Polygon: {
      const size_t m = b.vertices.size();
      for (size_t i = 0; i < m; ++i) {
        if (orientation(b.vertices[i], b.vertices[(i + 1) % m], p) < 0) return false;
      }
      return true;
    }
  }
  return false;
}

std::vector<std::pair<Pt, Pt>> body_edges(const ConvexBody& b) {
  std::vector<std::pair<Pt, Pt>> edges;
  if (b.vertices.size() == 2) {
    edges.emplace_back(b.vertices[0], b.vertices[1]);
  } else if (b.vertices.size() >= 3) {
    const size_t m = b.vertices.size();
    for (size_t i = 0; i < m; ++i) edges.emplace_back(b.vertices[i], b.vertices[(i + 1) % m]);
  }
  return edges;
}

}  // namespace

bool bodies_intersect(const ConvexBody& a, const ConvexBody& b) {
  for (const auto& v : a.vertices)
    if (point_in_body(v, b)) return true;
  for (const auto& v : b.vertices)
    if (point_in_body(v, a)) return true;
  auto ea = body_edges(a);
  auto eb = body_edges(b);
  for (const auto& [p1, p2] : ea)
    for (const auto& [q1, q2] : eb)
      if (segments_intersect(p1, p2, q1, q2)) return true;
  return false;
}

bool family_bodies_intersect(const Family& f, int i, int j) {
  if (f.ambient == Ambient::Lifted3d && f.levels[i] != f.levels[j]) return false;
  return bodies_intersect(f.bodies[i], f.bodies[j]);
}

Pt circle_point(const Rat& t) {
  Rat den = 1 + t * t;
  return Pt{Rat((1 - t * t) / den), Rat(2 * t / den)};
}

std::string GpReport::describe() const {
  if (ok) return "ok";
  std::ostringstream os;
  if (std::holds_alternative<GpDuplicate>(*violation)) {
    const auto& d = std::get<GpDuplicate>(*violation);
    os << "duplicate vertex (" << rat_to_string(d.p.x) << ", " << rat_to_string(d.p.y)
       << ") shared by bodies " << d.body_a << " and " << d.body_b;
  } else {
    const auto& c = std::get<GpCollinear>(*violation);
    os << "collinear vertices (" << rat_to_string(c.p.x) << ", " << rat_to_string(c.p.y) << "), ("
       << rat_to_string(c.q.x) << ", " << rat_to_string(c.q.y) << "), (" << rat_to_string(c.r.x)
       << ", " << rat_to_string(c.r.y) << ")";
  }
  return os.str();
}

namespace {

GpReport report_from_issue(const detail::FlatFamily& flat, const detail::GpIssue& issue) {
  GpReport rep;
  if (issue.kind == detail::GpIssue::None) return rep;
  rep.ok = false;
  if (issue.kind == detail::GpIssue::Duplicate) {
    GpDuplicate d;
    d.p = detail::vertex_point(flat, issue.a);
    d.body_a = flat.body_of[issue.a];
    d.body_b = flat.body_of[issue.b];
    rep.violation = d;
  } else {
    GpCollinear c;
    c.p = detail::vertex_point(flat, issue.a);
    c.q = detail::vertex_point(flat, issue.b);
    c.r = detail::vertex_point(flat, issue.c);
    rep.violation = c;
  }
  return rep;
}

}  // namespace

GpReport check_general_position(const Family& f) {
  if (f.ambient != Ambient::Planar)
    throw std::invalid_argument("check_general_position requires a planar family");
  auto flat = detail::flatten(f);
  auto dup = detail::find_duplicate(flat);
  if (dup.kind != detail::GpIssue::None) return report_from_issue(flat, dup);
  return report_from_issue(flat, detail::find_collinear_distinct(flat));
}

GpReport check_collinear_free(const Family& f) {
  if (f.ambient != Ambient::Planar)
    throw std::invalid_argument("check_collinear_free requires a planar family");
  auto flat = detail::flatten(f);
  return report_from_issue(flat, detail::find_collinear_distinct(flat));
}

Family perturb_family(const Family& f) {
  std::vector<Pt> all;
  for (const auto& b : f.bodies)
    for (const auto& p : b.vertices) all.push_back(p);
  std::optional<Rat> min_dist;
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      Rat d = std::max(rat_abs(all[i].x - all[j].x), rat_abs(all[i].y - all[j].y));
      if (d == 0) continue;
      if (!min_dist || d < *min_dist) min_dist = d;
    }
  }
  if (!min_dist) throw ValidationError("cannot perturb: no two distinct vertices");
  Rat delta = *min_dist / make_rat(1 << 20);
  std::vector<ConvexBody> bodies;
  long long idx = 0;
  for (const auto& b : f.bodies) {
    std::vector<Pt> verts;
    verts.reserve(b.vertices.size());
    for (const auto& p : b.vertices) {
      // The quadratic y-term is what breaks horizontal collinear triples,
      // which survive any x-only shear.
      Rat i = Rat(to_int(idx));
      verts.push_back(Pt{Rat(p.x + i * delta), Rat(p.y + i * i * delta)});
      ++idx;
    }
    bodies.push_back(make_body(b.id, std::move(verts)));
  }
  if (f.ambient == Ambient::Lifted3d) return make_lifted_family(std::move(bodies), f.levels);
  return make_family(std::move(bodies));
}

}  // namespace shatter
