#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shatter/errors.hpp"
#include "shatter/rational.hpp"

namespace shatter {

struct Pt {
  Rat x, y;
};

inline bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }

/// x-then-y order, used by hull construction and canonical reporting.
bool lex_less(const Pt& a, const Pt& b);

/// Sign of the cross product (q-p) x (r-p): +1 when r is strictly left of the
/// directed line p->q, 0 when collinear, -1 when strictly right.
int orientation(const Pt& p, const Pt& q, const Pt& r);

/// Convex hull in CCW order with no collinear triples on the boundary.
/// Collinear input collapses to the two extreme points; a single (repeated)
/// point collapses to one.
std::vector<Pt> convex_hull(std::vector<Pt> points);

/// Closed halfplane {(x,y) : a*x + b*y <= c}. Stored normalized so the first
/// nonzero coefficient of (a,b) has absolute value 1; equal halfplanes then
/// compare equal as triples.
struct Halfplane {
  Rat a, b, c;
};

Halfplane make_halfplane(const Rat& a, const Rat& b, const Rat& c);
inline bool operator==(const Halfplane& l, const Halfplane& r) {
  return l.a == r.a && l.b == r.b && l.c == r.c;
}

bool halfplane_contains(const Halfplane& h, const Pt& p);

enum class BodyKind { Point, Segment, Polygon };

/// A convex body given by its vertices: 1 = point, 2 = segment, >=3 = strictly
/// convex polygon in CCW order.
struct ConvexBody {
  int id = 0;
  std::vector<Pt> vertices;

  BodyKind kind() const {
    return vertices.size() == 1 ? BodyKind::Point
                                : (vertices.size() == 2 ? BodyKind::Segment : BodyKind::Polygon);
  }
};

/// Validates the vertex list (distinct endpoints for segments; polygons must
/// equal their own hull up to rotation, which enforces strict convexity and
/// CCW order). Throws ValidationError.
ConvexBody make_body(int id, std::vector<Pt> vertices);

enum class Ambient { Planar, Lifted3d };

struct Family {
  std::vector<ConvexBody> bodies;
  Ambient ambient = Ambient::Planar;
  std::vector<long long> levels;  // per body, lifted ambient only

  int size() const { return static_cast<int>(bodies.size()); }
};

/// ids must be exactly 0..n-1 in order.
Family make_family(std::vector<ConvexBody> bodies);
Family make_lifted_family(std::vector<ConvexBody> bodies, std::vector<long long> levels);

/// True iff every vertex of C satisfies a*x + b*y <= c. Convexity makes the
/// vertex check sufficient; containment is closed, boundary contact counts.
bool body_in_halfplane(const ConvexBody& c, const Halfplane& h);

/// Closed intersection test; a shared boundary point counts as intersecting.
bool bodies_intersect(const ConvexBody& a, const ConvexBody& b);

/// Family-aware intersection: bodies on distinct levels of a lifted family
/// never meet.
bool family_bodies_intersect(const Family& f, int i, int j);

/// Rational point ((1-t^2)/(1+t^2), 2t/(1+t^2)) on the unit circle.
Pt circle_point(const Rat& t);

struct GpDuplicate {
  Pt p;
  int body_a = -1, body_b = -1;
};
struct GpCollinear {
  Pt p, q, r;
};

struct GpReport {
  bool ok = true;
  std::optional<std::variant<GpDuplicate, GpCollinear>> violation;

  std::string describe() const;
};

/// Strict general position: all vertices across all bodies pairwise distinct
/// and no three collinear. Violations are data, not errors.
GpReport check_general_position(const Family& f);

/// The condition the subset enumeration actually needs: no three pairwise
/// distinct vertex values collinear. Vertices shared between bodies are
/// tolerated (they arise in the unbounded-VC construction) and are handled
/// exactly by value comparison in the sweep.
GpReport check_collinear_free(const Family& f);

/// Enumeration rejects its input with this error when the collinearity
/// condition fails.
struct GeneralPositionViolation : std::runtime_error {
  explicit GeneralPositionViolation(GpReport r)
      : std::runtime_error("general position violation: " + r.describe()), report(std::move(r)) {}
  GpReport report;
};

/// Deterministic rational perturbation: vertex i (global order) moves by
/// (i*delta, i^2*delta), delta = (minimum positive pairwise L-infinity
/// distance) / 2^20. The quadratic term guarantees collinear triples break for
/// all but finitely many delta. Used by the CLI --perturb retry; re-validates
/// all bodies.
Family perturb_family(const Family& f);

}  // namespace shatter
