#include <doctest.h>

#include <random>

#include "shatter/geom.hpp"

using namespace shatter;

namespace {

Pt pt(long long x, long long y) { return Pt{make_rat(x), make_rat(y)}; }
Pt ptq(const char* x, const char* y) { return Pt{parse_rat(x), parse_rat(y)}; }

std::mt19937_64 rng(7);

Pt random_pt() {
  auto coord = [&]() {
    return make_rat(static_cast<long long>(rng() % 2001) - 1000, 1 + static_cast<long long>(rng() % 16));
  };
  return Pt{coord(), coord()};
}

}  // namespace

TEST_CASE("orientation signs") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, -1)) == -1);
}

TEST_CASE("orientation is antisymmetric and translation invariant") {
  for (int i = 0; i < 300; ++i) {
    Pt p = random_pt(), q = random_pt(), r = random_pt();
    CHECK(orientation(p, q, r) == -orientation(p, r, q));
    Pt t = random_pt();
    Pt p2{Rat(p.x + t.x), Rat(p.y + t.y)};
    Pt q2{Rat(q.x + t.x), Rat(q.y + t.y)};
    Pt r2{Rat(r.x + t.x), Rat(r.y + t.y)};
    CHECK(orientation(p, q, r) == orientation(p2, q2, r2));
  }
}

TEST_CASE("convex hull on the spec examples") {
  auto h1 = convex_hull({pt(0, 0)});
  REQUIRE(h1.size() == 1);
  CHECK(h1[0] == pt(0, 0));

  auto h2 = convex_hull({pt(0, 0), pt(1, 0), pt(0, 1), ptq("1/4", "1/4")});
  REQUIRE(h2.size() == 3);
  CHECK(h2[0] == pt(0, 0));
  CHECK(h2[1] == pt(1, 0));
  CHECK(h2[2] == pt(0, 1));

  auto h3 = convex_hull({pt(0, 0), pt(2, 0), pt(1, 0)});
  REQUIRE(h3.size() == 2);
  CHECK(h3[0] == pt(0, 0));
  CHECK(h3[1] == pt(2, 0));
}

TEST_CASE("convex hull output is convex and contains the input") {
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Pt> pts;
    int n = 3 + static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) pts.push_back(random_pt());
    auto hull = convex_hull(pts);
    if (hull.size() >= 3) {
      for (size_t i = 0; i < hull.size(); ++i) {
        CHECK(orientation(hull[i], hull[(i + 1) % hull.size()], hull[(i + 2) % hull.size()]) == 1);
      }
      for (const auto& p : pts) {
        for (size_t i = 0; i < hull.size(); ++i)
          CHECK(orientation(hull[i], hull[(i + 1) % hull.size()], p) >= 0);
      }
    }
  }
}

TEST_CASE("body containment in halfplane") {
  Halfplane y_le_1 = make_halfplane(make_rat(0), make_rat(1), make_rat(1));
  Halfplane y_le_0 = make_halfplane(make_rat(0), make_rat(1), make_rat(0));
  Halfplane y_le_half = make_halfplane(make_rat(0), make_rat(1), parse_rat("1/2"));
  ConvexBody horizontal = make_body(0, {pt(0, 0), pt(1, 0)});
  ConvexBody vertical = make_body(1, {pt(0, 0), pt(0, 1)});
  CHECK(body_in_halfplane(horizontal, y_le_1));
  CHECK(body_in_halfplane(horizontal, y_le_0));  // boundary touch counts
  CHECK(!body_in_halfplane(vertical, y_le_half));
}

TEST_CASE("halfplane containment is monotone in c") {
  for (int i = 0; i < 100; ++i) {
    ConvexBody b = make_body(0, {random_pt()});
    Pt p2 = random_pt();
    if (!(b.vertices[0] == p2)) b = make_body(0, {b.vertices[0], p2});
    Rat a = make_rat(static_cast<long long>(rng() % 9) - 4);
    Rat bc = make_rat(static_cast<long long>(rng() % 9) - 4);
    if (a == 0 && bc == 0) a = 1;
    Rat c = make_rat(static_cast<long long>(rng() % 2001) - 1000, 4);
    Halfplane h = make_halfplane(a, bc, c);
    Halfplane h2 = make_halfplane(a, bc, Rat(c + 3));
    if (body_in_halfplane(b, h)) CHECK(body_in_halfplane(b, h2));
  }
}

TEST_CASE("halfplane normalization makes equal halfplanes equal") {
  CHECK(make_halfplane(make_rat(2), make_rat(4), make_rat(6)) ==
        make_halfplane(make_rat(1), make_rat(2), make_rat(3)));
  CHECK(make_halfplane(make_rat(-2), make_rat(4), make_rat(6)) ==
        make_halfplane(make_rat(-1), make_rat(2), make_rat(3)));
  CHECK(make_halfplane(make_rat(0), make_rat(-5), make_rat(10)) ==
        make_halfplane(make_rat(0), make_rat(-1), make_rat(2)));
  CHECK_THROWS_AS(make_halfplane(make_rat(0), make_rat(0), make_rat(1)), ValidationError);
}

TEST_CASE("bodies_intersect on the spec examples") {
  ConvexBody cross1 = make_body(0, {pt(0, 0), pt(2, 2)});
  ConvexBody cross2 = make_body(1, {pt(0, 2), pt(2, 0)});
  CHECK(bodies_intersect(cross1, cross2));

  ConvexBody par1 = make_body(0, {pt(0, 0), pt(1, 0)});
  ConvexBody par2 = make_body(1, {pt(0, 1), pt(1, 1)});
  CHECK(!bodies_intersect(par1, par2));

  ConvexBody tri = make_body(0, {pt(0, 0), pt(4, 0), pt(0, 4)});
  ConvexBody inner = make_body(1, {pt(1, 1)});
  CHECK(bodies_intersect(tri, inner));
}

TEST_CASE("bodies_intersect boundary touch counts") {
  ConvexBody a = make_body(0, {pt(0, 0), pt(1, 0)});
  ConvexBody b = make_body(1, {pt(1, 0), pt(2, 1)});
  CHECK(bodies_intersect(a, b));
  ConvexBody t1 = make_body(0, {pt(0, 0), pt(2, 0), pt(0, 2)});
  ConvexBody t2 = make_body(1, {pt(1, 1), pt(3, 1), pt(1, 3)});
  CHECK(bodies_intersect(t1, t2));
}

namespace {

// Independent oracle: separating-axis test over the complete candidate set
// for polytopes (edge normals of both bodies plus all vertex-difference
// directions). Disjoint closed convex polygons always admit one of these.
bool sat_disjoint(const ConvexBody& a, const ConvexBody& b) {
  std::vector<Pt> axes;
  auto add_edge_normals = [&](const ConvexBody& c) {
    const size_t m = c.vertices.size();
    if (m < 2) return;
    size_t count = m == 2 ? 1 : m;
    for (size_t i = 0; i < count; ++i) {
      const Pt& p = c.vertices[i];
      const Pt& q = c.vertices[(i + 1) % m];
      axes.push_back(Pt{Rat(p.y - q.y), Rat(q.x - p.x)});
    }
  };
  add_edge_normals(a);
  add_edge_normals(b);
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) {
      if (!(u == v)) axes.push_back(Pt{Rat(u.x - v.x), Rat(u.y - v.y)});
    }
  for (const auto& d : axes) {
    if (d.x == 0 && d.y == 0) continue;
    Rat amin, amax, bmin, bmax;
    bool first = true;
    for (const auto& p : a.vertices) {
      Rat v = d.x * p.x + d.y * p.y;
      if (first || v < amin) amin = v;
      if (first || v > amax) amax = v;
      first = false;
    }
    first = true;
    for (const auto& p : b.vertices) {
      Rat v = d.x * p.x + d.y * p.y;
      if (first || v < bmin) bmin = v;
      if (first || v > bmax) bmax = v;
      first = false;
    }
    if (amax < bmin || bmax < amin) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("bodies_intersect agrees with the separating-axis oracle") {
  std::mt19937_64 g(99);
  auto coord = [&]() {
    return make_rat(static_cast<long long>(g() % 257) - 128, 1 + static_cast<long long>(g() % 8));
  };
  int checked = 0;
  while (checked < 400) {
    auto mk = [&](int id) -> std::optional<ConvexBody> {
      int kind = static_cast<int>(g() % 3);
      try {
        if (kind == 0) return make_body(id, {Pt{coord(), coord()}});
        if (kind == 1) return make_body(id, {Pt{coord(), coord()}, Pt{coord(), coord()}});
        std::vector<Pt> pts;
        for (int i = 0; i < 5; ++i) pts.push_back(Pt{coord(), coord()});
        auto hull = convex_hull(pts);
        if (hull.size() < 3) return std::nullopt;
        return make_body(id, hull);
      } catch (const ValidationError&) {
        return std::nullopt;
      }
    };
    auto a = mk(0), b = mk(1);
    if (!a || !b) continue;
    ++checked;
    CHECK(bodies_intersect(*a, *b) == !sat_disjoint(*a, *b));
  }
}

TEST_CASE("bodies_intersect is symmetric and reflexive") {
  for (int i = 0; i < 80; ++i) {
    std::vector<Pt> va, vb;
    int ka = 1 + static_cast<int>(rng() % 3), kb = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < 5; ++k) va.push_back(random_pt());
    for (int k = 0; k < 5; ++k) vb.push_back(random_pt());
    auto mk = [](int id, std::vector<Pt> pts, int kind) -> std::optional<ConvexBody> {
      try {
        if (kind == 1) return make_body(id, {pts[0]});
        if (kind == 2) return make_body(id, {pts[0], pts[1]});
        auto hull = convex_hull(pts);
        if (hull.size() < 3) return std::nullopt;
        return make_body(id, hull);
      } catch (const ValidationError&) {
        return std::nullopt;
      }
    };
    auto a = mk(0, va, ka), b = mk(1, vb, kb);
    if (!a || !b) continue;
    CHECK(bodies_intersect(*a, *b) == bodies_intersect(*b, *a));
    CHECK(bodies_intersect(*a, *a));
  }
}

TEST_CASE("circle_point lies exactly on the unit circle") {
  CHECK(circle_point(make_rat(0)) == pt(1, 0));
  CHECK(circle_point(make_rat(1)) == pt(0, 1));
  CHECK(circle_point(parse_rat("1/2")) == ptq("3/5", "4/5"));
  for (int i = 0; i < 200; ++i) {
    Rat t = make_rat(static_cast<long long>(rng() % 4001) - 2000, 1 + static_cast<long long>(rng() % 64));
    Pt p = circle_point(t);
    CHECK(p.x * p.x + p.y * p.y == 1);
  }
  // distinct parameters give distinct points
  CHECK(!(circle_point(make_rat(2)) == circle_point(make_rat(3))));
}

TEST_CASE("general position check") {
  Family ok = make_family({make_body(0, {pt(0, 0), pt(1, 3)}), make_body(1, {pt(5, 1), pt(6, 7)})});
  CHECK(check_general_position(ok).ok);

  Family collinear = make_family(
      {make_body(0, {pt(0, 0), pt(2, 0)}), make_body(1, {pt(1, 0), pt(1, 1)})});
  GpReport rep = check_general_position(collinear);
  REQUIRE(!rep.ok);
  CHECK(std::holds_alternative<GpCollinear>(*rep.violation));

  Family dup = make_family(
      {make_body(0, {pt(0, 0), pt(1, 2)}), make_body(1, {pt(0, 0), pt(3, 1)})});
  GpReport rep2 = check_general_position(dup);
  REQUIRE(!rep2.ok);
  CHECK(std::holds_alternative<GpDuplicate>(*rep2.violation));
  // the relaxed check tolerates shared vertices
  CHECK(check_collinear_free(dup).ok);
}

TEST_CASE("make_body rejects invalid vertex lists") {
  CHECK_THROWS_AS(make_body(0, {}), ValidationError);
  CHECK_THROWS_AS(make_body(0, {pt(1, 1), pt(1, 1)}), ValidationError);
  // reflex quad (not convex)
  CHECK_THROWS_AS(make_body(0, {pt(0, 0), pt(4, 0), pt(1, 1), pt(0, 4)}), ValidationError);
  // clockwise triangle
  CHECK_THROWS_AS(make_body(0, {pt(0, 0), pt(0, 4), pt(4, 0)}), ValidationError);
  // collinear triple inside a "polygon"
  CHECK_THROWS_AS(make_body(0, {pt(0, 0), pt(2, 0), pt(4, 0)}), ValidationError);
}

TEST_CASE("perturbation separates duplicates and kills collinearity") {
  Family f = make_family(
      {make_body(0, {pt(0, 0), pt(2, 0)}), make_body(1, {pt(1, 0), pt(1, 1)})});
  CHECK(!check_general_position(f).ok);
  Family g = perturb_family(f);
  CHECK(check_general_position(g).ok);
  // the shear is tiny relative to the feature scale
  CHECK(rat_abs(g.bodies[1].vertices[1].y - 1) < parse_rat("1/1000"));
  CHECK(rat_abs(g.bodies[1].vertices[1].x - 1) < parse_rat("1/1000"));
}
