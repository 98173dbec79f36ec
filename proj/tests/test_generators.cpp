#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "tricirc/connectivity.hpp"
#include "tricirc/cycles.hpp"
#include "tricirc/generators.hpp"

using namespace tricirc;

namespace {

std::string rot_bytes(const Triangulation& t) {
  std::ostringstream out;
  write_rot(out, t.emb());
  return out.str();
}

}  // namespace

TEST_CASE("double_wheel(4) is the octahedron") {
  Triangulation t = double_wheel(4);
  CHECK(t.vertex_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(t.emb().degree(v) == 4);
  CHECK(is_four_connected(t));
}

TEST_CASE("double_wheel basics") {
  CHECK_THROWS_AS(double_wheel(3), TooSmall);
  Triangulation t = double_wheel(6);
  CHECK(t.vertex_count() == 8);
  CHECK(separating_triangles(t).empty());
  CHECK(is_maximal_planar(t.emb()));
}

TEST_CASE("stack_vertex grows a triangulation by one") {
  Triangulation k4(fixtures::k4());
  Face f = k4.faces()[0];
  Triangulation t = stack_vertex(k4, {f[0], f[1], f[2]});
  CHECK(t.vertex_count() == 5);
  CHECK(is_maximal_planar(t.emb()));
  CHECK(t.emb().degree(4) == 3);
  CHECK_THROWS_AS(stack_vertex(k4, {0, 1, 9}), NotAFace);
  // octahedron: stacking one face creates exactly one separating triangle
  Triangulation octa(fixtures::octahedron());
  Triangulation s = stack_vertex(octa, {0, 1, 4});
  CHECK(separating_triangles(s).size() == 1);
}

TEST_CASE("stacking every face equals extremal_expand") {
  Triangulation octa(fixtures::octahedron());
  Triangulation cur = octa;
  for (const Face& f : octa.faces()) cur = stack_vertex(cur, {f[0], f[1], f[2]});
  CHECK(rot_bytes(cur) == rot_bytes(extremal_expand(octa)));
}

TEST_CASE("extremal_expand counts") {
  Triangulation octa(fixtures::octahedron());
  Triangulation g14 = extremal_expand(octa);
  CHECK(g14.vertex_count() == 3 * 6 - 4);
  CHECK(static_cast<int>(g14.faces().size()) == 2 * 14 - 4);
  Triangulation g20 = extremal_expand(double_wheel(6));
  CHECK(g20.vertex_count() == 20);
  CHECK(is_essentially_4_connected(g20));
  CHECK(separating_triangles(g20).size() == 2 * 8 - 4);  // one per base face
  // inserted vertices form an independent degree-3 set
  for (int v = 8; v < 20; ++v) {
    CHECK(g20.emb().degree(v) == 3);
    for (int u : g20.emb().neighbors(v)) CHECK(u < 8);
  }
}

TEST_CASE("extremal_expand rejects bad bases") {
  Triangulation octa(fixtures::octahedron());
  Triangulation stacked = stack_vertex(octa, {0, 1, 4});  // has a 3-cut
  CHECK_THROWS_AS(extremal_expand(stacked), NotFourConnected);
  CHECK_THROWS_AS(extremal_expand(Triangulation(fixtures::k4())), TooSmall);
}

TEST_CASE("flip_edge keeps a valid triangulation") {
  Triangulation t = double_wheel(6);
  Triangulation out = t;
  int flips = 0;
  for (int u = 0; u < t.vertex_count() && flips == 0; ++u)
    for (int v : t.emb().neighbors(u)) {
      if (v < u) continue;
      if (flip_edge(t, u, v, &out)) {
        ++flips;
        break;
      }
    }
  REQUIRE(flips == 1);
  CHECK(out.vertex_count() == t.vertex_count());
  CHECK(out.edge_count() == t.edge_count());
  CHECK(is_maximal_planar(out.emb()));
}

TEST_CASE("random_4connected_triangulation meets its contract") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    Triangulation t = random_4connected_triangulation(9, seed);
    CHECK(t.vertex_count() == 9);
    CHECK(separating_triangles(t).empty());
    CHECK(connectivity_at_least(t.emb(), 4));
  }
}

TEST_CASE("n = 6 always draws the octahedron") {
  Triangulation a = random_4connected_triangulation(6, 17);
  CHECK(a.vertex_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(a.emb().degree(v) == 4);
  Triangulation b = random_essentially_4connected_triangulation(6, 99);
  for (int v = 0; v < 6; ++v) CHECK(b.emb().degree(v) == 4);
}

TEST_CASE("random_essentially_4connected_triangulation meets its contract") {
  for (int n : {12, 14, 17}) {
    Triangulation t = random_essentially_4connected_triangulation(n, 7);
    CHECK(t.vertex_count() == n);
    CHECK(is_maximal_planar(t.emb()));
    CHECK(is_essentially_4_connected(t));
  }
}

TEST_CASE("generators are deterministic to the byte") {
  CHECK(rot_bytes(random_4connected_triangulation(10, 42)) ==
        rot_bytes(random_4connected_triangulation(10, 42)));
  CHECK(rot_bytes(random_essentially_4connected_triangulation(12, 7)) ==
        rot_bytes(random_essentially_4connected_triangulation(12, 7)));
  CHECK(rot_bytes(random_essentially_4connected_triangulation(12, 7)) !=
        rot_bytes(random_essentially_4connected_triangulation(12, 8)));
}

TEST_CASE("double_wheel(6) output is maximal planar by face trace") {
  Triangulation t = double_wheel(6);
  for (const Face& f : t.faces()) CHECK(f.size() == 3);
}
