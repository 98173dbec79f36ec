#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "tricirc/embedding.hpp"

namespace tricirc {

// Deterministic RNG for the generators. std::mt19937_64 is bit-exact
// across platforms; the bounded draw uses masked rejection instead of
// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [lo, hi], inclusive.
  int uniform(int lo, int hi);

private:
  std::mt19937_64 gen_;
};

// Cycle v0..v_{r-1} plus two nonadjacent apexes joined to every cycle
// vertex (ids r and r+1). 4-connected maximal planar on r + 2 vertices;
// r = 4 gives the octahedron. Throws TooSmall for r < 4.
Triangulation double_wheel(int r);

// Insert a new vertex (id n) inside the face with vertex set `face` and
// join it to the three boundary vertices. Throws NotAFace.
Triangulation stack_vertex(const Triangulation& t, std::array<int, 3> face);

// Stack a vertex into every face of a 4-connected maximal planar graph on
// n' >= 6 vertices. The result has n = 3n' - 4 vertices, is essentially
// 4-connected, and its separating triangles are exactly the 2n' - 4
// original faces. Throws NotFourConnected / TooSmall.
Triangulation extremal_expand(const Triangulation& g4);

// Diagonal flip of edge {u,v}: replace it with the opposite diagonal of
// the two incident triangles. Returns false (leaving `out` untouched)
// when the flip would create a parallel edge. Exposed for tests.
bool flip_edge(const Triangulation& t, int u, int v, Triangulation* out);

struct GeneratorConfig {
  int retry_budget = 1000;    // rejection loops
  int flips_per_vertex = 10;  // random-walk length is flips_per_vertex * n
};

// Random 4-connected maximal planar graph on n >= 6 vertices: a diagonal
// flip random walk from double_wheel(n - 2), rejecting every state with a
// separating triangle. Deterministic per (n, seed); uniformity is not
// claimed.
Triangulation random_4connected_triangulation(int n, std::uint64_t seed,
                                              const GeneratorConfig& cfg = {});

// Random essentially 4-connected maximal planar graph on n >= 6 vertices:
// a random 4-connected base plus degree-3 vertices stacked into randomly
// chosen distinct faces, re-drawn until is_essentially_4_connected holds.
// Deterministic per (n, seed). Throws Unsatisfiable when the retry budget
// runs out.
Triangulation random_essentially_4connected_triangulation(
    int n, std::uint64_t seed, const GeneratorConfig& cfg = {});

}  // namespace tricirc
