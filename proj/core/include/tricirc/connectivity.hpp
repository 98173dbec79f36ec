#pragma once

#include <array>
#include <vector>

#include "tricirc/embedding.hpp"

namespace tricirc {

// A separating vertex triple together with the component partition of
// G - S. `trivial` iff at most one component has two or more vertices;
// in a 3-connected planar graph that is exactly the case S = N(v) for a
// degree-3 vertex v.
struct CutSet {
  std::array<int, 3> vertices;                // ascending
  std::vector<std::vector<int>> components;   // each sorted ascending
  bool trivial = false;
};

// True iff n > k and no vertex set of size < k disconnects G. k in 1..5.
bool connectivity_at_least(const Embedding& g, int k);

// All 3-cuts of a 3-connected G, by brute force over vertex triples.
// Every cut of a 3-connected planar input splits into exactly two
// components; that is re-checked here. Throws NotThreeConnected.
std::vector<CutSet> three_cuts(const Embedding& g);

// All triangles of a triangulation that are not faces, as CutSets. For
// n >= 5 these coincide with three_cuts (the fast path for
// triangulations).
std::vector<CutSet> separating_triangles(const Triangulation& t);

// True iff every 3-cut of G is trivial. Requires G 3-connected (throws
// NotThreeConnected). Both the trivial-cut test and the
// degree-3-neighborhood characterization are evaluated and cross-checked.
bool is_essentially_4_connected(const Embedding& g);

// Triangulation overload using the separating-triangle fast path; the
// verdict (and 3-/4-connectivity) is cached on the instance.
bool is_essentially_4_connected(const Triangulation& t);

bool is_three_connected(const Triangulation& t);
bool is_four_connected(const Triangulation& t);

}  // namespace tricirc
