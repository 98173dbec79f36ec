#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "tricirc/embedding.hpp"

namespace tricirc {

// A cycle whose outside vertices form an independent set of degree-3
// vertices. `verts` is the cyclic vertex sequence; indices are taken
// modulo length everywhere.
struct GoodCycle {
  std::vector<int> verts;
  std::vector<int> outside;  // V(G) \ V(C), ascending
  int length() const { return static_cast<int>(verts.size()); }
};

struct SearchLimits {
  std::chrono::milliseconds budget{60000};
};

struct LongestCycle {
  int length = 0;
  std::vector<int> cycle;
};

// Exact circumference with one witness cycle. Deterministic: anchors and
// neighbors are explored in ascending id order and only strict
// improvements are recorded, so the witness is the first longest cycle in
// that order. Throws Acyclic for forests, Timeout past the budget.
LongestCycle circumference(const Embedding& g, const SearchLimits& lim = {});

// circumference(g) == n.
bool is_hamiltonian(const Embedding& g, const SearchLimits& lim = {});

// True iff `cycle` is outer independent with all outside vertices of
// degree 3. Throws NotACycle when the sequence is not a cycle of g.
bool is_good_cycle(const Embedding& g, const std::vector<int>& cycle);

// Validate and package; throws NotACycle.
GoodCycle make_good_cycle(const Embedding& g, std::vector<int> verts);

// A cycle edge xy with a common neighbor z outside the cycle; replacing
// xy with (x, z, y) yields a longer good cycle.
struct ExtendableEdge {
  int x, y, z;
};

// All extendable edges of a good cycle, each with its least witness z.
std::vector<ExtendableEdge> extendable_edges(const Embedding& g, const GoodCycle& c);

// Apply the detour (x, z, y); length grows by exactly 1 and the result is
// again good. Throws NotExtendable.
GoodCycle extend(const Embedding& g, const GoodCycle& c, const ExtendableEdge& e);

// Exact longest good cycle, deterministic like circumference. Throws
// NoGoodCycle when the graph has none (for an essentially 4-connected
// planar graph on n >= 11 vertices that would refute a proven fact, so
// callers treat it as counterexample-grade).
GoodCycle longest_good_cycle(const Embedding& g, const SearchLimits& lim = {});

// Every longest good cycle, each listed once (anchored at its minimum
// vertex, direction-normalized), in deterministic order.
std::vector<GoodCycle> all_longest_good_cycles(const Embedding& g,
                                               const SearchLimits& lim = {});

// A same-length rerouting of a good cycle through one end face of a fan
// of chords, described by the cycle arc it replaces. Two shapes:
//
//   rim_at_apex: arc (v0, v1, ..., v_{r+1}) becomes
//                (v0, v2, ..., v_r, v1, v_{r+1});
//   rim_shifted: arc (w, v0, v1, ..., v_r) becomes, with the break index s,
//                (w, v2, ..., v_{r-1}, v1, v0, v_r)        for s = r,
//                (w, v2, v1, v3, ..., v_{r-1}, v0, v_r)    for s <= r-1.
//
// `arc` holds the replaced vertices in cycle order. The replacement
// visits the same vertex set, so goodness and length are preserved.
struct RerouteContext {
  enum class Kind { rim_at_apex, rim_shifted };
  Kind kind;
  std::vector<int> arc;
  int s = -1;  // rim_shifted only: 3 <= s <= r
};

// Throws ConfigMismatch when the arc does not lie on the cycle or a
// required chord is absent.
GoodCycle reroute(const Embedding& g, const GoodCycle& c, const RerouteContext& ctx);

}  // namespace tricirc
