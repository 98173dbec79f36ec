#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tricirc/cycles.hpp"
#include "tricirc/embedding.hpp"

namespace tricirc {

// Weak dual of one side: nodes are the triangular faces of H on that
// side, adjacent when they share a chord. Always a tree with maximum
// degree 3; a j-face has dual degree 3 - j, so 2-faces are the leaves.
struct WeakDual {
  std::vector<int> face_ids;             // H face ids on this side
  std::vector<int> node_of_face;         // H face id -> node index, or -1
  std::vector<std::vector<int>> adj;     // node -> neighbor nodes

  int size() const { return static_cast<int>(face_ids.size()); }
  int degree(int node) const { return static_cast<int>(adj[node].size()); }
};

// H = G[V(C)] together with everything the redistribution arguments
// consume: the cycle positions, the empty/non-empty face flags inherited
// from the deletion, the interior/exterior side of every face and chord,
// j-classes, and the per-side weak duals. Side labels 0/1 are fixed by
// the embedding (side 0 holds the face left of the directed edge c0->c1)
// but otherwise arbitrary; the sphere has no preferred interior.
struct SidePartition {
  Triangulation h;
  std::vector<int> old_to_new;  // G id -> H id, -1 for removed
  std::vector<int> new_to_old;
  std::vector<bool> face_empty;               // per H face
  std::vector<int> cycle;                     // C as H ids, cyclic order
  std::vector<int> pos;                       // H id -> position on cycle
  std::vector<int> face_side;                 // per H face: 0/1
  std::vector<int> face_j;                    // per H face: # boundary edges on C
  std::array<WeakDual, 2> dual;
  std::vector<std::array<int, 2>> edge_face;  // cycle edge t -> incident face per side

  int k() const { return static_cast<int>(cycle.size()); }
  int cycle_vertex(int t) const {
    int kk = k();
    return cycle[((t % kk) + kk) % kk];
  }
  // Index t of cycle edge {x,y} = {c_t, c_{t+1}}, or -1.
  int edge_index(int x, int y) const;
  bool is_cycle_edge(int x, int y) const { return edge_index(x, y) >= 0; }
  // Positions on C of a face's boundary edges that lie on C.
  std::vector<int> face_cycle_edges(int face) const;
  // The face sharing the chord {x,y} with `face`.
  int across_chord(int face, int x, int y) const;
};

// Builds H via deletion of the outside vertices, assigns every chord a
// side from the embedding's face structure, and cross-validates the
// assignment against two-colorability of the chord interleaving graph.
// Throws ChordConflict on any disagreement and ThreeFaceFound when some
// face has all three edges on C.
SidePartition build_side_partition(const Triangulation& g, const GoodCycle& c);

const WeakDual& weak_dual(const SidePartition& sp, int side);

struct Classification {
  std::array<std::array<int, 3>, 2> f_all{};    // [side][j]: all j-faces
  std::array<std::array<int, 3>, 2> f_empty{};  // [side][j]: empty j-faces
  std::vector<std::array<int, 2>> edge_class;   // cycle edge t -> j per side
};

// Labels every face and cycle edge and asserts that each face incident
// with a cycle edge is empty (throws Claim1Violation with the witness
// face otherwise).
Classification classify(const SidePartition& sp);

// Walk in the weak dual from a 2-face leaf through 1-faces to the first
// 0-face. The rim is the set of cycle edges incident with branch faces;
// it is a path of length r whose vertices are stored in cycle order.
struct Branch {
  int side;
  std::vector<int> faces;  // 2-face, 1-faces..., 0-face
  std::vector<int> rim;    // r+1 vertices (H ids)
  int apex_offset;         // rim index of the 2-face's first own edge, 0..r-2
  int r() const { return static_cast<int>(faces.size()); }
};

// One branch per 2-face of the side. Throws NoZeroFace when the side has
// no 0-face (branches are undefined), RimNotPath when some rim is not a
// path of length r, Claim4Violation when a 1-face lies in two branches.
std::vector<Branch> branches(const SidePartition& sp, int side);

struct Transfer {
  std::string rule;      // "R1".."R8"
  std::string src, dst;  // "edge:t" / "face:f"
  int amount_sixths;
  std::string via;       // witness face for R7/R8
};

// All weights are integers scaled by 6; every rule amount is a multiple
// of 1/6, so conservation checks are exact equality checks.
struct WeightLedger {
  std::vector<int> w1, w2;  // per H face, sixths
  std::vector<int> points;  // per H face, Case-2 point counts
  std::vector<Transfer> transfers;
  std::vector<std::string> notes;  // observations that are not failures
};

// Rules R1-R3: every cycle edge sends its unit weight to its two incident
// faces. Verifies sum w1 = k and the per-face w1 table.
WeightLedger redistribute_first(const SidePartition& sp, const Classification& cls);

// Rules R4-R8, applied as a simultaneous batch from the w1 state for
// every 2-face heavier than 2/3. w2 is produced by replaying the log.
// Verifies sum w2 = k, that only empty faces receive, and that every
// overweight face ships at least its excess. Throws RuleAmbiguity if the
// same transfer (rule, source, target, witness) is emitted twice.
void redistribute_second(const SidePartition& sp, const Classification& cls,
                         const std::array<std::vector<Branch>, 2>& br,
                         WeightLedger& led);

// Rules P1-P4 for Case 2 with the light side `side_i`: each 2-face of
// side_i hands 1 or 2 points to faces of the other side. Verifies the
// two counting claims (f1 + 2 f0 against the point total and against 4)
// and throws Claim5Violation / Claim6Violation with witnesses. Per-face
// point bounds are recorded in the ledger notes; see the implementation
// for why they are not invariants of the rules.
void distribute_points(const SidePartition& sp, const Classification& cls, int side_i,
                       const std::vector<Branch>& other_branches, WeightLedger& led);

enum class ClaimStatus { pass, fail, not_applicable };

struct VerificationReport {
  int n = 0;
  int k = -1;
  int bound = 0;  // ceil(2(n+4)/3)
  int circ = -1;
  std::string case_id;  // "hamiltonian-small-n", "1", "2", "2-shortcut"
  int side_i = -1;      // Case 2: the verified light side
  std::array<std::array<int, 3>, 2> f_empty{};
  int empty_faces = -1, nonempty_faces = -1;
  std::map<std::string, ClaimStatus> claims;
  std::vector<Transfer> transfers;
  std::map<std::string, std::string> witnesses;
  int cycles_verified = 0;
  // How often each executable rerouting configuration was found and run.
  int reroutes_at_apex = 0, reroutes_shifted = 0;
  std::string flag;  // "" or "potential-counterexample-or-bug"

  bool all_pass() const {
    for (const auto& [name, st] : claims)
      if (st == ClaimStatus::fail) return false;
    return flag.empty();
  }
};

struct VerifyOptions {
  SearchLimits limits;
  bool all_longest_good = false;
};

// The end-to-end instance verifier. For n in {8,9,10} it checks
// Hamiltonicity and stops; for n >= 11 it finds a longest good cycle,
// dispatches Case 1 or 2 from the per-side 0-face predicates, runs the
// applicable redistribution, checks every claim and counting identity,
// and cross-checks the exact circumference. Failed checks are recorded
// with witnesses and flag the report; they are never silently dropped.
// Throws PreconditionFailed (n < 8 or not essentially 4-connected) and
// Timeout (propagated from the searches).
VerificationReport verify_bound(const Triangulation& g, const VerifyOptions& opt = {});

// One JSON document per instance; schema keys: n, k, bound, case, side_i,
// f_counts, empty_faces, nonempty_faces, claims, transfers, witnesses.
std::string report_to_json(const VerificationReport& r);

// Short human-readable summary (one line per claim).
std::string report_summary(const VerificationReport& r);

}  // namespace tricirc
