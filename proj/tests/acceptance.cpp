// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Everything is checked exactly; there are no
// tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tricirc/connectivity.hpp"
#include "tricirc/cycles.hpp"
#include "tricirc/discharging.hpp"
#include "tricirc/generators.hpp"

using namespace tricirc;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string err;
  try {
    err = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (err.empty()) {
    std::cout << "PASS criterion " << id << " (" << ms << " ms): " << label << '\n';
  } else {
    ++failures;
    std::cout << "FAIL criterion " << id << " (" << ms << " ms): " << label << " -- " << err
              << '\n';
  }
  std::cout.flush();
}

std::string check(bool ok, const std::string& msg) { return ok ? "" : msg; }

struct Corpus {
  std::vector<Triangulation> random_mid;   // essentially 4-connected, 11 <= n <= 16
  std::vector<Triangulation> small;        // essentially 4-connected, n in {8,9,10}
  std::vector<Triangulation> tight;        // extremal expansions of double wheels
  std::vector<Triangulation> oracle_pool;  // maximal planar, n <= 10
};

Corpus build_corpus() {
  Corpus c;
  for (int n = 11; n <= 16; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      c.random_mid.push_back(random_essentially_4connected_triangulation(n, seed));
  for (int n = 8; n <= 10; ++n)
    for (std::uint64_t seed = 0; seed < 8; ++seed)
      c.small.push_back(random_essentially_4connected_triangulation(n, seed));
  c.small.push_back(double_wheel(6));
  c.small.push_back(double_wheel(7));
  c.small.push_back(double_wheel(8));
  for (int r = 4; r <= 6; ++r) c.tight.push_back(extremal_expand(double_wheel(r)));

  Triangulation k4(fixtures::k4());
  Triangulation octa(fixtures::octahedron());
  c.oracle_pool.push_back(k4);
  c.oracle_pool.push_back(octa);
  for (int r = 5; r <= 8; ++r) c.oracle_pool.push_back(double_wheel(r));
  Triangulation cur = k4;
  for (int i = 0; i < 5; ++i) {
    Face f = cur.faces()[(2 * i) % cur.faces().size()];
    cur = stack_vertex(cur, {f[0], f[1], f[2]});
    c.oracle_pool.push_back(cur);
  }
  Triangulation s1 = stack_vertex(octa, {0, 1, 4});
  c.oracle_pool.push_back(s1);
  c.oracle_pool.push_back(stack_vertex(s1, {6, 0, 1}));
  c.oracle_pool.push_back(stack_vertex(s1, {2, 3, 5}));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    c.oracle_pool.push_back(random_4connected_triangulation(9, seed));
    c.oracle_pool.push_back(random_4connected_triangulation(10, seed));
  }
  return c;
}

int bound_of(int n) { return (2 * n + 10) / 3; }

}  // namespace

int main() {
  std::cout << "building corpus...\n";
  Corpus corpus = build_corpus();
  std::cout << "corpus: " << corpus.random_mid.size() << " mid-size random, "
            << corpus.small.size() << " small, " << corpus.tight.size() << " tight, "
            << corpus.oracle_pool.size() << " oracle fixtures\n";

  criterion(1, "tight family: n = 3n'-4, essentially 4-connected, circ = 2n' exactly", [&] {
    int expect_n[] = {14, 17, 20};
    int expect_circ[] = {12, 14, 16};
    for (int i = 0; i < 3; ++i) {
      const Triangulation& g = corpus.tight[i];
      if (g.vertex_count() != expect_n[i])
        return "n mismatch: " + std::to_string(g.vertex_count());
      if (!is_essentially_4_connected(g))
        return std::string("expansion is not essentially 4-connected");
      int circ = circumference(g.emb(), {std::chrono::seconds(120)}).length;
      if (circ != expect_circ[i])
        return "circumference " + std::to_string(circ) + " != " + std::to_string(expect_circ[i]);
      if (3 * circ != 2 * (g.vertex_count() + 4))
        return std::string("circ != 2/3 (n+4) exactly");
    }
    return std::string();
  });

  criterion(2, "bound: circ >= ceil(2/3 (n+4)) and k >= bound on 60 instances, 11<=n<=16", [&] {
    for (const Triangulation& g : corpus.random_mid) {
      int n = g.vertex_count();
      int circ = circumference(g.emb()).length;
      int k = longest_good_cycle(g.emb()).length();
      if (circ < bound_of(n))
        return "circ " + std::to_string(circ) + " < bound at n=" + std::to_string(n);
      if (k < bound_of(n))
        return "good k " + std::to_string(k) + " < bound at n=" + std::to_string(n);
    }
    return check(corpus.random_mid.size() >= 50, "corpus smaller than 50 instances");
  });

  criterion(3, "good-cycle existence on every instance with n >= 11", [&] {
    std::vector<const Triangulation*> all;
    for (const auto& g : corpus.random_mid) all.push_back(&g);
    for (const auto& g : corpus.tight) all.push_back(&g);
    for (const Triangulation* g : all) {
      try {
        longest_good_cycle(g->emb());
      } catch (const NoGoodCycle&) {
        return "NoGoodCycle at n=" + std::to_string(g->vertex_count());
      }
    }
    return std::string();
  });

  criterion(4, "every essentially 4-connected instance with n in {8,9,10} is Hamiltonian", [&] {
    for (const Triangulation& g : corpus.small) {
      if (!is_essentially_4_connected(g)) return std::string("corpus instance not e4c");
      if (!is_hamiltonian(g.emb()))
        return "non-Hamiltonian instance at n=" + std::to_string(g.vertex_count());
    }
    return std::string();
  });

  int case1_count = 0, case2_count = 0;
  std::vector<VerificationReport> reports;
  for (const Triangulation& g : corpus.random_mid) reports.push_back(verify_bound(g));
  for (const Triangulation& g : corpus.tight) reports.push_back(verify_bound(g));

  criterion(5, "Case 1 ledger: sums w1 = w2 = k, each empty face <= 2/3, face identity", [&] {
    for (const VerificationReport& r : reports) {
      if (r.case_id != "1") continue;
      ++case1_count;
      if (r.claims.at("conservation_w1") != ClaimStatus::pass) return std::string("w1 sum broke at n=" + std::to_string(r.n));
      if (r.claims.at("conservation_w2") != ClaimStatus::pass) return std::string("w2 sum broke at n=" + std::to_string(r.n));
      if (r.claims.at("per_face_w2_max") != ClaimStatus::pass) return std::string("a face exceeded 2/3 at n=" + std::to_string(r.n));
      if (r.claims.at("case1_identity") != ClaimStatus::pass) return std::string("2n-4 = ef + 3(n-k) failed at n=" + std::to_string(r.n));
      if (3 * r.k < 2 * r.n + 8) return std::string("derived k under the bound");
    }
    return check(case1_count > 0, "no Case-1 instance in the corpus");
  });

  criterion(6, "Case 2: 2 f2 + f1 = k, claims 5 and 6, non-empty count <= k/2 - 4", [&] {
    for (const VerificationReport& r : reports) {
      if (r.case_id != "2") continue;
      ++case2_count;
      if (r.claims.at("claim5") != ClaimStatus::pass) return std::string("claim 5 failed at n=" + std::to_string(r.n));
      if (r.claims.at("claim6") != ClaimStatus::pass) return std::string("claim 6 failed at n=" + std::to_string(r.n));
      if (r.claims.at("case2_chain") != ClaimStatus::pass) return std::string("counting chain failed at n=" + std::to_string(r.n));
    }
    return check(case2_count > 0, "no full Case-2 instance in the corpus");
  });

  criterion(7, "structural suite: faces, duals, rims, branches, no extendable edge, cuts", [&] {
    for (const VerificationReport& r : reports) {
      if (!r.all_pass()) return "claim failure at n=" + std::to_string(r.n) + " (" + r.flag + ")";
      for (const char* name : {"claim1", "claim2", "claim4"})
        if (r.claims.at(name) == ClaimStatus::fail) return std::string(name) + " failed";
    }
    std::vector<const Triangulation*> all;
    for (const auto& g : corpus.random_mid) all.push_back(&g);
    for (const auto& g : corpus.tight) all.push_back(&g);
    for (const Triangulation* gp : all) {
      const Triangulation& g = *gp;
      if (static_cast<int>(g.faces().size()) != 2 * g.vertex_count() - 4)
        return std::string("face count != 2n-4");
      GoodCycle c = longest_good_cycle(g.emb());
      if (!extendable_edges(g.emb(), c).empty())
        return std::string("longest good cycle has an extendable edge");
      SidePartition sp = build_side_partition(g, c);
      for (int side = 0; side < 2; ++side) {
        const WeakDual& d = sp.dual[side];
        if (d.size() != sp.k() - 2) return std::string("weak dual size != k-2");
        int edges = 0;
        for (int node = 0; node < d.size(); ++node) {
          if (d.degree(node) > 3) return std::string("weak dual degree > 3");
          edges += d.degree(node);
        }
        if (edges != 2 * (d.size() - 1)) return std::string("weak dual is not a tree");
      }
    }
    // 3-cuts of a triangulation coincide with its separating triangles
    for (const Triangulation& g : corpus.small) {
      auto tri = separating_triangles(g);
      auto cuts = three_cuts(g.emb());
      std::map<std::array<int, 3>, int> a, b;
      for (const CutSet& c : tri) ++a[c.vertices];
      for (const CutSet& c : cuts) ++b[c.vertices];
      if (a != b) return std::string("3-cuts and separating triangles diverge");
    }
    return std::string();
  });

  criterion(8, "oracle equivalence on >= 20 maximal planar graphs with n <= 10", [&] {
    if (corpus.oracle_pool.size() < 20)
      return "only " + std::to_string(corpus.oracle_pool.size()) + " fixtures";
    for (const Triangulation& g : corpus.oracle_pool) {
      if (g.vertex_count() > 10) return std::string("fixture larger than n = 10");
      int naive = oracle::circumference(g.emb());
      int fast = circumference(g.emb()).length;
      if (naive != fast)
        return "circumference " + std::to_string(fast) + " != oracle " + std::to_string(naive);
      int naive_good = oracle::longest_good_cycle_length(g.emb());
      int fast_good = 0;
      try {
        fast_good = longest_good_cycle(g.emb()).length();
      } catch (const NoGoodCycle&) {
        fast_good = 0;
      }
      if (naive_good != fast_good)
        return "good length " + std::to_string(fast_good) + " != oracle " +
               std::to_string(naive_good);
    }
    return std::string();
  });

  criterion(9, "rerouting: same-length good cycle through the designated end-face edge", [&] {
    int apex = 0, shifted = 0;
    std::vector<Triangulation> pool = corpus.random_mid;
    for (int n : {18, 20, 22})
      for (std::uint64_t seed = 0; seed < 6; ++seed)
        pool.push_back(random_essentially_4connected_triangulation(n, seed));
    for (const Triangulation& g : pool) {
      VerificationReport r = verify_bound(g);
      if (r.claims.at("claim3") == ClaimStatus::fail)
        return "a rerouting check failed at n=" + std::to_string(r.n);
      apex += r.reroutes_at_apex;
      shifted += r.reroutes_shifted;
    }
    if (apex == 0) return std::string("no rim-at-apex configuration in the corpus");
    if (shifted == 0) return std::string("no rim-shifted configuration in the corpus");
    std::cout << "  (rerouting configurations exercised: " << apex << " at apex, " << shifted
              << " shifted)\n";
    return std::string();
  });

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass\n"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED\n");
  return failures;
}
