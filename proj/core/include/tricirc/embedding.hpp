#pragma once

#include <array>
#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

#include "tricirc/errors.hpp"

namespace tricirc {

// A face boundary traced from the rotation system: the cyclic sequence of
// vertices, one per boundary edge (so its length equals the face degree).
using Face = std::vector<int>;

// Combinatorial embedding of a connected simple graph on the sphere.
//
// The rotation system rot[v] lists the neighbors of v in counterclockwise
// order (one fixed orientation for the whole graph). Faces are traced with
// the rule next(u->v) = (v, w) where w is the predecessor of u in rot[v];
// every directed edge then lies on exactly one face boundary. Euler's
// relation n - m + |faces| = 2 over the traced faces is the accepted
// planarity certificate; rotation systems of higher genus are rejected.
//
// Vertices are dense ids 0..n-1. Instances are immutable after
// construction and safe to share across threads.
class Embedding {
public:
  static Embedding from_rotation(int n, std::vector<std::vector<int>> rot);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return rot_[v]; }
  const std::vector<std::vector<int>>& rotation() const { return rot_; }
  const std::vector<Face>& faces() const { return faces_; }

  bool adjacent(int u, int v) const { return rot_index(v, u) >= 0; }
  // Position of u within rot[v], or -1 when u is not a neighbor of v.
  int rot_index(int v, int u) const { return rot_pos_[(size_t)v * n_ + u]; }
  // The face whose boundary contains the directed edge u->v.
  int face_left_of(int u, int v) const;

  // True iff some traced face has exactly the vertex set {t0,t1,t2}.
  bool is_face(std::array<int, 3> tri) const {
    return face_with_vertices(tri) >= 0;
  }
  // Index of the triangular face with that vertex set, or -1.
  int face_with_vertices(std::array<int, 3> tri) const;

private:
  Embedding() = default;
  void trace_faces();

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> rot_;
  std::vector<Face> faces_;
  std::vector<int> rot_pos_;   // [v*n+u] -> index of u in rot[v], or -1
  std::vector<int> dir_face_;  // [u*n+v] -> id of the face left of u->v
};

// True iff every traced face is a triangle (equivalently m = 3n - 6 for
// n >= 3).
bool is_maximal_planar(const Embedding& e);

// A maximal planar embedding: m = 3n - 6 and |faces| = 2n - 4, every face
// a triangle. Connectivity verdicts are cached after first computation
// (the connectivity module fills them; the embedding itself never
// changes).
class Triangulation {
public:
  explicit Triangulation(Embedding e);

  const Embedding& emb() const { return emb_; }
  int vertex_count() const { return emb_.vertex_count(); }
  int edge_count() const { return emb_.edge_count(); }
  const std::vector<Face>& faces() const { return emb_.faces(); }

  // Tri-state connectivity caches: -1 unknown, else 0/1.
  struct ConnCache {
    std::atomic<int> three{-1}, four{-1}, essentially_four{-1};
    ConnCache() = default;
    ConnCache(const ConnCache& o)
        : three(o.three.load()),
          four(o.four.load()),
          essentially_four(o.essentially_four.load()) {}
    ConnCache& operator=(const ConnCache& o) {
      three = o.three.load();
      four = o.four.load();
      essentially_four = o.essentially_four.load();
      return *this;
    }
  };
  ConnCache& conn_cache() const { return cache_; }

private:
  Embedding emb_;
  mutable ConnCache cache_;
};

// Result of removing an independent set of degree-3 vertices. Removing
// such a vertex merges its three incident triangles into one; the merged
// triangles are the non-empty faces of the result, all others also bound
// faces of the input ("empty"). Surviving vertices are re-indexed keeping
// their relative order.
struct VertexDeletion {
  Triangulation graph;
  std::vector<int> old_to_new;      // -1 for removed vertices
  std::vector<int> new_to_old;
  std::vector<bool> face_nonempty;  // per face of `graph`
};

VertexDeletion delete_independent_deg3(const Triangulation& t,
                                       const std::vector<int>& removed);

// "rot" interchange format. Line 1: `n m`; then one line `v: u1 u2 ... ud`
// per vertex giving the counterclockwise neighbor order. Ids are 0-based;
// `#` starts a comment; blank lines are ignored. write_rot emits vertices
// in increasing id order, so equal embeddings serialize to equal bytes.
Embedding read_rot(std::istream& in);
Embedding read_rot_file(const std::string& path);
void write_rot(std::ostream& out, const Embedding& e);
void write_rot_file(const std::string& path, const Embedding& e);

}  // namespace tricirc
