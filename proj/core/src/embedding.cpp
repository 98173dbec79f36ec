#include "tricirc/embedding.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tricirc {

namespace {

std::string vee(int v) { return std::to_string(v); }

}  // namespace

Embedding Embedding::from_rotation(int n, std::vector<std::vector<int>> rot) {
  if (n <= 0 || static_cast<int>(rot.size()) != n)
    throw InconsistentRotation("rotation list count does not match n=" + vee(n));

  Embedding e;
  e.n_ = n;
  e.rot_ = std::move(rot);
  e.rot_pos_.assign((size_t)n * n, -1);

  long long deg_sum = 0;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < (int)e.rot_[v].size(); ++i) {
      int u = e.rot_[v][i];
      if (u < 0 || u >= n)
        throw InconsistentRotation("vertex " + vee(v) + " lists out-of-range neighbor " + vee(u));
      if (u == v) throw InconsistentRotation("loop at vertex " + vee(v));
      if (e.rot_pos_[(size_t)v * n + u] != -1)
        throw InconsistentRotation("vertex " + vee(v) + " lists neighbor " + vee(u) + " twice");
      e.rot_pos_[(size_t)v * n + u] = i;
    }
    deg_sum += (long long)e.rot_[v].size();
  }
  for (int v = 0; v < n; ++v)
    for (int u : e.rot_[v])
      if (e.rot_pos_[(size_t)u * n + v] < 0)
        throw InconsistentRotation("edge " + vee(v) + "-" + vee(u) + " missing from rotation of " + vee(u));
  e.m_ = static_cast<int>(deg_sum / 2);

  // connectivity
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : e.rot_[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++cnt;
          stack.push_back(u);
        }
    }
    if (cnt != n) throw Disconnected("graph has " + vee(n - cnt) + " unreachable vertices");
  }

  e.trace_faces();

  if (n > 1) {
    long long euler = (long long)n - e.m_ + (long long)e.faces_.size();
    if (euler != 2)
      throw NotPlanarGenus("n - m + f = " + std::to_string(euler) + " (need 2); rotation system is not spherical");
  }
  return e;
}

void Embedding::trace_faces() {
  dir_face_.assign((size_t)n_ * n_, -1);
  faces_.clear();
  for (int a = 0; a < n_; ++a) {
    for (int b : rot_[a]) {
      if (dir_face_[(size_t)a * n_ + b] != -1) continue;
      Face f;
      int fid = static_cast<int>(faces_.size());
      int u = a, v = b;
      do {
        f.push_back(u);
        dir_face_[(size_t)u * n_ + v] = fid;
        int i = rot_index(v, u);
        int d = degree(v);
        int w = rot_[v][(i - 1 + d) % d];  // predecessor of u in rot[v]
        u = v;
        v = w;
      } while (!(u == a && v == b));
      faces_.push_back(std::move(f));
    }
  }
}

int Embedding::face_left_of(int u, int v) const {
  int f = dir_face_[(size_t)u * n_ + v];
  if (f < 0) throw Error("NoSuchEdge", "no directed edge " + vee(u) + "->" + vee(v));
  return f;
}

int Embedding::face_with_vertices(std::array<int, 3> tri) const {
  std::sort(tri.begin(), tri.end());
  if (tri[0] == tri[1] || tri[1] == tri[2]) return -1;
  if (tri[0] < 0 || tri[2] >= n_) return -1;
  // Only triangular faces can match a vertex triple.
  if (!adjacent(tri[0], tri[1]) || !adjacent(tri[1], tri[2])) return -1;
  int f = dir_face_[(size_t)tri[0] * n_ + tri[1]];
  auto matches = [&](int fid) {
    if (fid < 0 || faces_[fid].size() != 3) return false;
    std::array<int, 3> s{faces_[fid][0], faces_[fid][1], faces_[fid][2]};
    std::sort(s.begin(), s.end());
    return s == tri;
  };
  if (matches(f)) return f;
  f = dir_face_[(size_t)tri[1] * n_ + tri[0]];
  if (matches(f)) return f;
  return -1;
}

bool is_maximal_planar(const Embedding& e) {
  if (e.vertex_count() < 3) return false;
  for (const Face& f : e.faces())
    if (f.size() != 3) return false;
  return true;
}

Triangulation::Triangulation(Embedding e) : emb_(std::move(e)) {
  if (!is_maximal_planar(emb_))
    throw NotPlanarGenus("not a triangulation: some traced face is not a triangle");
}

VertexDeletion delete_independent_deg3(const Triangulation& t,
                                       const std::vector<int>& removed) {
  const Embedding& e = t.emb();
  const int n = e.vertex_count();
  std::vector<char> gone(n, 0);
  for (int x : removed) {
    if (x < 0 || x >= n || gone[x])
      throw NotIndependent("bad or repeated vertex " + vee(x) + " in deletion set");
    gone[x] = 1;
  }
  for (int x : removed) {
    if (e.degree(x) != 3)
      throw WrongDegree("vertex " + vee(x) + " has degree " + vee(e.degree(x)) + ", need 3");
    for (int u : e.neighbors(x))
      if (gone[u])
        throw NotIndependent("deletion set contains adjacent vertices " + vee(x) + " and " + vee(u));
  }

  std::vector<int> old_to_new(n, -1), new_to_old;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) {
      old_to_new[v] = static_cast<int>(new_to_old.size());
      new_to_old.push_back(v);
    }

  const int nn = static_cast<int>(new_to_old.size());
  std::vector<std::vector<int>> rot(nn);
  for (int v = 0; v < n; ++v) {
    if (gone[v]) continue;
    auto& list = rot[old_to_new[v]];
    for (int u : e.neighbors(v))
      if (!gone[u]) list.push_back(old_to_new[u]);
  }

  VertexDeletion out{Triangulation(Embedding::from_rotation(nn, std::move(rot))),
                     std::move(old_to_new), std::move(new_to_old), {}};
  out.face_nonempty.assign(out.graph.faces().size(), false);
  for (int x : removed) {
    std::array<int, 3> tri{};
    int i = 0;
    for (int u : e.neighbors(x)) tri[i++] = out.old_to_new[u];
    int f = out.graph.emb().face_with_vertices(tri);
    if (f < 0)
      throw Error("Internal", "deleted vertex " + vee(x) + " left no merged face");
    if (out.face_nonempty[f])
      throw Error("Internal", "two deleted vertices share the merged face " + vee(f));
    out.face_nonempty[f] = true;
  }
  return out;
}

// ---- rot format ----

Embedding read_rot(std::istream& in) {
  auto next_data_line = [&](std::string& line) -> bool {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };

  std::string line;
  if (!next_data_line(line)) throw FormatError("empty rot input");
  std::istringstream head(line);
  int n = 0, m = 0;
  if (!(head >> n >> m) || n <= 0) throw FormatError("bad header line: '" + line + "'");

  std::vector<std::vector<int>> rot(n);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!next_data_line(line)) throw FormatError("expected " + vee(n) + " vertex lines, got " + vee(i));
    std::replace(line.begin(), line.end(), ':', ' ');
    std::istringstream row(line);
    int v;
    if (!(row >> v) || v < 0 || v >= n) throw FormatError("bad vertex id in line: '" + line + "'");
    if (seen[v]) throw FormatError("vertex " + vee(v) + " listed twice");
    seen[v] = 1;
    int u;
    while (row >> u) rot[v].push_back(u);
  }

  Embedding e = Embedding::from_rotation(n, std::move(rot));
  if (e.edge_count() != m)
    throw FormatError("header says m=" + vee(m) + " but rotations give m=" + vee(e.edge_count()));
  return e;
}

Embedding read_rot_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_rot(in);
}

void write_rot(std::ostream& out, const Embedding& e) {
  out << e.vertex_count() << ' ' << e.edge_count() << '\n';
  for (int v = 0; v < e.vertex_count(); ++v) {
    out << v << ':';
    for (int u : e.neighbors(v)) out << ' ' << u;
    out << '\n';
  }
}

void write_rot_file(const std::string& path, const Embedding& e) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  write_rot(out, e);
  if (!out) throw FormatError("write to '" + path + "' failed");
}

}  // namespace tricirc
