// Seven families of Gbar graphs. Vertex 0 is v1, vertex 1 is v2 and the
// dealternator joins them. Integer labels are edge multiplicities; a label
// vector stands for a path with one edge per entry.

#include <string>

#include "aaj/aa.hpp"

namespace aaj {

namespace {

class Builder {
 public:
  explicit Builder(FamilyGraph& g) : g_(g) { g_.vertex_count = 2; }
  int vertex() { return g_.vertex_count++; }
  void edge(int u, int v, int label) { g_.edges.push_back({u, v, label, false}); }
  void dealternator() { g_.edges.push_back({0, 1, 1, true}); }
  void path(int from, int to, const std::vector<int>& labels) {
    int cur = from;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const int next = k + 1 == labels.size() ? to : vertex();
      edge(cur, next, labels[k]);
      cur = next;
    }
  }

 private:
  FamilyGraph& g_;
};

void require(bool ok, int id, const std::string& what) {
  if (!ok) throw ParamError("family " + std::to_string(id) + ": " + what);
}

void require_labels(const std::vector<int>& v, int id, const char* name) {
  for (int x : v) require(x >= 1, id, std::string(name) + " entries must be >= 1");
}

// Fan shared by families 1-3: hub joined to each w_k by a_k, w_k to v2 by b_k.
// Returns the hub and the last fan vertex w_n.
std::pair<int, int> fan(Builder& b, const FamilyParams& p) {
  const int hub = b.vertex();
  int last = -1;
  for (std::size_t k = 0; k < p.a_vec.size(); ++k) {
    last = b.vertex();
    b.edge(hub, last, p.a_vec[k]);
    b.edge(last, 1, p.b_vec[k]);
  }
  return {hub, last};
}

}  // namespace

FamilyGraph family_graph(int id, const FamilyParams& p) {
  require(id >= 1 && id <= 7, id, "id must be 1..7");
  FamilyGraph g;
  g.family_id = id;
  g.params = p;
  Builder b(g);
  require(p.a >= 1 && p.b >= 1 && p.c >= 1, id, "scalar labels must be >= 1");
  require_labels(p.a_vec, id, "a");
  require_labels(p.b_vec, id, "b");

  if (id <= 3) {
    require(!p.a_vec.empty() && p.a_vec.size() == p.b_vec.size(), id,
            "a and b must be nonempty and of equal length");
    const auto [hub, last] = fan(b, p);
    if (id == 1) {
      b.edge(0, hub, 1);
      b.path(0, 1, {1, 1, p.c});
    } else if (id == 2) {
      b.edge(0, hub, p.c);
    } else {
      b.edge(0, hub, 1);
      b.path(0, last, {1, p.c});
    }
  } else {
    // Square v1 - top - v2 - bottom - v1.
    const int top = b.vertex();
    const int bottom = b.vertex();
    b.edge(0, top, 1);
    b.edge(0, bottom, 1);
    b.edge(top, 1, 1);
    switch (id) {
      case 4:
        require(p.a >= 2, id, "a must be >= 2 for the captioned counts");
        b.edge(1, bottom, p.a);
        break;
      case 5:
        require(p.a_vec.size() >= 2, id, "a must have length >= 2");
        b.edge(1, bottom, 1);
        b.path(top, 1, p.a_vec);
        break;
      case 6:
        require(p.b >= 2, id, "b must be >= 2 for the captioned counts");
        b.edge(1, bottom, p.b);
        b.edge(top, bottom, p.a);
        break;
      case 7:
        require(p.b_vec.size() >= 2, id, "b must have length >= 2");
        b.edge(1, bottom, 1);
        b.path(top, 1, p.b_vec);
        b.edge(top, bottom, p.a);
        break;
    }
  }
  b.dealternator();
  return g;
}

SimplifiedGraph simplify(const FamilyGraph& g) {
  std::vector<std::pair<int, int>> edges;
  std::optional<std::size_t> marked;
  for (const auto& e : g.edges) {
    if (e.dealternator) marked = edges.size();
    for (int k = 0; k < e.label; ++k) edges.emplace_back(e.u, e.v);
  }
  return simplify_edges(g.vertex_count, edges, marked);
}

bool family_equations_hold(int id, const GraphStats& s, const AAPathStats& p) {
  if (id >= 1 && id <= 3) return p.P == 0 && p.Q == s.beta1;
  static const int caption[8][2] = {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}};
  if (id < 4 || id > 7) return false;
  return p.S == caption[id][0] && p.P0 == caption[id][1] && s.beta1 == p.P0 + p.S + 1;
}

FamilyCheck family_check(const FamilyGraph& g) {
  const SimplifiedGraph s = simplify(g);
  FamilyCheck out;
  out.stats = graph_stats(s);
  out.path = aa_path_stats(s, g.v1, g.v2);
  out.holds = family_equations_hold(g.family_id, out.stats, out.path);
  return out;
}

}  // namespace aaj
