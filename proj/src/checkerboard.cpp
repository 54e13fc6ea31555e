#include "aaj/checkerboard.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace aaj {

int TaitGraph::vertex_of_face(int face) const {
  auto it = std::lower_bound(vertex_faces.begin(), vertex_faces.end(), face);
  return it != vertex_faces.end() && *it == face ? static_cast<int>(it - vertex_faces.begin()) : -1;
}

int TaitGraph::count(EdgeKind k) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [k](const TaitEdge& e) { return e.kind == k; }));
}

namespace {

// Face colors: 0 for the class of the unbounded face, 1 for the shaded one.
std::vector<int> face_colors(const LinkDiagram& d) {
  const FaceSet& fs = d.faces();
  const int nf = static_cast<int>(fs.faces.size());
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nf));
  for (const auto& cf : fs.corner_face) {
    auto link = [&](int a, int b, int parity) {
      adj[static_cast<std::size_t>(a)].emplace_back(b, parity);
      adj[static_cast<std::size_t>(b)].emplace_back(a, parity);
    };
    link(cf[0], cf[2], 0);
    link(cf[1], cf[3], 0);
    link(cf[0], cf[1], 1);
  }
  std::vector<int> color(static_cast<std::size_t>(nf), -1);
  std::vector<int> stack{fs.unbounded_face_index};
  color[static_cast<std::size_t>(fs.unbounded_face_index)] = 0;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (auto [g, p] : adj[static_cast<std::size_t>(f)]) {
      const int want = color[static_cast<std::size_t>(f)] ^ p;
      int& cg = color[static_cast<std::size_t>(g)];
      if (cg < 0) {
        cg = want;
        stack.push_back(g);
      } else if (cg != want) {
        throw InternalError("face adjacency is not two-colorable");
      }
    }
  }
  return color;
}

TaitGraph build_class(const LinkDiagram& d, const std::vector<int>& color, int cls) {
  const FaceSet& fs = d.faces();
  TaitGraph g;
  g.shaded = cls == 1;
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
    if (color[static_cast<std::size_t>(f)] == cls) g.vertex_faces.push_back(f);
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& cf = fs.corner_face[static_cast<std::size_t>(i)];
    const bool even_corners = color[static_cast<std::size_t>(cf[0])] == cls;
    const int fa = even_corners ? cf[0] : cf[1];
    const int fb = even_corners ? cf[2] : cf[3];
    g.edges.push_back({g.vertex_of_face(fa), g.vertex_of_face(fb), i,
                       even_corners ? EdgeKind::A : EdgeKind::B});
  }
  return g;
}

}  // namespace

TaitPair tait_graphs(const LinkDiagram& d) {
  const auto color = face_colors(d);
  TaitGraph shaded = build_class(d, color, 1);
  TaitGraph unshaded = build_class(d, color, 0);
  if (unshaded.count(EdgeKind::A) > shaded.count(EdgeKind::A)) return {unshaded, shaded};
  return {shaded, unshaded};
}

TaitPair tait_graphs(const LinkDiagram& d, int dealternator) {
  if (dealternator < 0 || dealternator >= d.crossing_count())
    throw IndexError("dealternator index out of range");
  const auto color = face_colors(d);
  TaitGraph shaded = build_class(d, color, 1);
  TaitGraph unshaded = build_class(d, color, 0);
  auto others_all_a = [&](const TaitGraph& g) {
    for (const auto& e : g.edges)
      if (e.crossing != dealternator && e.kind != EdgeKind::A) return false;
    return true;
  };
  const bool pick_unshaded =
      others_all_a(unshaded) && !others_all_a(shaded)
          ? true
          : (others_all_a(shaded) ? false
                                  : unshaded.edges[static_cast<std::size_t>(dealternator)].kind == EdgeKind::B);
  TaitPair out = pick_unshaded ? TaitPair{unshaded, shaded} : TaitPair{shaded, unshaded};
  out.g.dealternator = dealternator;
  out.gbar.dealternator = dealternator;
  return out;
}

bool has_cut_vertex(const TaitGraph& g) {
  const int n = g.vertex_count();
  if (n <= 2) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges)
    if (e.u != e.v) {
      adj[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  bool cut = false;
  std::function<void(int, int)> dfs = [&](int x, int parent) {
    disc[static_cast<std::size_t>(x)] = low[static_cast<std::size_t>(x)] = timer++;
    int children = 0;
    bool skipped_parent = false;
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (y == parent && !skipped_parent) {
        skipped_parent = true;
        continue;
      }
      if (disc[static_cast<std::size_t>(y)] >= 0) {
        low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], disc[static_cast<std::size_t>(y)]);
        continue;
      }
      ++children;
      dfs(y, x);
      low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], low[static_cast<std::size_t>(y)]);
      if (parent >= 0 && low[static_cast<std::size_t>(y)] >= disc[static_cast<std::size_t>(x)]) cut = true;
    }
    if (parent < 0 && children > 1) cut = true;
  };
  dfs(0, -1);
  return cut;
}

// ---- simplification ---------------------------------------------------------

SimplifiedGraph simplify_edges(int n, const std::vector<std::pair<int, int>>& edges,
                               std::optional<std::size_t> marked) {
  SimplifiedGraph s;
  s.vertex_count = n;
  s.mult.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::map<std::pair<int, int>, SimpleEdge> merged;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = edges[k];
    if (a < 0 || b < 0 || a >= n || b >= n) throw IndexError("edge endpoint out of range");
    if (a == b) {
      ++s.loops_removed;
      continue;
    }
    if (a > b) std::swap(a, b);
    auto [it, fresh] = merged.try_emplace({a, b}, SimpleEdge{a, b, 0, false});
    ++it->second.multiplicity;
    if (marked && *marked == k) it->second.dealternator = true;
    ++s.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    ++s.mult[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  }
  for (const auto& [key, e] : merged) s.edges.push_back(e);
  return s;
}

SimplifiedGraph simplify(const TaitGraph& g) {
  std::vector<std::pair<int, int>> edges;
  std::optional<std::size_t> marked;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    edges.emplace_back(g.edges[k].u, g.edges[k].v);
    if (g.dealternator && g.edges[k].crossing == *g.dealternator) marked = k;
  }
  return simplify_edges(g.vertex_count(), edges, marked);
}

GraphStats graph_stats(const SimplifiedGraph& g) {
  const int n = g.vertex_count;
  // connectivity
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  int reached = 0;
  if (n > 0) seen[0] = 1;
  while (!stack.empty() && n > 0) {
    const int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int y = 0; y < n; ++y)
      if (g.adjacent(x, y) && !seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
  }
  if (reached != n) throw SplitError("graph is disconnected");

  GraphStats st;
  st.v = n;
  st.e = static_cast<int>(g.edges.size());
  for (const auto& e : g.edges)
    if (e.multiplicity >= 2) ++st.mu;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) ++st.tau;
    }
  st.beta1 = st.e - st.v + 1;
  return st;
}

AAPathStats aa_path_stats(const SimplifiedGraph& g, int x1, int x2) {
  const int n = g.vertex_count;
  if (x1 < 0 || x2 < 0 || x1 >= n || x2 >= n) throw IndexError("marked vertex not in graph");
  if (x1 == x2) throw IndexError("marked vertices coincide");
  AAPathStats st;
  std::vector<int> common;
  for (int w = 0; w < n; ++w) {
    if (w == x1 || w == x2 || !g.adjacent(x1, w) || !g.adjacent(w, x2)) continue;
    common.push_back(w);
    ++st.P;
    const int multiple = (g.multiplicity(x1, w) >= 2) + (g.multiplicity(w, x2) >= 2);
    (multiple == 0 ? st.P0 : multiple == 1 ? st.P1 : st.P2)++;
  }
  for (int a = 0; a < n; ++a) {
    if (a == x1 || a == x2 || !g.adjacent(x1, a) || g.adjacent(a, x2)) continue;
    for (int b = 0; b < n; ++b) {
      if (b == x1 || b == x2 || b == a || !g.adjacent(a, b) || !g.adjacent(b, x2) || g.adjacent(b, x1))
        continue;
      ++st.Q;
    }
  }
  if (g.adjacent(x1, x2))
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        if (g.adjacent(common[i], common[j])) ++st.S;
  return st;
}

std::string dump(const TaitGraph& g) {
  std::ostringstream out;
  out << (g.shaded ? "shaded" : "unshaded") << " vertices=" << g.vertex_count()
      << " edges=" << g.edges.size();
  if (g.dealternator) out << " dealternator=" << *g.dealternator;
  out << '\n';
  // (neighbor, kind, dealternator) -> count
  std::vector<std::map<std::tuple<int, char, bool>, int>> rows(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& e : g.edges) {
    const bool dz = g.dealternator && *g.dealternator == e.crossing;
    const char k = e.kind == EdgeKind::A ? 'A' : 'B';
    ++rows[static_cast<std::size_t>(e.u)][{e.v, k, dz}];
    if (e.u != e.v) ++rows[static_cast<std::size_t>(e.v)][{e.u, k, dz}];
  }
  for (int x = 0; x < g.vertex_count(); ++x) {
    out << x << " (face " << g.vertex_faces[static_cast<std::size_t>(x)] << "):";
    for (const auto& [key, cnt] : rows[static_cast<std::size_t>(x)]) {
      const auto& [y, k, dz] = key;
      out << ' ' << y << ':' << k << (dz ? "!" : "") << 'x' << cnt;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace aaj
