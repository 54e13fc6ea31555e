#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

int max_label(const std::vector<std::array<int, 4>>& xs) {
  int m = 0;
  for (const auto& x : xs)
    for (int a : x) m = std::max(m, a);
  return m;
}

Poly multiply(const Poly& p, const Poly& q) {
  Poly r;
  for (auto [e1, c1] : p)
    for (auto [e2, c2] : q) r[e1 + e2] += c1 * c2;
  std::erase_if(r, [](const auto& t) { return t.second == 0; });
  return r;
}

}  // namespace

int state_loops(const std::vector<std::array<int, 4>>& xs, std::uint64_t mask) {
  const int n = max_label(xs) + 1;
  UnionFind uf(n);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& [a, b, c, d] = xs[i];
    for (int x : xs[i]) used[static_cast<std::size_t>(x)] = 1;
    if (mask >> i & 1) {
      uf.unite(a, d);
      uf.unite(b, c);
    } else {
      uf.unite(a, b);
      uf.unite(c, d);
    }
  }
  int loops = 0;
  for (int x = 0; x < n; ++x)
    if (used[static_cast<std::size_t>(x)] && uf.find(x) == x) ++loops;
  return loops;
}

Poly bracket(const std::vector<std::array<int, 4>>& xs, int loops) {
  const int c = static_cast<int>(xs.size());
  if (c > 24) throw std::runtime_error("oracle bracket: too many crossings");
  // sum over states of A^(a-b) d^(|S|+loops-1), d = -A^2 - A^-2
  std::map<std::pair<int, int>, long long> hist;  // (a-b, |S|) -> count
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    const int b = std::popcount(mask);
    hist[{c - 2 * b, state_loops(xs, mask)}] += 1;
  }
  const Poly delta = {{-2, -1}, {2, -1}};
  std::vector<Poly> dpow = {{{0, 1}}};
  Poly out;
  for (auto [key, count] : hist) {
    const int k = key.second + loops - 1;
    while (static_cast<int>(dpow.size()) <= k) dpow.push_back(multiply(dpow.back(), delta));
    for (auto [e, coef] : dpow[static_cast<std::size_t>(k)]) out[e + key.first] += coef * count;
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

int writhe_consecutive(const std::vector<std::array<int, 4>>& xs) {
  const int n = max_label(xs) + 1;
  UnionFind uf(n);
  for (const auto& [a, b, c, d] : xs) {
    uf.unite(a, c);
    uf.unite(b, d);
  }
  std::vector<int> lo(static_cast<std::size_t>(n), n), hi(static_cast<std::size_t>(n), 0);
  for (const auto& x : xs)
    for (int a : x) {
      const auto r = static_cast<std::size_t>(uf.find(a));
      lo[r] = std::min(lo[r], a);
      hi[r] = std::max(hi[r], a);
    }
  auto succ = [&](int a) {
    const auto r = static_cast<std::size_t>(uf.find(a));
    return a == hi[r] ? lo[r] : a + 1;
  };
  int w = 0;
  for (const auto& [a, b, c, d] : xs) {
    if (succ(a) != c) throw std::runtime_error("oracle writhe: labels are not consecutive");
    w += succ(d) == b ? 1 : -1;
  }
  return w;
}

PathCounts path_counts(const std::vector<std::vector<int>>& m, int x1, int x2) {
  const int n = static_cast<int>(m.size());
  auto adj = [&](int a, int b) { return a != b && m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] > 0; };
  auto multi = [&](int a, int b) { return m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= 2; };
  auto both = [&](int w) { return adj(w, x1) && adj(w, x2); };
  PathCounts r;
  for (int a = 0; a < n; ++a) {
    if (a == x1 || a == x2) continue;
    if (adj(x1, a) && adj(a, x2)) {
      ++r.P;
      const int k = int(multi(x1, a)) + int(multi(a, x2));
      (k == 0 ? r.P0 : k == 1 ? r.P1 : r.P2) += 1;
    }
    for (int b = 0; b < n; ++b) {
      if (b == x1 || b == x2 || b == a) continue;
      if (adj(x1, a) && adj(a, b) && adj(b, x2) && !both(a) && !both(b)) ++r.Q;
      if (b > a && adj(x1, x2) && both(a) && both(b) && adj(a, b)) ++r.S;
    }
  }
  return r;
}

Stats graph_counts(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  auto adj = [&](int a, int b) { return a != b && m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] > 0; };
  Stats s;
  s.v = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!adj(a, b)) continue;
      ++s.e;
      if (m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= 2) ++s.mu;
      for (int c = b + 1; c < n; ++c)
        if (adj(a, c) && adj(b, c)) ++s.tau;
    }
  s.beta1 = s.e - s.v + 1;
  return s;
}

// ---- random plane graphs --------------------------------------------------------

namespace {

// Darts 2e and 2e+1 are the two halves of edge e; sigma is the counterclockwise
// successor around the dart's vertex.
struct PlaneGraph {
  std::vector<int> vertex, sigma, sigma_inv;
  int vertices = 0;

  int edges() const { return static_cast<int>(vertex.size()) / 2; }

  // Adds an edge with its ends inserted after darts `after_u` and `after_v`;
  // -1 makes that end the only dart at its vertex.
  std::pair<int, int> add_edge(int u, int after_u, int v, int after_v) {
    const int x = static_cast<int>(vertex.size());
    vertex.push_back(u);
    vertex.push_back(v);
    sigma.resize(vertex.size());
    sigma_inv.resize(vertex.size());
    insert(x, after_u);
    insert(x + 1, after_v);
    return {x, x + 1};
  }

  void insert(int x, int after) {
    if (after < 0) {
      sigma[static_cast<std::size_t>(x)] = sigma_inv[static_cast<std::size_t>(x)] = x;
      return;
    }
    const int next = sigma[static_cast<std::size_t>(after)];
    sigma[static_cast<std::size_t>(after)] = x;
    sigma_inv[static_cast<std::size_t>(x)] = after;
    sigma[static_cast<std::size_t>(x)] = next;
    sigma_inv[static_cast<std::size_t>(next)] = x;
  }

  // Corners of the face containing the corner that starts at dart d.
  std::vector<int> face(int d) const {
    std::vector<int> out;
    int x = d;
    do {
      out.push_back(x);
      x = sigma_inv[static_cast<std::size_t>(x ^ 1)];
    } while (x != d);
    return out;
  }
};

PlaneGraph random_plane_graph(std::mt19937& rng, int target) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  PlaneGraph g;
  const int k = pick(2, std::max(2, std::min(target, 4)));
  g.vertices = k;
  // cycle 0 - 1 - ... - k-1 - 0
  std::vector<int> first(static_cast<std::size_t>(k), -1);
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    auto [x, y] = g.add_edge(i, first[static_cast<std::size_t>(i)], j, first[static_cast<std::size_t>(j)]);
    if (first[static_cast<std::size_t>(i)] < 0) first[static_cast<std::size_t>(i)] = x;
    if (first[static_cast<std::size_t>(j)] < 0) first[static_cast<std::size_t>(j)] = y;
  }
  while (g.edges() < target) {
    const int d = pick(0, static_cast<int>(g.vertex.size()) - 1);
    const std::vector<int> f = g.face(d);
    std::vector<int> others;
    for (int x : f)
      if (x != d) others.push_back(x);
    const int d2 = others[static_cast<std::size_t>(pick(0, static_cast<int>(others.size()) - 1))];
    const int u = g.vertex[static_cast<std::size_t>(d)], v = g.vertex[static_cast<std::size_t>(d2)];
    const int room = target - g.edges();
    const bool chord = u != v && (room == 1 || pick(0, 2) > 0);
    if (chord) {
      g.add_edge(u, d, v, d2);
      continue;
    }
    if (room < 2) continue;
    const int m = pick(1, std::min(room - 1, 3));
    int prev_vertex = u, prev_after = d;
    for (int s = 0; s < m; ++s) {
      const int w = g.vertices++;
      auto [x, y] = g.add_edge(prev_vertex, prev_after, w, -1);
      (void)x;
      prev_vertex = w;
      prev_after = y;
    }
    g.add_edge(prev_vertex, prev_after, v, d2);
  }
  return g;
}

}  // namespace

aaj::LinkDiagram random_alternating(std::mt19937& rng, int edges) {
  const PlaneGraph g = random_plane_graph(rng, edges);
  const int c = g.edges();
  aaj::PlanarMap map;
  map.partner.assign(static_cast<std::size_t>(4 * c), -1);
  // Crossing e sits at the midpoint of edge e; slots counterclockwise are the
  // corners NE, NW, SW, SE with dart 2e pointing east.
  for (int x = 0; x < 2 * c; ++x) {
    const int y = g.sigma[static_cast<std::size_t>(x)];
    const int s1 = 4 * (x / 2) + (x % 2 == 0 ? 1 : 3);
    const int s2 = 4 * (y / 2) + (y % 2 == 0 ? 2 : 0);
    map.partner[static_cast<std::size_t>(s1)] = s2;
    map.partner[static_cast<std::size_t>(s2)] = s1;
  }
  const int axis = std::uniform_int_distribution<int>(0, 1)(rng);
  map.under_axis.assign(static_cast<std::size_t>(c), axis);
  return aaj::LinkDiagram::from_planar_map(map);
}

aaj::LinkDiagram random_almost_alternating(std::mt19937& rng, int edges) {
  const aaj::LinkDiagram d = random_alternating(rng, edges);
  const int i = std::uniform_int_distribution<int>(0, d.crossing_count() - 1)(rng);
  return aaj::flip_crossing(d, i);
}

}  // namespace oracle
