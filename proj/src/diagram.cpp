#include "aaj/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "aaj/checkerboard.hpp"

namespace aaj {

namespace {

PdTuple rotate(const PdTuple& t, int k) {
  return {t[(k + 0) % 4], t[(k + 1) % 4], t[(k + 2) % 4], t[(k + 3) % 4]};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

/// Two slots per label, in order of appearance.
std::map<Arc, std::vector<Slot>> slots_by_label(const std::vector<PdTuple>& xs) {
  std::map<Arc, std::vector<Slot>> at;
  for (int i = 0; i < static_cast<int>(xs.size()); ++i)
    for (int s = 0; s < 4; ++s) {
      const Arc a = xs[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
      if (a <= 0) throw ValidationError("arc labels must be positive, got " + std::to_string(a));
      at[a].push_back({i, s});
    }
  for (const auto& [a, v] : at)
    if (v.size() != 2)
      throw ValidationError("arc " + std::to_string(a) + " appears " +
                            std::to_string(v.size()) + " times, expected 2");
  return at;
}

Slot other_of(const std::vector<Slot>& pair, Slot s) {
  return pair[0] == s ? pair[1] : pair[0];
}

// Undirected strand tracing. Returns for each crossing the slot where the
// strand enters the under passage (0 or 2) and over passage (1 or 3), for
// the orientation derived from the tuples; components are in order of
// their smallest label.
struct Derived {
  std::vector<int> under_in, over_in;
  std::vector<std::vector<int>> passages;  // per component: crossing ids
};

Derived derive_orientation(const std::vector<PdTuple>& xs,
                           const std::map<Arc, std::vector<Slot>>& at,
                           const std::vector<int>& reversed) {
  const int c = static_cast<int>(xs.size());
  Derived out;
  out.under_in.assign(static_cast<std::size_t>(c), -1);
  out.over_in.assign(static_cast<std::size_t>(c), -1);
  std::map<Arc, bool> seen;
  int comp = 0;
  for (const auto& [start, ends] : at) {
    if (seen[start]) continue;
    // Walk: travel along `arc` into slot `e`, pass through the crossing.
    struct Step { Slot enter; Arc arc; };
    std::vector<Step> walk;
    Arc arc = start;
    Slot e = ends[1];
    do {
      seen[arc] = true;
      walk.push_back({e, arc});
      const Slot exit{e.crossing, (e.slot + 2) % 4};
      arc = xs[static_cast<std::size_t>(exit.crossing)][static_cast<std::size_t>(exit.slot)];
      e = other_of(at.at(arc), exit);
    } while (!(arc == start && e == ends[1]));

    int fwd = 0, bwd = 0;
    for (const auto& st : walk) {
      if (st.enter.slot == 0) ++fwd;
      if (st.enter.slot == 2) ++bwd;
    }
    if (fwd && bwd)
      throw ValidationError("component through arc " + std::to_string(start) +
                            " runs against the under-strand convention");
    bool forward;
    if (fwd || bwd) {
      forward = fwd > 0;
    } else {
      const std::size_t n = walk.size();
      const Arc next_fwd = walk[1 % n].arc;
      const Arc next_bwd = walk[n - 1].arc;
      if (next_fwd != next_bwd) {
        forward = next_fwd < next_bwd;
      } else {
        // Two arcs: start the smallest label at the smaller crossing tuple.
        const PdTuple& tail_fwd = xs[static_cast<std::size_t>(walk[n - 1].enter.crossing)];
        const PdTuple& tail_bwd = xs[static_cast<std::size_t>(walk[0].enter.crossing)];
        forward = !(tail_bwd < tail_fwd);
      }
    }
    if (std::find(reversed.begin(), reversed.end(), comp) != reversed.end()) forward = !forward;

    std::vector<int> crossings_seen;
    for (const auto& st : walk) {
      const int x = st.enter.crossing;
      const int in = forward ? st.enter.slot : (st.enter.slot + 2) % 4;
      if (in % 2 == 0)
        out.under_in[static_cast<std::size_t>(x)] = in;
      else
        out.over_in[static_cast<std::size_t>(x)] = in;
      crossings_seen.push_back(x);
    }
    out.passages.push_back(std::move(crossings_seen));
    ++comp;
  }
  for (int r : reversed)
    if (r < 0 || r >= comp)
      throw IndexError("reverse index " + std::to_string(r) + " out of range (" +
                       std::to_string(comp) + " components)");
  return out;
}

}  // namespace

// ---- construction -----------------------------------------------------------

LinkDiagram LinkDiagram::from_pd(const std::vector<PdTuple>& crossings, int loops,
                                 const std::vector<int>& reversed) {
  const auto at = slots_by_label(crossings);
  const Derived der = derive_orientation(crossings, at, reversed);
  std::vector<PdTuple> xs(crossings.size());
  std::vector<int> over_in(crossings.size());
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const bool rot = der.under_in[i] == 2;
    xs[i] = rot ? rotate(crossings[i], 2) : crossings[i];
    over_in[i] = rot ? (der.over_in[i] + 2) % 4 : der.over_in[i];
  }
  return from_oriented_pd(xs, over_in, loops);
}

LinkDiagram LinkDiagram::from_oriented_pd(const std::vector<PdTuple>& crossings,
                                          const std::vector<int>& over_in,
                                          int loops) {
  if (loops < 0) throw ValidationError("negative loop count");
  if (crossings.empty() && loops == 0) throw ValidationError("empty diagram");
  if (over_in.size() != crossings.size()) throw InternalError("over_in size mismatch");
  const auto at = slots_by_label(crossings);

  std::map<Arc, Slot> head, tail;
  auto put = [&](std::map<Arc, Slot>& m, Arc a, Slot s, const char* what) {
    if (!m.emplace(a, s).second)
      throw ValidationError("arc " + std::to_string(a) + " has two " + what +
                            "s; orientation is inconsistent");
  };
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
    const int o = over_in[static_cast<std::size_t>(i)];
    if (o != 1 && o != 3) throw InternalError("over_in must be 1 or 3");
    const PdTuple& t = crossings[static_cast<std::size_t>(i)];
    put(head, t[0], {i, 0}, "head");
    put(tail, t[2], {i, 2}, "tail");
    put(head, t[static_cast<std::size_t>(o)], {i, o}, "head");
    put(tail, t[static_cast<std::size_t>((o + 2) % 4)], {i, (o + 2) % 4}, "tail");
  }

  // Relabel: components in order of smallest label, each starting there.
  std::map<Arc, Arc> relabel;
  Arc next = 1;
  for (const auto& [start, ends] : at) {
    if (relabel.count(start)) continue;
    Arc a = start;
    do {
      relabel[a] = next++;
      const Slot h = head.at(a);
      a = crossings[static_cast<std::size_t>(h.crossing)][static_cast<std::size_t>((h.slot + 2) % 4)];
    } while (a != start);
  }

  LinkDiagram d;
  d.crossings_.reserve(crossings.size());
  for (const auto& t : crossings)
    d.crossings_.push_back({relabel[t[0]], relabel[t[1]], relabel[t[2]], relabel[t[3]]});
  d.over_in_ = over_in;
  d.loops_ = loops;
  d.finish();
  return d;
}

LinkDiagram LinkDiagram::from_planar_map(const PlanarMap& map) {
  const int c = static_cast<int>(map.under_axis.size());
  if (static_cast<int>(map.partner.size()) != 4 * c) throw InternalError("planar map size mismatch");
  std::vector<int> label(static_cast<std::size_t>(4 * c), 0);
  std::vector<char> is_head(static_cast<std::size_t>(4 * c), 0);
  Arc next = 1;
  for (int g = 0; g < 4 * c; ++g) {
    if (label[static_cast<std::size_t>(g)]) continue;
    int t = g;
    do {
      const int h = map.partner[static_cast<std::size_t>(t)];
      if (h < 0 || h >= 4 * c || map.partner[static_cast<std::size_t>(h)] != t)
        throw InternalError("planar map partner is not an involution");
      label[static_cast<std::size_t>(t)] = label[static_cast<std::size_t>(h)] = next++;
      is_head[static_cast<std::size_t>(h)] = 1;
      t = 4 * (h / 4) + (h % 4 + 2) % 4;
    } while (t != g);
  }
  std::vector<PdTuple> xs(static_cast<std::size_t>(c));
  std::vector<int> over_in(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) {
    const int u = map.under_axis[static_cast<std::size_t>(i)];
    const int under_in = is_head[static_cast<std::size_t>(4 * i + u)] ? u : u + 2;
    const int over_raw = is_head[static_cast<std::size_t>(4 * i + u + 1)] ? u + 1 : (u + 3) % 4;
    PdTuple raw;
    for (int s = 0; s < 4; ++s) raw[static_cast<std::size_t>(s)] = label[static_cast<std::size_t>(4 * i + s)];
    xs[static_cast<std::size_t>(i)] = rotate(raw, under_in);
    over_in[static_cast<std::size_t>(i)] = (over_raw - under_in + 4) % 4;
  }
  return from_oriented_pd(xs, over_in, map.unknotted_loops);
}

void LinkDiagram::finish() {
  const int c = crossing_count();
  const int n = 2 * c;
  tails_.assign(static_cast<std::size_t>(n + 1), Slot{});
  heads_.assign(static_cast<std::size_t>(n + 1), Slot{});
  for (int i = 0; i < c; ++i) {
    const PdTuple& t = crossings_[static_cast<std::size_t>(i)];
    const int o = over_in_[static_cast<std::size_t>(i)];
    heads_[static_cast<std::size_t>(t[0])] = {i, 0};
    tails_[static_cast<std::size_t>(t[2])] = {i, 2};
    heads_[static_cast<std::size_t>(t[static_cast<std::size_t>(o)])] = {i, o};
    tails_[static_cast<std::size_t>(t[static_cast<std::size_t>((o + 2) % 4)])] = {i, (o + 2) % 4};
  }

  components_.clear();
  component_of_.assign(static_cast<std::size_t>(n + 1), -1);
  for (Arc s = 1; s <= n; ++s) {
    if (component_of_[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Arc> comp;
    Arc a = s;
    do {
      component_of_[static_cast<std::size_t>(a)] = static_cast<int>(components_.size());
      comp.push_back(a);
      const Slot h = heads_[static_cast<std::size_t>(a)];
      a = arc_at({h.crossing, (h.slot + 2) % 4});
    } while (a != s);
    components_.push_back(std::move(comp));
  }

  UnionFind uf(c);
  for (Arc a = 1; a <= n; ++a)
    uf.unite(tails_[static_cast<std::size_t>(a)].crossing, heads_[static_cast<std::size_t>(a)].crossing);
  std::map<int, int> block_id;
  block_of_crossing_.assign(static_cast<std::size_t>(c), 0);
  for (int i = 0; i < c; ++i) {
    auto [it, _] = block_id.emplace(uf.find(i), static_cast<int>(block_id.size()));
    block_of_crossing_[static_cast<std::size_t>(i)] = it->second;
  }
  block_count_ = static_cast<int>(block_id.size());

  // Faces: orbits of corner -> other end of the next arm.
  faces_ = FaceSet{};
  faces_.corner_face.assign(static_cast<std::size_t>(c), {-1, -1, -1, -1});
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < 4; ++k) {
      if (faces_.corner_face[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] >= 0) continue;
      const int id = static_cast<int>(faces_.faces.size());
      Face f;
      Slot cur{i, k};
      do {
        faces_.corner_face[static_cast<std::size_t>(cur.crossing)][static_cast<std::size_t>(cur.slot)] = id;
        f.corners.push_back(cur);
        const Slot arm{cur.crossing, (cur.slot + 1) % 4};
        const Arc a = arc_at(arm);
        f.incidences.emplace_back(a, tails_[static_cast<std::size_t>(a)] == arm ? Side::Right : Side::Left);
        cur = other_end(arm);
      } while (!(cur == Slot{i, k}));
      faces_.faces.push_back(std::move(f));
    }
  std::vector<int> faces_per_block(static_cast<std::size_t>(block_count_), 0);
  std::vector<int> crossings_per_block(static_cast<std::size_t>(block_count_), 0);
  for (const Face& f : faces_.faces)
    ++faces_per_block[static_cast<std::size_t>(block_of_crossing_[static_cast<std::size_t>(f.corners[0].crossing)])];
  for (int i = 0; i < c; ++i) ++crossings_per_block[static_cast<std::size_t>(block_of_crossing_[static_cast<std::size_t>(i)])];
  for (int b = 0; b < block_count_; ++b)
    if (faces_per_block[static_cast<std::size_t>(b)] != crossings_per_block[static_cast<std::size_t>(b)] + 2)
      throw ValidationError("non-planar PD code: " + std::to_string(faces_per_block[static_cast<std::size_t>(b)]) +
                            " faces for " + std::to_string(crossings_per_block[static_cast<std::size_t>(b)]) +
                            " crossings");
  if (c > 0) {
    const Slot t1 = tails_[1];
    faces_.unbounded_face_index =
        faces_.corner_face[static_cast<std::size_t>(t1.crossing)][static_cast<std::size_t>(t1.slot)];
  }
}

Slot LinkDiagram::other_end(Slot s) const {
  const Arc a = arc_at(s);
  const Slot t = tails_[static_cast<std::size_t>(a)];
  return t == s ? heads_[static_cast<std::size_t>(a)] : t;
}

const FaceSet& LinkDiagram::faces() const {
  if (!is_connected_nontrivial())
    throw SplitError("faces need a connected diagram with at least one crossing");
  return faces_;
}

bool operator==(const LinkDiagram& x, const LinkDiagram& y) {
  if (x.loops_ != y.loops_ || x.crossings_.size() != y.crossings_.size()) return false;
  auto keyed = [](const LinkDiagram& d) {
    std::vector<std::pair<PdTuple, int>> v;
    for (std::size_t i = 0; i < d.crossings_.size(); ++i) v.emplace_back(d.crossings_[i], d.over_in_[i]);
    std::sort(v.begin(), v.end());
    return v;
  };
  return keyed(x) == keyed(y);
}

// ---- text format ------------------------------------------------------------

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view s) : s_(s) {}

  LinkDiagram run() {
    std::vector<PdTuple> xs;
    std::vector<int> reversed;
    int loops = 0;
    bool have_loops = false;
    while (true) {
      skip_separators();
      if (at_end()) break;
      if (peek() == 'X') {
        get();
        expect('[');
        PdTuple t;
        for (int k = 0; k < 4; ++k) {
          if (k) expect(',');
          t[static_cast<std::size_t>(k)] = static_cast<Arc>(integer());
        }
        expect(']');
        xs.push_back(t);
      } else if (keyword("loops=")) {
        if (have_loops) fail("duplicate loops= header");
        have_loops = true;
        loops = static_cast<int>(integer());
      } else if (keyword("reverse=")) {
        reversed.push_back(static_cast<int>(integer()));
        while (!at_end() && peek() == ',') {
          get();
          reversed.push_back(static_cast<int>(integer()));
        }
      } else {
        fail("unexpected character '" + std::string(1, peek()) + "'");
      }
    }
    return LinkDiagram::from_pd(xs, loops, reversed);
  }

 private:
  bool keyword(std::string_view kw) {
    if (s_.substr(pos_, kw.size()) != kw) return false;
    pos_ += kw.size();
    return true;
  }
  void expect(char ch) {
    skip_ws();
    if (at_end() || get() != ch) fail(std::string("expected '") + ch + "'");
    skip_ws();
  }
  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1'000'000'000) fail("integer too large");
    }
    if (pos_ == start) fail("expected non-negative integer");
    skip_ws();
    return v;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == ',')) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("PD text: " + msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string tuples_text(std::vector<PdTuple> xs) {
  std::sort(xs.begin(), xs.end());
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& t = xs[i];
    out << (i ? " " : "") << "X[" << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ']';
  }
  return out.str();
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) { return PdScanner(text).run(); }

std::string serialize(const LinkDiagram& d) {
  // Components whose orientation the tuples alone would not reproduce get
  // an explicit reverse= entry.
  std::vector<int> reversed;
  if (d.crossing_count() > 0) {
    const auto at = slots_by_label(d.crossings());
    const Derived der = derive_orientation(d.crossings(), at, {});
    std::vector<char> flag(d.components().size(), 0);
    for (int i = 0; i < d.crossing_count(); ++i)
      if (der.over_in[static_cast<std::size_t>(i)] != d.over_in_slot(i))
        flag[static_cast<std::size_t>(d.component_of(d.crossing(i)[static_cast<std::size_t>(d.over_in_slot(i))]))] = 1;
    for (std::size_t k = 0; k < flag.size(); ++k)
      if (flag[k]) reversed.push_back(static_cast<int>(k));
  }
  std::string out;
  if (d.unknotted_loops() > 0) out += "loops=" + std::to_string(d.unknotted_loops());
  if (!reversed.empty()) {
    out += out.empty() ? "reverse=" : " reverse=";
    for (std::size_t k = 0; k < reversed.size(); ++k) out += (k ? "," : "") + std::to_string(reversed[k]);
  }
  const std::string body = tuples_text(d.crossings());
  if (!body.empty()) out += (out.empty() ? "" : " ") + body;
  return out;
}

// ---- operations ---------------------------------------------------------------

const FaceSet& faces(const LinkDiagram& d) { return d.faces(); }

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (int i = 0; i < d.crossing_count(); ++i) w += d.sign(i);
  return w;
}

bool is_alternating(const LinkDiagram& d) {
  for (Arc a = 1; a <= d.arc_count(); ++a) {
    const bool leaves_under = d.tail(a).slot == 2;
    const bool enters_under = d.head(a).slot == 0;
    if (leaves_under == enters_under) return false;
  }
  return true;
}

bool is_reduced(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return true;
  const auto& cf = d.faces().corner_face;
  for (const auto& f : cf)
    if (f[0] == f[2] || f[1] == f[3]) return false;
  return true;
}

bool is_prime(const LinkDiagram& d) {
  if (!is_reduced(d)) return false;
  const auto [g, gbar] = tait_graphs(d);
  return !has_cut_vertex(g) && !has_cut_vertex(gbar);
}

LinkDiagram flip_crossing(const LinkDiagram& d, int i) {
  if (i < 0 || i >= d.crossing_count())
    throw IndexError("crossing index " + std::to_string(i) + " out of range");
  std::vector<PdTuple> xs = d.crossings();
  std::vector<int> over_in(static_cast<std::size_t>(d.crossing_count()));
  for (int k = 0; k < d.crossing_count(); ++k) over_in[static_cast<std::size_t>(k)] = d.over_in_slot(k);
  const int o = d.over_in_slot(i);
  xs[static_cast<std::size_t>(i)] = rotate(xs[static_cast<std::size_t>(i)], o);
  over_in[static_cast<std::size_t>(i)] = 4 - o;
  return LinkDiagram::from_oriented_pd(xs, over_in, d.unknotted_loops());
}

namespace {

LinkDiagram reverse_set(const LinkDiagram& d, const std::vector<char>& rev) {
  std::vector<PdTuple> xs = d.crossings();
  std::vector<int> over_in(static_cast<std::size_t>(d.crossing_count()));
  for (int i = 0; i < d.crossing_count(); ++i) {
    const PdTuple& t = d.crossing(i);
    int o = d.over_in_slot(i);
    const bool under_rev = rev[static_cast<std::size_t>(d.component_of(t[0]))];
    const bool over_rev = rev[static_cast<std::size_t>(d.component_of(t[static_cast<std::size_t>(o)]))];
    if (under_rev) {
      xs[static_cast<std::size_t>(i)] = rotate(t, 2);
      o = (o + 2) % 4;
    }
    if (over_rev) o = (o + 2) % 4;
    over_in[static_cast<std::size_t>(i)] = o;
  }
  return LinkDiagram::from_oriented_pd(xs, over_in, d.unknotted_loops());
}

}  // namespace

LinkDiagram reverse_component(const LinkDiagram& d, int component) {
  if (component < 0 || component >= static_cast<int>(d.components().size()))
    throw IndexError("component index " + std::to_string(component) + " out of range");
  std::vector<char> rev(d.components().size(), 0);
  rev[static_cast<std::size_t>(component)] = 1;
  return reverse_set(d, rev);
}

LinkDiagram reverse_all(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return d;
  return reverse_set(d, std::vector<char>(d.components().size(), 1));
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<PdTuple> xs = a.crossings();
  std::vector<int> over_in;
  for (int i = 0; i < a.crossing_count(); ++i) over_in.push_back(a.over_in_slot(i));
  const Arc shift = a.arc_count();
  for (int i = 0; i < b.crossing_count(); ++i) {
    PdTuple t = b.crossing(i);
    for (auto& x : t) x += shift;
    xs.push_back(t);
    over_in.push_back(b.over_in_slot(i));
  }
  return LinkDiagram::from_oriented_pd(xs, over_in, a.unknotted_loops() + b.unknotted_loops());
}

PlanarMap to_planar_map(const LinkDiagram& d) {
  PlanarMap m;
  const int c = d.crossing_count();
  m.partner.resize(static_cast<std::size_t>(4 * c));
  m.under_axis.assign(static_cast<std::size_t>(c), 0);
  m.unknotted_loops = d.unknotted_loops();
  for (int i = 0; i < c; ++i)
    for (int s = 0; s < 4; ++s) {
      const Slot o = d.other_end({i, s});
      m.partner[static_cast<std::size_t>(4 * i + s)] = 4 * o.crossing + o.slot;
    }
  return m;
}

}  // namespace aaj
