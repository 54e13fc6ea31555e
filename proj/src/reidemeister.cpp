// Reidemeister moves on PD codes, used to generate equivalent diagrams.

#include <algorithm>
#include <array>
#include <cmath>

#include "aaj/diagram.hpp"

namespace aaj {

namespace {

struct Editable {
  std::vector<PdTuple> xs;
  std::vector<int> over_in;
  int loops = 0;
  Arc next_label = 1;

  explicit Editable(const LinkDiagram& d) : loops(d.unknotted_loops()) {
    xs = d.crossings();
    for (int i = 0; i < d.crossing_count(); ++i) over_in.push_back(d.over_in_slot(i));
    next_label = d.arc_count() + 1;
  }
  Arc fresh() { return next_label++; }
  void set(Slot s, Arc a) { xs[static_cast<std::size_t>(s.crossing)][static_cast<std::size_t>(s.slot)] = a; }
  LinkDiagram build() const { return LinkDiagram::from_oriented_pd(xs, over_in, loops); }
};

}  // namespace

LinkDiagram add_kink(const LinkDiagram& d, Arc a, bool positive, bool over_first) {
  Editable e(d);
  Arc x1, x2;
  if (d.crossing_count() == 0) {
    if (d.unknotted_loops() == 0) throw ValidationError("nothing to add a kink to");
    --e.loops;
    x1 = x2 = e.fresh();
  } else {
    if (a < 1 || a > d.arc_count()) throw IndexError("arc " + std::to_string(a) + " out of range");
    x1 = e.fresh();
    x2 = e.fresh();
    e.set(d.tail(a), x1);
    e.set(d.head(a), x2);
  }
  const Arc y = e.fresh();
  if (!over_first) {
    e.xs.push_back(positive ? PdTuple{x1, x2, y, y} : PdTuple{x1, y, y, x2});
  } else {
    e.xs.push_back(positive ? PdTuple{y, y, x2, x1} : PdTuple{y, x1, x2, y});
  }
  e.over_in.push_back(positive ? 3 : 1);
  return e.build();
}

LinkDiagram add_poke(const LinkDiagram& d, int face, Arc x, Arc y) {
  const FaceSet& fs = d.faces();
  if (face < 0 || face >= static_cast<int>(fs.faces.size())) throw IndexError("face index out of range");
  if (x == y) throw ValidationError("poke needs two distinct arcs");
  std::optional<Side> xs, ys;
  for (auto [arc, side] : fs.faces[static_cast<std::size_t>(face)].incidences) {
    if (arc == x && !xs) xs = side;
    if (arc == y && !ys) ys = side;
  }
  if (!xs || !ys) throw ValidationError("poke arcs must both bound the face");

  // Picture: x along the bottom of the face, y along the top; x is pushed
  // up over y, crossing it at P (left) and Q (right).
  const bool x_lr = *xs == Side::Left;
  const bool y_lr = *ys == Side::Right;
  Editable e(d);
  const Arc x_left = e.fresh(), x_mid = e.fresh(), x_right = e.fresh();
  const Arc y_left = e.fresh(), y_mid = e.fresh(), y_right = e.fresh();
  e.set(d.tail(x), x_lr ? x_left : x_right);
  e.set(d.head(x), x_lr ? x_right : x_left);
  e.set(d.tail(y), y_lr ? y_left : y_right);
  e.set(d.head(y), y_lr ? y_right : y_left);

  // Arms listed counterclockwise from east: E, N, W, S.
  auto emit = [&](std::array<Arc, 4> arms, bool x_in_from_south) {
    const int under_in = y_lr ? 2 : 0;
    const int over_in = x_in_from_south ? 3 : 1;
    PdTuple t;
    for (int k = 0; k < 4; ++k) t[static_cast<std::size_t>(k)] = arms[static_cast<std::size_t>((under_in + k) % 4)];
    e.xs.push_back(t);
    e.over_in.push_back((over_in - under_in + 4) % 4);
  };
  emit({y_mid, x_mid, y_left, x_left}, x_lr);     // P
  emit({y_right, x_mid, y_mid, x_right}, !x_lr);  // Q
  return e.build();
}

std::optional<LinkDiagram> r3_slide(const LinkDiagram& d) {
  if (!d.is_connected_nontrivial()) return std::nullopt;
  const FaceSet& fs = d.faces();
  for (const Face& f : fs.faces) {
    if (f.corners.size() != 3) continue;
    const Slot c1 = f.corners[0], c2 = f.corners[1], c3 = f.corners[2];
    const int X[3] = {c1.crossing, c2.crossing, c3.crossing};
    if (X[0] == X[1] || X[1] == X[2] || X[0] == X[2]) continue;
    const int k[3] = {c1.slot, c2.slot, c3.slot};
    auto slot = [&](int i, int off) { return Slot{X[i], (k[i] + off) % 4}; };

    // External ends counterclockwise around the triangle.
    const std::array<Slot, 6> ends = {slot(0, 2), slot(0, 3), slot(2, 2), slot(2, 3), slot(1, 2), slot(1, 3)};
    // Chords (pairs of end positions) for strands s12, s23, s31.
    const int chord[3][2] = {{1, 4}, {5, 2}, {3, 0}};
    // Strand s is over at a crossing when its side slot there is odd.
    // s12 uses slots k1+1 at X1 and k2 at X2, and so on.
    const bool over_at[3][2] = {
        {(k[0] + 1) % 2 == 1, k[1] % 2 == 1},
        {(k[1] + 1) % 2 == 1, k[2] % 2 == 1},
        {(k[2] + 1) % 2 == 1, k[0] % 2 == 1},
    };
    int height[3];
    for (int s = 0; s < 3; ++s) height[s] = over_at[s][0] + over_at[s][1];
    std::array<int, 3> sorted_h = {height[0], height[1], height[2]};
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_h != std::array<int, 3>{0, 1, 2}) continue;

    // Travel direction of each chord: from its first end if that end is incoming.
    bool from_first[3];
    for (int s = 0; s < 3; ++s) {
      const Slot e0 = ends[static_cast<std::size_t>(chord[s][0])];
      from_first[s] = d.head(d.arc_at(e0)) == e0;
    }

    // Geometric model: chords as perturbed diameters of a hexagon.
    std::array<std::array<double, 2>, 6> P;
    for (int j = 0; j < 6; ++j) P[static_cast<std::size_t>(j)] = {std::cos(M_PI / 3 * j), std::sin(M_PI / 3 * j)};
    // Old order along s12 from end 1: meets s31 (at X1) before s23 (at X2).
    // New configuration: s23 first, and cyclically for the others.
    const int first_partner[3] = {1, 2, 0};
    struct Hit { double t; int other; };
    std::array<std::array<double, 2>, 3> base, dir;
    bool found = false;
    std::array<std::vector<Hit>, 3> hits;
    for (int mask = 0; mask < 8 && !found; ++mask) {
      for (int s = 0; s < 3; ++s) {
        const auto& a = P[static_cast<std::size_t>(chord[s][0])];
        const auto& b = P[static_cast<std::size_t>(chord[s][1])];
        const double eps = (mask >> s & 1) ? 0.1 : -0.1;
        const double dx = b[0] - a[0], dy = b[1] - a[1];
        const double len = std::hypot(dx, dy);
        base[static_cast<std::size_t>(s)] = {a[0] - eps * dy / len, a[1] + eps * dx / len};
        dir[static_cast<std::size_t>(s)] = {dx, dy};
      }
      for (auto& h : hits) h.clear();
      for (int s = 0; s < 3; ++s)
        for (int r = 0; r < 3; ++r) {
          if (r == s) continue;
          const auto& p = base[static_cast<std::size_t>(s)];
          const auto& u = dir[static_cast<std::size_t>(s)];
          const auto& q = base[static_cast<std::size_t>(r)];
          const auto& v = dir[static_cast<std::size_t>(r)];
          const double den = u[0] * v[1] - u[1] * v[0];
          const double t = ((q[0] - p[0]) * v[1] - (q[1] - p[1]) * v[0]) / den;
          hits[static_cast<std::size_t>(s)].push_back({t, r});
        }
      found = true;
      for (int s = 0; s < 3; ++s) {
        auto& h = hits[static_cast<std::size_t>(s)];
        std::sort(h.begin(), h.end(), [](const Hit& x, const Hit& y) { return x.t < y.t; });
        if (h[0].other != first_partner[s]) found = false;
      }
    }
    if (!found) continue;

    Editable e(d);
    // Arc labels along each chord: end0 -> first hit -> second hit -> end1.
    std::array<std::array<Arc, 3>, 3> seg;
    for (int s = 0; s < 3; ++s) {
      seg[static_cast<std::size_t>(s)] = {d.arc_at(ends[static_cast<std::size_t>(chord[s][0])]), e.fresh(),
                                          d.arc_at(ends[static_cast<std::size_t>(chord[s][1])])};
    }
    // Pair (s, r) crossing: arms along s towards end0 / end1, along r likewise.
    std::vector<PdTuple> fresh_x;
    std::vector<int> fresh_o;
    for (int s = 0; s < 3; ++s)
      for (int r = s + 1; r < 3; ++r) {
        struct ArmInfo { double angle; Arc arc; bool incoming; bool under; };
        std::vector<ArmInfo> arms;
        const bool s_over = height[s] > height[r];
        for (int strand : {s, r}) {
          const int other = strand == s ? r : s;
          const auto& h = hits[static_cast<std::size_t>(strand)];
          const int pos = h[0].other == other ? 0 : 1;  // which hit along the chord
          const auto& u = dir[static_cast<std::size_t>(strand)];
          const double ang_fwd = std::atan2(u[1], u[0]);
          const double ang_bwd = std::atan2(-u[1], -u[0]);
          // towards end1 the next segment is seg[pos+1]; towards end0 seg[pos]
          const Arc towards_end1 = seg[static_cast<std::size_t>(strand)][static_cast<std::size_t>(pos + 1)];
          const Arc towards_end0 = seg[static_cast<std::size_t>(strand)][static_cast<std::size_t>(pos)];
          const bool under = (strand == s) != s_over;
          const bool ff = from_first[strand];
          arms.push_back({ang_fwd, towards_end1, !ff, under});
          arms.push_back({ang_bwd, towards_end0, ff, under});
        }
        std::sort(arms.begin(), arms.end(), [](const ArmInfo& a, const ArmInfo& b) { return a.angle < b.angle; });
        int start = 0;
        for (int q = 0; q < 4; ++q)
          if (arms[static_cast<std::size_t>(q)].under && arms[static_cast<std::size_t>(q)].incoming) start = q;
        PdTuple t;
        int oin = -1;
        for (int q = 0; q < 4; ++q) {
          const ArmInfo& arm = arms[static_cast<std::size_t>((start + q) % 4)];
          t[static_cast<std::size_t>(q)] = arm.arc;
          if (!arm.under && arm.incoming) oin = q;
        }
        fresh_x.push_back(t);
        fresh_o.push_back(oin);
      }

    std::vector<PdTuple> xs;
    std::vector<int> over_in;
    for (int i = 0; i < d.crossing_count(); ++i) {
      if (i == X[0] || i == X[1] || i == X[2]) continue;
      xs.push_back(e.xs[static_cast<std::size_t>(i)]);
      over_in.push_back(e.over_in[static_cast<std::size_t>(i)]);
    }
    xs.insert(xs.end(), fresh_x.begin(), fresh_x.end());
    over_in.insert(over_in.end(), fresh_o.begin(), fresh_o.end());
    return LinkDiagram::from_oriented_pd(xs, over_in, d.unknotted_loops());
  }
  return std::nullopt;
}

std::vector<Variant> reidemeister_variants(const LinkDiagram& d) {
  std::vector<Variant> out;
  out.push_back({MoveKind::R1, add_kink(d, 1, true, false)});
  if (d.is_connected_nontrivial()) {
    const FaceSet& fs = d.faces();
    bool done = false;
    for (int f = 0; f < static_cast<int>(fs.faces.size()) && !done; ++f) {
      const auto& inc = fs.faces[static_cast<std::size_t>(f)].incidences;
      for (std::size_t j = 1; j < inc.size() && !done; ++j)
        if (inc[j].first != inc[0].first) {
          out.push_back({MoveKind::R2, add_poke(d, f, inc[0].first, inc[j].first)});
          done = true;
        }
    }
    if (auto r3 = r3_slide(d)) out.push_back({MoveKind::R3, *r3});
  }
  return out;
}

}  // namespace aaj
