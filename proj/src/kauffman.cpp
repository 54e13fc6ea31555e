#include "aaj/kauffman.hpp"

#include <numeric>
#include <thread>

namespace aaj {

namespace {

// Slot pairs joined by each smoothing.
constexpr int kPairA[2][2] = {{0, 1}, {2, 3}};
constexpr int kPairB[2][2] = {{0, 3}, {1, 2}};

// Arc gluings: the two ends of every arc as slot ids 4*crossing+slot.
std::vector<std::pair<int, int>> arc_gluings(const LinkDiagram& d) {
  std::vector<std::pair<int, int>> g;
  for (Arc a = 1; a <= d.arc_count(); ++a) {
    const Slot t = d.tail(a), h = d.head(a);
    g.emplace_back(4 * t.crossing + t.slot, 4 * h.crossing + h.slot);
  }
  return g;
}

// Union-find with union by size and no path compression, so unions can be
// undone in stack order.
class RollbackUF {
 public:
  explicit RollbackUF(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(-1);
      return;
    }
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    --sets_;
    history_.push_back(b);
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    if (b < 0) return;
    const int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
    ++sets_;
  }
  int sets() const { return sets_; }

 private:
  std::vector<int> parent_, size_;
  int sets_;
  std::vector<int> history_;
};

// hist[a][loops]: number of states with `a` A-smoothings and `loops` loops.
using Histogram = std::vector<std::vector<std::int64_t>>;

void enumerate(RollbackUF& uf, int crossing, int c, int a_count, Histogram& hist) {
  if (crossing == c) {
    // Each crossing contributes four slot nodes and two smoothing unions,
    // so the set count equals the loop count.
    ++hist[static_cast<std::size_t>(a_count)][static_cast<std::size_t>(uf.sets())];
    return;
  }
  const int base = 4 * crossing;
  for (int which = 0; which < 2; ++which) {
    const auto& pr = which == 0 ? kPairA : kPairB;
    uf.unite(base + pr[0][0], base + pr[0][1]);
    uf.unite(base + pr[1][0], base + pr[1][1]);
    enumerate(uf, crossing + 1, c, a_count + (which == 0), hist);
    uf.undo();
    uf.undo();
  }
}

Histogram state_histogram(const LinkDiagram& d, int threads) {
  const int c = d.crossing_count();
  const auto glue = arc_gluings(d);
  auto fresh = [&] {
    RollbackUF uf(4 * c);
    for (auto [x, y] : glue) uf.unite(x, y);
    return uf;
  };
  auto empty = [&] {
    return Histogram(static_cast<std::size_t>(c + 1), std::vector<std::int64_t>(static_cast<std::size_t>(4 * c + 1), 0));
  };

  // Fix the first `split` crossings per chunk; chunks are summed afterwards.
  int split = 0;
  while (split < c && (1 << split) < threads * 4 && split < 8) ++split;
  if (threads <= 1) split = 0;
  const int chunks = 1 << split;
  std::vector<Histogram> partial(static_cast<std::size_t>(chunks), empty());

  auto run_chunk = [&](int chunk) {
    RollbackUF uf = fresh();
    int a_count = 0;
    for (int i = 0; i < split; ++i) {
      const bool is_a = ((chunk >> i) & 1) == 0;
      const auto& pr = is_a ? kPairA : kPairB;
      uf.unite(4 * i + pr[0][0], 4 * i + pr[0][1]);
      uf.unite(4 * i + pr[1][0], 4 * i + pr[1][1]);
      a_count += is_a;
    }
    enumerate(uf, split, c, a_count, partial[static_cast<std::size_t>(chunk)]);
  };

  if (chunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    const int workers = std::min(threads, chunks);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int k = w; k < chunks; k += workers) run_chunk(k);
      });
    for (auto& t : pool) t.join();
  }
  Histogram total = empty();
  for (const auto& h : partial)
    for (std::size_t a = 0; a < h.size(); ++a)
      for (std::size_t l = 0; l < h[a].size(); ++l) total[a][l] += h[a][l];
  return total;
}

}  // namespace

StateLoops state_loops(const LinkDiagram& d, const std::vector<Resolution>& r) {
  const int c = d.crossing_count();
  if (static_cast<int>(r.size()) != c)
    throw IndexError("need one resolution per crossing: got " + std::to_string(r.size()) + " for " +
                     std::to_string(c));
  RollbackUF uf(4 * c);
  for (auto [x, y] : arc_gluings(d)) uf.unite(x, y);
  for (int i = 0; i < c; ++i) {
    const auto& pr = r[static_cast<std::size_t>(i)] == Resolution::A ? kPairA : kPairB;
    uf.unite(4 * i + pr[0][0], 4 * i + pr[0][1]);
    uf.unite(4 * i + pr[1][0], 4 * i + pr[1][1]);
  }
  StateLoops out;
  std::vector<int> id(static_cast<std::size_t>(4 * c), -1);
  out.endpoint_loop.resize(static_cast<std::size_t>(4 * c));
  int next = 0;
  for (int s = 0; s < 4 * c; ++s) {
    int& root_id = id[static_cast<std::size_t>(uf.find(s))];
    if (root_id < 0) root_id = next++;
    out.endpoint_loop[static_cast<std::size_t>(s)] = root_id;
  }
  for (int i = 0; i < c; ++i) {
    // The trace joins the two arcs of the smoothing; slot 0 lies on one and
    // slot 2 on the other for both smoothings.
    out.trace.emplace_back(out.endpoint_loop[static_cast<std::size_t>(4 * i)],
                           out.endpoint_loop[static_cast<std::size_t>(4 * i + 2)]);
  }
  out.loop_count = next + d.unknotted_loops();
  return out;
}

KauffmanState resolve(const LinkDiagram& d, const std::vector<Resolution>& r) {
  KauffmanState s;
  s.resolutions = r;
  s.loop_count = state_loops(d, r).loop_count;
  for (Resolution x : r) (x == Resolution::A ? s.a_count : s.b_count)++;
  return s;
}

LaurentPoly delta_power(int k) {
  if (k < 0) throw InternalError("negative power of delta");
  const LaurentPoly delta(Unit::QuarterA, {{2, -1}, {-2, -1}});
  return delta.pow(static_cast<unsigned>(k));
}

LaurentPoly bracket(const LinkDiagram& d, const BracketOptions& opt) {
  const int c = d.crossing_count();
  if (c > opt.cap)
    throw CapError(std::to_string(c) + " crossings exceed the state-sum cap of " + std::to_string(opt.cap));
  if (c == 0) return delta_power(d.unknotted_loops() - 1);

  const Histogram hist = state_histogram(d, opt.threads);
  std::vector<LaurentPoly> dpow;
  LaurentPoly sum(Unit::QuarterA);
  for (int a = 0; a <= c; ++a)
    for (int loops = 1; loops < static_cast<int>(hist[static_cast<std::size_t>(a)].size()); ++loops) {
      const std::int64_t n = hist[static_cast<std::size_t>(a)][static_cast<std::size_t>(loops)];
      if (n == 0) continue;
      while (static_cast<int>(dpow.size()) < loops) dpow.push_back(delta_power(static_cast<int>(dpow.size())));
      sum += monomial_shift(dpow[static_cast<std::size_t>(loops - 1)], n, a - (c - a));
    }
  return sum * delta_power(d.unknotted_loops());
}

LaurentPoly jones_from_bracket(const LaurentPoly& br, int w) {
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  const Coeff sign = (w % 2 == 0) ? 1 : -1;
  LaurentPoly::TermMap t;
  for (auto [k, x] : br.terms()) {
    const Exponent shifted = checked::add(k, checked::mul(-3, w));
    if (shifted % 2 != 0)
      throw InternalError("bracket exponent " + std::to_string(shifted) +
                          " is odd after the writhe shift; orientation data is inconsistent");
    t.emplace(-shifted / 2, checked::mul(x, sign));
  }
  return LaurentPoly(Unit::HalfT, t);
}

LaurentPoly jones(const LinkDiagram& d, const BracketOptions& opt) {
  return jones_from_bracket(bracket(d, opt), writhe(d));
}

std::pair<int, int> state_counts(const LinkDiagram& d) {
  const auto c = static_cast<std::size_t>(d.crossing_count());
  return {resolve(d, std::vector<Resolution>(c, Resolution::A)).loop_count,
          resolve(d, std::vector<Resolution>(c, Resolution::B)).loop_count};
}

int turaev_genus(const LinkDiagram& d) {
  if (d.piece_count() > 1) throw SplitError("Turaev genus needs a connected diagram");
  const auto [sa, sb] = state_counts(d);
  const int twice = 2 + d.crossing_count() - sa - sb;
  if (twice < 0 || twice % 2 != 0)
    throw InternalError("Turaev genus formula gave " + std::to_string(twice) + "/2");
  return twice / 2;
}

namespace {

bool adequate(const LinkDiagram& d, Resolution r) {
  const auto loops = state_loops(d, std::vector<Resolution>(static_cast<std::size_t>(d.crossing_count()), r));
  for (auto [x, y] : loops.trace)
    if (x == y) return false;
  return true;
}

}  // namespace

bool is_A_adequate(const LinkDiagram& d) { return adequate(d, Resolution::A); }
bool is_B_adequate(const LinkDiagram& d) { return adequate(d, Resolution::B); }

}  // namespace aaj
