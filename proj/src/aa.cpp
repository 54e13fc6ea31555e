#include "aaj/aa.hpp"

namespace aaj {

namespace {

Coeff parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }
std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

const char* to_string(Minimality m) {
  switch (m) {
    case Minimality::Minimal: return "Minimal";
    case Minimality::WithinOneCrossing: return "WithinOneCrossing";
    case Minimality::ReducibleByTwo: return "ReducibleByTwo";
    case Minimality::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(SignVerdict s) { return s == SignVerdict::Consistent ? "Consistent" : "Obstructed"; }

const char* to_string(Nontriviality n) {
  return n == Nontriviality::NontrivialJones ? "NontrivialJones" : "Violation";
}

std::vector<DealternatorCert> find_dealternators(const LinkDiagram& d) {
  if (!d.is_connected_nontrivial()) throw SplitError("dealternator search needs a connected diagram");
  if (is_alternating(d)) throw AlreadyAlternatingError("diagram is already alternating");
  std::vector<DealternatorCert> out;
  const bool reduced = is_reduced(d);
  for (int i = 0; i < d.crossing_count(); ++i) {
    if (!is_alternating(flip_crossing(d, i))) continue;
    DealternatorCert cert;
    cert.crossing = i;
    const auto [g, gbar] = tait_graphs(d, i);
    const TaitEdge& eg = g.edges[static_cast<std::size_t>(i)];
    const TaitEdge& eb = gbar.edges[static_cast<std::size_t>(i)];
    cert.u1 = eg.u;
    cert.u2 = eg.v;
    cert.v1 = eb.u;
    cert.v2 = eb.v;
    auto parallel = [](const TaitGraph& t, const TaitEdge& e) {
      int n = 0;
      for (const auto& f : t.edges)
        if ((f.u == e.u && f.v == e.v) || (f.u == e.v && f.v == e.u)) ++n;
      return n;
    };
    if (!reduced)
      cert.reason = "a checkerboard graph has a loop";
    else if (cert.u1 == cert.u2)
      cert.reason = "u1 = u2";
    else if (cert.v1 == cert.v2)
      cert.reason = "v1 = v2";
    else if (parallel(g, eg) > 1)
      cert.reason = "another edge of G joins u1 and u2";
    else if (parallel(gbar, eb) > 1)
      cert.reason = "another edge of Gbar joins v1 and v2";
    cert.strongly_reduced = cert.reason.empty();
    out.push_back(cert);
  }
  return out;
}

DasLinCoeffs dasbach_lin_coeffs(const LinkDiagram& d) {
  if (!d.is_connected_nontrivial() || !is_alternating(d) || !is_reduced(d))
    throw NotApplicableError("needs a connected reduced alternating diagram");
  const auto [g, gbar] = tait_graphs(d);
  if (g.count(EdgeKind::A) != d.crossing_count())
    throw InternalError("alternating diagram without an all-A checkerboard graph");
  DasLinCoeffs out;
  out.stats = graph_stats(simplify(g));
  out.stats_bar = graph_stats(simplify(gbar));
  auto first = [](const GraphStats& s) { return parity_sign(s.v - 1); };
  auto second = [](const GraphStats& s) { return parity_sign(s.v - 2) * (s.e - s.v + 1); };
  auto third = [](const GraphStats& s) {
    const std::int64_t v = s.v, e = s.e;
    return parity_sign(v - 3) * (choose2(v - 1) - e * (v - 2) + s.mu + choose2(e) - s.tau);
  };
  out.g0 = first(out.stats);
  out.g1 = second(out.stats);
  out.g2 = third(out.stats);
  out.g_c = first(out.stats_bar);
  out.g_cm1 = second(out.stats_bar);
  out.g_cm2 = third(out.stats_bar);
  out.top_exponent = d.crossing_count() + 2 * out.stats.v - 2;
  return out;
}

AAReport aa_coefficients(const LinkDiagram& d, const DealternatorCert& cert) {
  if (!cert.strongly_reduced)
    throw NotApplicableError("dealternator certificate is not strongly reduced: " + cert.reason);
  const auto [g, gbar] = tait_graphs(d, cert.crossing);
  const SimplifiedGraph sg = simplify(g), sgbar = simplify(gbar);
  AAReport r;
  r.crossings = d.crossing_count();
  r.dealternator = cert.crossing;
  r.stats = graph_stats(sg);
  r.stats_bar = graph_stats(sgbar);
  r.path = aa_path_stats(sg, cert.u1, cert.u2);
  r.path_bar = aa_path_stats(sgbar, cert.v1, cert.v2);

  auto outer = [](const GraphStats& s, const AAPathStats& p) { return parity_sign(s.v) * (p.P - 1); };
  auto inner = [](const GraphStats& s, const AAPathStats& p) {
    return parity_sign(s.v - 1) *
           (static_cast<std::int64_t>(s.beta1) * (p.P - 1) - choose2(p.P) + p.P2 - p.P0 + p.Q - p.S);
  };
  r.alpha0 = outer(r.stats, r.path);
  r.alpha1 = inner(r.stats, r.path);
  r.alpha_cm4 = inner(r.stats_bar, r.path_bar);
  r.alpha_cm3 = outer(r.stats_bar, r.path_bar);
  r.top_exponent = r.crossings + 2 * r.stats.v - 8;
  r.bottom_exponent = -r.crossings - 2 * r.stats_bar.v + 8;
  r.minimality = crossing_minimality(r);
  return r;
}

Minimality crossing_minimality(const AAReport& r) {
  const AAPathStats& p = r.path;
  const AAPathStats& q = r.path_bar;
  if (p.P != 1 && q.P != 1) return Minimality::Minimal;
  if (p.P == 1 && q.P == 1) return Minimality::ReducibleByTwo;
  const AAPathStats& one = p.P == 1 ? p : q;
  if (one.P2 - one.P0 + one.Q - one.S != 0) return Minimality::WithinOneCrossing;
  return Minimality::Inconclusive;
}

SignVerdict sign_obstruction(const LaurentPoly& v) {
  if (v.is_zero()) throw EmptyError("sign test on the zero polynomial");
  const Exponent lo = v.min_exponent(), hi = v.max_exponent();
  const Coeff a0 = v.coeff(lo), a1 = lo == hi ? 0 : v.coeff(lo + 2);
  const Coeff an = v.coeff(hi), an1 = lo == hi ? 0 : v.coeff(hi - 2);
  const bool low_ok = (a0 == 1 || a0 == -1) && checked::mul(a0, a1) <= 0;
  const bool high_ok = (an == 1 || an == -1) && checked::mul(an1, an) <= 0;
  return low_ok || high_ok ? SignVerdict::Consistent : SignVerdict::Obstructed;
}

LaurentPoly unlink_jones(int components) {
  if (components < 1) throw ParamError("unlink needs at least one component");
  const LaurentPoly base(Unit::HalfT, {{1, -1}, {-1, -1}});
  return base.pow(static_cast<unsigned>(components - 1));
}

bool is_unit_times_unlink(const LaurentPoly& v, int components) {
  if (v.unit() != Unit::HalfT) throw UnitError("expected a polynomial in t");
  const LaurentPoly u = unlink_jones(components);
  if (v.is_zero() || v.term_count() != u.term_count()) return false;
  const Exponent shift = v.min_exponent() - u.min_exponent();
  if (shift % 2 != 0) return false;
  return monomial_shift(u, 1, shift) == v;
}

std::pair<bool, bool> lemma_dual_check(const AAPathStats& s, const AAPathStats& sb,
                                       const GraphStats& g, const GraphStats& gb) {
  auto small = [](int p) { return p == 0 || p == 2; };
  return {small(s.P) || small(sb.P), s.P + s.Q <= g.beta1 && sb.P + sb.Q <= gb.beta1};
}

AAReport analyze_aa(const LinkDiagram& d, const DealternatorCert& cert, const BracketOptions& opt) {
  AAReport r = aa_coefficients(d, cert);
  const LaurentPoly v = jones(d, opt);
  r.sign_verdict = sign_obstruction(v);
  r.nontriviality = is_unit_times_unlink(v, d.link_component_count()) ? Nontriviality::Violation
                                                                         : Nontriviality::NontrivialJones;
  return r;
}

}  // namespace aaj
