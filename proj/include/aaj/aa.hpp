#pragma once

// Extreme bracket coefficients of alternating and almost alternating
// diagrams from checkerboard graph statistics, plus the verdicts derived
// from them.
//
// Conventions. G is always the checkerboard graph whose edges are A-edges
// (all of them for an alternating diagram, all but the dealternator for an
// almost alternating one). With that choice the top bracket exponent is
// c + 2v - 2 (alternating) or c + 2v - 8 (almost alternating) and the
// formulas below apply without a mirror correction.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aaj/checkerboard.hpp"
#include "aaj/diagram.hpp"
#include "aaj/kauffman.hpp"
#include "aaj/laurent.hpp"

namespace aaj {

struct DealternatorCert {
  int crossing = -1;
  int u1 = -1, u2 = -1;  // vertices of G
  int v1 = -1, v2 = -1;  // vertices of Gbar
  bool strongly_reduced = false;
  std::string reason;  // empty when strongly reduced
};

/// Every crossing whose change makes d alternating. AlreadyAlternatingError
/// when d is alternating, SplitError when it is not connected.
std::vector<DealternatorCert> find_dealternators(const LinkDiagram& d);

struct DasLinCoeffs {
  Coeff g0 = 0, g1 = 0, g2 = 0, g_cm2 = 0, g_cm1 = 0, g_c = 0;
  Exponent top_exponent = 0;  // exponent of g0; g_i sits at top - 4i
  GraphStats stats, stats_bar;
};

/// NotApplicableError unless d is connected, reduced and alternating.
DasLinCoeffs dasbach_lin_coeffs(const LinkDiagram& d);

enum class Minimality { Minimal, WithinOneCrossing, ReducibleByTwo, Inconclusive };
enum class SignVerdict { Consistent, Obstructed };
enum class Nontriviality { NontrivialJones, Violation };

const char* to_string(Minimality m);
const char* to_string(SignVerdict s);
const char* to_string(Nontriviality n);

struct AAReport {
  int crossings = 0;
  int dealternator = -1;
  Coeff alpha0 = 0, alpha1 = 0, alpha_cm4 = 0, alpha_cm3 = 0;
  Exponent top_exponent = 0;     // c + 2v - 8, exponent of alpha0
  Exponent bottom_exponent = 0;  // -c - 2vbar + 8, exponent of alpha_{c-3}
  GraphStats stats, stats_bar;
  AAPathStats path, path_bar;
  Minimality minimality = Minimality::Inconclusive;
  std::optional<SignVerdict> sign_verdict;
  std::optional<Nontriviality> nontriviality;
};

/// Closed-form alphas and statistics; NotApplicableError unless the
/// certificate is strongly reduced.
AAReport aa_coefficients(const LinkDiagram& d, const DealternatorCert& cert);

Minimality crossing_minimality(const AAReport& report);

/// Leading/trailing coefficient test on a Jones polynomial (HalfT).
SignVerdict sign_obstruction(const LaurentPoly& v);

LaurentPoly unlink_jones(int components);
/// True when v = t^k (-t^(1/2) - t^(-1/2))^(l-1) for some integer k.
bool is_unit_times_unlink(const LaurentPoly& v, int components);

/// (P or Pbar in {0, 2}, both P + Q <= beta1 inequalities).
std::pair<bool, bool> lemma_dual_check(const AAPathStats& s, const AAPathStats& s_bar,
                                       const GraphStats& g, const GraphStats& g_bar);

/// aa_coefficients plus the Jones-based verdicts.
AAReport analyze_aa(const LinkDiagram& d, const DealternatorCert& cert, const BracketOptions& opt = {});

// ---- families of Gbar graphs ---------------------------------------------------

struct FamilyParams {
  std::vector<int> a_vec, b_vec;  // label vectors
  int a = 1, b = 1, c = 1;        // scalar labels
};

struct LabeledEdge {
  int u = 0, v = 0;
  int label = 1;  // number of parallel edges
  bool dealternator = false;
};

struct FamilyGraph {
  int family_id = 0;
  FamilyParams params;
  int vertex_count = 0;
  std::vector<LabeledEdge> edges;
  int v1 = 0, v2 = 1;
};

/// ParamError on invalid parameters.
FamilyGraph family_graph(int id, const FamilyParams& params);
SimplifiedGraph simplify(const FamilyGraph& g);

struct FamilyCheck {
  GraphStats stats;
  AAPathStats path;  // relative to (v1, v2)
  bool holds = false;
};

/// Families 1-3: Pbar = 0 and Qbar = beta1bar. Families 4-7: the captioned
/// (Sbar, Pbar0) and beta1bar = Pbar0 + Sbar + 1.
FamilyCheck family_check(const FamilyGraph& g);
bool family_equations_hold(int family_id, const GraphStats& s, const AAPathStats& p);

}  // namespace aaj
