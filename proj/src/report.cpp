#include "aaj/report.hpp"

#include "aaj/kauffman.hpp"

namespace aaj {

Json to_json(const GraphStats& s) {
  return {{"v", s.v}, {"e", s.e}, {"mu", s.mu}, {"tau", s.tau}, {"beta1", s.beta1}};
}

Json to_json(const AAPathStats& s) {
  return {{"P", s.P}, {"P0", s.P0}, {"P1", s.P1}, {"P2", s.P2}, {"Q", s.Q}, {"S", s.S}};
}

Json merged_stats(const GraphStats& g, const AAPathStats& p) {
  Json j = to_json(g);
  j.update(to_json(p));
  return j;
}

Json to_json(const AAReport& r) {
  Json j = {{"crossings", r.crossings},
            {"dealternator", r.dealternator},
            {"alpha0", r.alpha0},
            {"alpha1", r.alpha1},
            {"alpha_cm4", r.alpha_cm4},
            {"alpha_cm3", r.alpha_cm3},
            {"top_exponent", r.top_exponent},
            {"bottom_exponent", r.bottom_exponent},
            {"stats", merged_stats(r.stats, r.path)},
            {"stats_bar", merged_stats(r.stats_bar, r.path_bar)},
            {"minimality", to_string(r.minimality)}};
  j["sign_verdict"] = r.sign_verdict ? Json(to_string(*r.sign_verdict)) : Json(nullptr);
  j["nontriviality"] = r.nontriviality ? Json(to_string(*r.nontriviality)) : Json(nullptr);
  return j;
}

Json to_json(const DealternatorCert& c) {
  Json j = {{"crossing", c.crossing}, {"u1", c.u1}, {"u2", c.u2},
            {"v1", c.v1},             {"v2", c.v2}, {"strongly_reduced", c.strongly_reduced}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

Json to_json(const FamilyGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json je = {{"u", e.u}, {"v", e.v}, {"label", e.label}};
    if (e.dealternator) je["dealternator"] = true;
    edges.push_back(je);
  }
  return {{"family", g.family_id},
          {"params", {{"a_vec", g.params.a_vec}, {"b_vec", g.params.b_vec},
                      {"a", g.params.a}, {"b", g.params.b}, {"c", g.params.c}}},
          {"vertices", g.vertex_count},
          {"edges", edges}};
}

Json diagram_report(const LinkDiagram& d, const LaurentPoly& br) {
  Json j;
  j["pd"] = serialize(d);
  j["crossings"] = d.crossing_count();
  j["components"] = d.link_component_count();
  j["writhe"] = writhe(d);
  j["bracket"] = to_string(br);
  j["jones"] = to_string(jones_from_bracket(br, writhe(d)));
  j["alternating"] = is_alternating(d);
  if (d.piece_count() == 1) {
    const auto [sa, sb] = state_counts(d);
    j["s_A"] = sa;
    j["s_B"] = sb;
    j["turaev_genus"] = turaev_genus(d);
  }
  if (d.is_connected_nontrivial()) {
    j["reduced"] = is_reduced(d);
    const auto [g, gbar] = tait_graphs(d);
    j["tait"] = {{"G", to_json(graph_stats(simplify(g)))}, {"Gbar", to_json(graph_stats(simplify(gbar)))}};
    if (!is_alternating(d)) {
      const auto certs = find_dealternators(d);
      Json jc = Json::array();
      for (const auto& c : certs) jc.push_back(to_json(c));
      j["dealternators"] = jc;
      for (const auto& c : certs)
        if (c.strongly_reduced) {
          AAReport r = aa_coefficients(d, c);
          const LaurentPoly v = jones_from_bracket(br, writhe(d));
          r.sign_verdict = sign_obstruction(v);
          r.nontriviality = is_unit_times_unlink(v, d.link_component_count()) ? Nontriviality::Violation
                                                                                 : Nontriviality::NontrivialJones;
          j["aa"] = to_json(r);
          break;
        }
    }
  }
  return j;
}

}  // namespace aaj
