#pragma once

// JSON views of library results. Field names are stable.

#include <json.hpp>

#include "aaj/aa.hpp"
#include "aaj/checkerboard.hpp"
#include "aaj/diagram.hpp"
#include "aaj/laurent.hpp"

namespace aaj {

using Json = nlohmann::json;

Json to_json(const GraphStats& s);
Json to_json(const AAPathStats& s);
/// stats.{v,e,mu,tau,beta1,P,P0,P1,P2,Q,S}
Json merged_stats(const GraphStats& g, const AAPathStats& p);
Json to_json(const AAReport& r);
Json to_json(const DealternatorCert& c);
Json to_json(const FamilyGraph& g);

/// Summary of one diagram: polynomials, writhe, genus, Tait statistics and
/// the almost alternating report when a strongly reduced dealternator exists.
Json diagram_report(const LinkDiagram& d, const LaurentPoly& bracket);

}  // namespace aaj
