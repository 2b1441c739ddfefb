#pragma once

#include <json.hpp>

#include "chernratio/chern_poly.hpp"
#include "chernratio/inequality.hpp"
#include "chernratio/polytope.hpp"
#include "chernratio/schubert.hpp"

namespace chernratio {

using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& a);
Partition partition_from_json(const Json& j);

/// {"terms":[{"partition":[2,1],"coeff":"3"}, ...]}
Json to_json(const SchubertExpr& e);
SchubertExpr schubert_from_json(const Json& j);

/// {"degree":d,"terms":[{"monomial":[2,1],"coeff_m":["0","1/2"]}, ...]};
/// a "variables" key is added for anything but tangent Chern classes.
Json to_json(const ChernPoly& p);
ChernPoly chern_poly_from_json(const Json& j);

/// {"n":4,"m":"symbolic"|int,"relation":">=0","provenance":{...},"terms":[...]}
Json to_json(const Inequality& ineq);
Inequality inequality_from_json(const Json& j);

/// Status plus value, point and whichever certificate the status carries.
Json to_json(const LpResult& r);

Json to_json(const RatioPolytope& p);
/// {"n","m","mode","coords":[{"partition","min","max","min_status","max_status"}],"bounded"}
Json to_json(const BoundsCertificate& c);
Json to_json(const ChiBounds& b);

}  // namespace chernratio
