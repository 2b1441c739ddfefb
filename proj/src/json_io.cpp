#include "chernratio/json_io.hpp"

#include <stdexcept>

namespace chernratio {

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

mpq_class q_parse(const Json& j) {
  mpq_class q(j.get<std::string>());
  q.canonicalize();
  return q;
}

Json q_array(const std::vector<mpq_class>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(q_str(q));
  return a;
}

ChernVariables parse_variables(const std::string& name) {
  for (auto v : {ChernVariables::Tangent, ChernVariables::Subbundle, ChernVariables::Special,
                 ChernVariables::Formal}) {
    if (variables_name(v) == name) return v;
  }
  throw std::invalid_argument("unknown variable set '" + name + "'");
}

}  // namespace

Json partition_to_json(const Partition& a) { return Json(a.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const SchubertExpr& e) {
  Json terms = Json::array();
  for (const auto& [a, c] : e.terms()) {
    terms.push_back(Json{{"partition", partition_to_json(a)}, {"coeff", c.get_str()}});
  }
  return Json{{"terms", terms}};
}

SchubertExpr schubert_from_json(const Json& j) {
  SchubertExpr e;
  for (const auto& t : j.at("terms")) {
    e.add_term(partition_from_json(t.at("partition")), mpz_class(t.at("coeff").get<std::string>()));
  }
  return e;
}

Json to_json(const ChernPoly& p) {
  Json out{{"degree", p.degree()}};
  if (p.variables() != ChernVariables::Tangent) out["variables"] = std::string(variables_name(p.variables()));
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    terms.push_back(Json{{"monomial", partition_to_json(mono)}, {"coeff_m", q_array(c.coeffs())}});
  }
  out["terms"] = terms;
  return out;
}

ChernPoly chern_poly_from_json(const Json& j) {
  const auto vars = j.contains("variables") ? parse_variables(j.at("variables").get<std::string>())
                                            : ChernVariables::Tangent;
  ChernPoly p(vars, j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    std::vector<mpq_class> coeffs;
    for (const auto& q : t.at("coeff_m")) coeffs.push_back(q_parse(q));
    p.add_term(partition_from_json(t.at("monomial")), MPoly(coeffs));
  }
  return p;
}

Json to_json(const Inequality& ineq) {
  Json prov{{"kind", std::string(provenance_name(ineq.provenance.kind))},
            {"a", partition_to_json(ineq.provenance.a)}};
  if (ineq.provenance.kind == ProvenanceKind::Comparison) prov["b"] = partition_to_json(ineq.provenance.b);
  Json out{{"n", ineq.n}};
  if (ineq.m_value) out["m"] = *ineq.m_value;
  else out["m"] = "symbolic";
  out["relation"] = ">=0";
  out["provenance"] = prov;
  out["terms"] = to_json(ineq.lhs).at("terms");
  return out;
}

Inequality inequality_from_json(const Json& j) {
  Inequality ineq;
  ineq.n = j.at("n").get<int>();
  if (j.at("relation").get<std::string>() != ">=0") throw std::invalid_argument("unsupported relation");
  const auto& m = j.at("m");
  if (m.is_number_integer()) ineq.m_value = m.get<long>();
  else if (m.get<std::string>() != "symbolic") throw std::invalid_argument("bad m value");
  const auto& prov = j.at("provenance");
  ineq.provenance.kind = parse_provenance_kind(prov.at("kind").get<std::string>());
  ineq.provenance.a = partition_from_json(prov.at("a"));
  if (prov.contains("b")) ineq.provenance.b = partition_from_json(prov.at("b"));
  ineq.lhs = chern_poly_from_json(Json{{"degree", ineq.n}, {"terms", j.at("terms")}});
  return ineq;
}

Json to_json(const LpResult& r) {
  Json out{{"status", std::string(status_name(r.status))}};
  switch (r.status) {
    case LpStatus::Optimal:
      out["value"] = q_str(r.value);
      out["point"] = q_array(r.point);
      out["dual"] = q_array(r.dual);
      break;
    case LpStatus::Unbounded:
      out["point"] = q_array(r.point);
      out["ray"] = q_array(r.ray);
      break;
    case LpStatus::Infeasible: out["farkas"] = q_array(r.farkas); break;
  }
  return out;
}

Json to_json(const RatioPolytope& p) {
  Json coords = Json::array();
  for (const auto& a : p.coords) coords.push_back(partition_to_json(a));
  Json rows = Json::array();
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    Json prov{{"kind", std::string(provenance_name(p.sources[i].kind))},
              {"a", partition_to_json(p.sources[i].a)}};
    if (p.sources[i].kind == ProvenanceKind::Comparison) prov["b"] = partition_to_json(p.sources[i].b);
    rows.push_back(Json{{"coeffs", q_array(p.rows[i].coeffs)},
                        {"constant", q_str(p.rows[i].constant)},
                        {"relation", ">=0"},
                        {"provenance", prov}});
  }
  return Json{{"n", p.n}, {"m", p.m_value}, {"mode", std::string(mode_name(p.mode))},
              {"coords", coords}, {"rows", rows}};
}

Json to_json(const BoundsCertificate& c) {
  Json coords = Json::array();
  for (const auto& cb : c.coords) {
    Json e{{"partition", partition_to_json(cb.partition)}};
    e["min"] = cb.min.status == LpStatus::Optimal ? Json(q_str(cb.min.value)) : Json(nullptr);
    e["max"] = cb.max.status == LpStatus::Optimal ? Json(q_str(cb.max.value)) : Json(nullptr);
    e["min_status"] = std::string(status_name(cb.min.status));
    e["max_status"] = std::string(status_name(cb.max.status));
    if (cb.min.status == LpStatus::Unbounded) e["min_ray"] = q_array(cb.min.ray);
    if (cb.max.status == LpStatus::Unbounded) e["max_ray"] = q_array(cb.max.ray);
    coords.push_back(e);
  }
  return Json{{"n", c.n}, {"m", c.m_value}, {"mode", std::string(mode_name(c.mode))},
              {"coords", coords}, {"bounded", c.bounded()}};
}

Json to_json(const ChiBounds& b) {
  Json out = Json::object();
  const char* names[] = {"d1", "d2", "d3", "d4"};
  const LpResult* results[] = {&b.d1, &b.d2, &b.d3, &b.d4};
  for (int i = 0; i < 4; ++i) {
    out[names[i]] = results[i]->status == LpStatus::Optimal ? Json(q_str(results[i]->value)) : Json(nullptr);
    out[std::string(names[i]) + "_status"] = std::string(status_name(results[i]->status));
  }
  out["bounded"] = b.bounded();
  return out;
}

}  // namespace chernratio
