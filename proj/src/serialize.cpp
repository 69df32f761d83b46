#include "atoral/serialize.hpp"

namespace atoral {

namespace {

json to_json(const univariate::Poly& p) {
  json arr = json::array();
  for (const auto& c : p) arr.push_back(c.get_str());
  return arr;
}

json selection_json(const std::vector<std::size_t>& sel) { return json(sel); }

json to_json(const SpacingViolation& v) {
  return {{"selection", selection_json(v.selection)}, {"sum", atoral::to_json(v.sum)}};
}

}  // namespace

json to_json(const LatticePoint& p) {
  json arr = json::array();
  for (auto c : p.coords()) arr.push_back(c);
  return arr;
}

LatticePoint lattice_point_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("lattice point must be an array");
  std::vector<std::int64_t> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("lattice coordinates must be integers");
    c.push_back(x.get<std::int64_t>());
  }
  return LatticePoint(std::span<const std::int64_t>(c));
}

json to_json(const SupportSet& s) {
  json arr = json::array();
  for (const auto& p : s) arr.push_back(to_json(p));
  return arr;
}

json to_json(const TorusPoint& t) { return json(t.t); }

json to_json(const TorusCertificate& c) {
  json cells = json::array();
  for (const auto& t : c.candidate_cells) cells.push_back(to_json(t));
  return {{"d", c.dim},
          {"grid_size", c.grid_size},
          {"grid_min", c.grid_min},
          {"lipschitz", c.lipschitz},
          {"cell_radius", c.cell_radius},
          {"rounding_allowance", c.rounding_allowance},
          {"certified_min", c.certified_min},
          {"empty_proven", c.empty_proven},
          {"lipschitz_bound", "2 pi sum_n ||n||_1 |f_n| (crude, always valid)"},
          {"candidate_cells", cells}};
}

json to_json(const D1Classification& c) {
  return {{"verdict", to_string(c.verdict)},
          {"self_inversive_gcd", to_json(c.self_inversive_gcd)},
          {"reduced", to_json(c.reduced)},
          {"roots_in_interval", c.roots_in_interval},
          {"root_at_one", c.root_at_one},
          {"root_at_minus_one", c.root_at_minus_one}};
}

json to_json(const AdjointComparison& c) {
  json j{{"hint", to_string(c.hint)}};
  if (c.sign) j["sign"] = *c.sign;
  if (c.shift) j["shift"] = to_json(*c.shift);
  j["conditional_on"] = "irreducibility of f (user asserted)";
  return j;
}

json to_json(const QuasiInverse& q) {
  return {{"f", to_json(q.f)},
          {"h", to_json(q.h)},
          {"fsharp", to_json(q.fsharp)},
          {"residual", q.residual},
          {"residual_l1", q.residual_l1},
          {"tail_table", q.tail_table},
          {"grid_size", q.grid_size},
          {"aliasing_estimate", q.aliasing_estimate},
          {"certified_min", q.certified_min},
          {"experimental", q.experimental},
          {"tail_certified", q.tail_certified}};
}

QuasiInverse quasi_inverse_from_json(const json& j) {
  try {
    QuasiInverse q;
    q.f = int_poly_from_json(j.at("f"));
    q.h = int_poly_from_json(j.at("h"));
    q.fsharp = real_array_from_json(j.at("fsharp"));
    q.residual = j.at("residual").get<double>();
    q.residual_l1 = j.at("residual_l1").get<double>();
    q.tail_table = j.at("tail_table").get<std::vector<double>>();
    q.grid_size = j.at("grid_size").get<std::size_t>();
    q.aliasing_estimate = j.at("aliasing_estimate").get<double>();
    q.certified_min = j.at("certified_min").get<double>();
    q.experimental = j.at("experimental").get<bool>();
    q.tail_certified = j.at("tail_certified").get<bool>();
    return q;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed quasi-inverse: ") + e.what());
  }
}

json to_json(const ProofTrace& t) {
  json j{{"R", t.radius},
         {"M", t.gap},
         {"tail_term", t.tail_term},
         {"off_support_max", t.off_support_max},
         {"off_support_margin", t.off_support_margin()},
         {"approximation_error", t.approximation_error},
         {"approximation_threshold", t.approximation_threshold},
         {"approximation_margin", t.approximation_margin()},
         {"u", to_json(t.u)},
         {"identity_exact", t.identity_exact},
         {"passed", t.passed()}};
  if (t.rounding_failure) j["rounding_failure"] = *t.rounding_failure;
  return j;
}

json to_json(const GapCertificate& c) {
  json clusters = json::array();
  for (const auto& cl : c.clusters) {
    json e{{"support", to_json(cl.cluster)},
           {"piece", to_json(cl.piece)},
           {"status", to_string(cl.status)},
           {"quotient", cl.quotient ? to_json(*cl.quotient) : json(nullptr)}};
    if (cl.trace) e["trace"] = to_json(*cl.trace);
    clusters.push_back(std::move(e));
  }
  return {{"f", to_json(c.f)},
          {"r", to_json(c.r)},
          {"H", c.h_bound.get_str()},
          {"R", c.radius},
          {"M_computed", c.computed_gap},
          {"M", c.gap},
          {"tail_term", c.tail_term},
          {"experimental_quasi_inverse", c.experimental_quasi_inverse},
          {"irreducible_asserted", c.irreducible_asserted},
          {"clusters", clusters},
          {"anomalies", c.anomalies},
          {"all_divisible", c.all_divisible()}};
}

json to_json(const SpacedConfiguration& c) {
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back(to_json(p));
  return {{"points", pts}, {"spacing", c.spacing}};
}

json to_json(const SpacedDivisibilityReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back(to_json(x));
  return {{"scope", r.scope},
          {"selections", r.selections},
          {"divisible_sums", r.divisible_sums},
          {"violations", v},
          {"clean", r.clean()}};
}

json to_json(const GapSearchReport& r) {
  json findings = json::array();
  for (const auto& f : r.findings)
    findings.push_back(
        {{"spacing", f.spacing}, {"configuration", to_json(f.configuration)}, {"violation", to_json(f.violation)}});
  return {{"scope", r.scope},
          {"empirical_M", r.empirical_gap ? json(*r.empirical_gap) : json(nullptr)},
          {"configurations", r.configurations},
          {"findings", findings}};
}

json to_json(const IndependenceReport& r) {
  json j{{"scope", r.scope},
         {"expected", r.expected},
         {"distinct_sum_count", r.distinct_sum_count},
         {"independent", r.independent},
         {"rational_only_collisions", r.rational_only_collisions}};
  j["witness"] = r.witness ? json{selection_json(r.witness->first), selection_json(r.witness->second)}
                           : json(nullptr);
  return j;
}

json to_json(const SumsetReport& r) {
  return {{"scope", r.scope},
          {"ball", r.ball},
          {"sublattice_ball", r.sublattice_ball},
          {"spacing_ball", r.spacing_ball},
          {"sumset_size", r.sumset_size},
          {"independent_size", r.independent_size},
          {"gamma", r.gamma},
          {"gamma_floor", r.gamma_floor},
          {"counting_bound_holds", r.counting_bound_holds}};
}

json to_json(const FactorizationReport& r) {
  return {{"joint", r.joint.get_str()}, {"product", r.product.get_str()}, {"factorizes", r.factorizes}};
}

json to_json(const FrobeniusReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json x{{"n", e.n},
           {"identity_holds", e.identity_holds},
           {"sum_divisible_mod2", e.sum_divisible_mod2},
           {"parts_divisible_mod2", e.parts_divisible_mod2}};
    x["integer_status"] = e.integer_status ? json(to_string(*e.integer_status)) : json(nullptr);
    entries.push_back(std::move(x));
  }
  return {{"scope", r.scope}, {"entries", entries}, {"all_hold", r.all_hold()}};
}

}  // namespace atoral
