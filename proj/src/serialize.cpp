#include "regulous/serialize.hpp"

#include "regulous/errors.hpp"
#include "regulous/parse.hpp"

namespace regulous {

json to_json(const Rat& r) { return to_string(r); }
json to_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json to_json(const Interval& I) {
  json j;
  j["kind"] = I.kind == Interval::Kind::open ? "open" : I.kind == Interval::Kind::closed ? "closed" : "point";
  j["lo"] = I.lo ? json(to_string(*I.lo)) : json(nullptr);
  j["hi"] = I.hi ? json(to_string(*I.hi)) : json(nullptr);
  return j;
}

json poly_to_json(const Poly2& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(json::array({e.i, e.j, to_fraction_string(c)}));
  return a;
}

namespace {

Rat rat_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad rational: ") + e.what());
  }
  throw FormatError("expected a rational, got " + j.dump());
}

}  // namespace

Poly2 poly_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_polynomial(j.get<std::string>());
    } catch (const ParseError& e) {
      throw FormatError(std::string("bad polynomial expression: ") + e.what());
    }
  }
  if (!j.is_array()) throw FormatError("polynomial must be an array of [i, j, coefficient] triples");
  Poly2 p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned())
      throw FormatError("bad polynomial term " + t.dump());
    p.add_term({t[0].get<unsigned>(), t[1].get<unsigned>()}, rat_from_json(t[2]));
  }
  return p;
}

json ratfunc_to_json(const RatFunc& f) {
  json j;
  j["text"] = f.to_string();
  j["num"] = poly_to_json(f.num());
  j["den"] = poly_to_json(f.den());
  return j;
}

RatFunc ratfunc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw FormatError("expected {num, den}");
  const Poly2 d = poly_from_json(j.at("den"));
  if (d.is_zero()) throw FormatError("zero denominator");
  return RatFunc::reduce(poly_from_json(j.at("num")), d);
}

json sos_to_json(const SosRep& r) {
  json j;
  j["scalar"] = to_fraction_string(r.scalar);
  j["terms"] = json::array();
  for (const auto& t : r.terms) j["terms"].push_back(poly_to_json(t));
  return j;
}

SosRep sos_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw FormatError("witness must be {scalar, terms}");
  SosRep r;
  r.scalar = j.contains("scalar") ? rat_from_json(j.at("scalar")) : Rat(1);
  for (const auto& t : j.at("terms")) r.terms.push_back(poly_from_json(t));
  return r;
}

namespace {

json polys_to_json(const std::vector<Poly2>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(poly_to_json(p));
  return a;
}

std::vector<Poly2> polys_from_json(const json& j) {
  std::vector<Poly2> out;
  for (const auto& p : j) out.push_back(poly_from_json(p));
  return out;
}

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("bad point " + j.dump());
  return Point{rat_from_json(j[0]), rat_from_json(j[1])};
}

json trace_to_json(const StepTrace& t) {
  json j;
  j["point"] = to_json(t.point);
  j["value"] = to_fraction_string(t.value);
  j["order"] = t.order;
  j["q_lowest"] = poly_to_json(t.q_lowest);
  j["p_lowest"] = poly_to_json(t.p_lowest);
  j["q_components"] = polys_to_json(t.q_components);
  j["p_components"] = polys_to_json(t.p_components);
  j["s_terms"] = polys_to_json(t.s_terms);
  j["r_terms"] = polys_to_json(t.r_terms);
  j["alpha"] = to_fraction_string(t.alpha);
  j["beta"] = to_fraction_string(t.beta);
  j["d"] = poly_to_json(t.d);
  return j;
}

StepTrace trace_from_json(const json& j) {
  StepTrace t;
  t.point = point_from_json(j.at("point"));
  t.value = rat_from_json(j.at("value"));
  t.order = j.at("order").get<unsigned>();
  t.q_lowest = poly_from_json(j.at("q_lowest"));
  t.p_lowest = poly_from_json(j.at("p_lowest"));
  t.q_components = polys_from_json(j.at("q_components"));
  t.p_components = polys_from_json(j.at("p_components"));
  t.s_terms = polys_from_json(j.at("s_terms"));
  t.r_terms = polys_from_json(j.at("r_terms"));
  t.alpha = rat_from_json(j.at("alpha"));
  t.beta = rat_from_json(j.at("beta"));
  t.d = poly_from_json(j.at("d"));
  return t;
}

}  // namespace

json certificate_to_json(const RatSosCertificate& c) {
  json j;
  j["target"] = ratfunc_to_json(c.target);
  j["terms"] = json::array();
  for (const auto& t : c.terms) j["terms"].push_back(ratfunc_to_json(t));
  json prov;
  prov["eliminated_points"] = json::array();
  for (const auto& p : c.provenance.eliminated_points) prov["eliminated_points"].push_back(to_json(p));
  prov["step_traces"] = json::array();
  for (const auto& t : c.provenance.step_traces) prov["step_traces"].push_back(trace_to_json(t));
  json sc;
  sc["alpha"] = to_fraction_string(c.provenance.alpha);
  sc["beta"] = to_fraction_string(c.provenance.beta);
  sc["absorbed"] = json::array();
  for (const auto& r : c.provenance.absorbed) sc["absorbed"].push_back(to_fraction_string(r));
  prov["scalars"] = sc;
  prov["denominator"] = poly_to_json(c.provenance.denominator);
  j["provenance"] = prov;
  return j;
}

RatSosCertificate certificate_from_json(const json& j) {
  try {
    RatSosCertificate c;
    c.target = ratfunc_from_json(j.at("target"));
    for (const auto& t : j.at("terms")) c.terms.push_back(ratfunc_from_json(t));
    if (j.contains("provenance")) {
      const json& p = j.at("provenance");
      if (p.contains("eliminated_points"))
        for (const auto& pt : p.at("eliminated_points")) c.provenance.eliminated_points.push_back(point_from_json(pt));
      if (p.contains("step_traces"))
        for (const auto& t : p.at("step_traces")) c.provenance.step_traces.push_back(trace_from_json(t));
      if (p.contains("scalars")) {
        const json& s = p.at("scalars");
        c.provenance.alpha = rat_from_json(s.at("alpha"));
        c.provenance.beta = rat_from_json(s.at("beta"));
        for (const auto& r : s.at("absorbed")) c.provenance.absorbed.push_back(rat_from_json(r));
      }
      if (p.contains("denominator")) c.provenance.denominator = poly_from_json(p.at("denominator"));
    }
    return c;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed certificate: ") + e.what());
  }
}

json to_json(const Substitution& s) {
  json j;
  j["center"] = to_json(s.center);
  j["branch"] = s.branch == Branch::first ? "(u, uv)" : "(uv, v)";
  return j;
}

json to_json(const Chart& c) {
  json j;
  j["composition"] = json::array();
  for (const auto& s : c.composition) j["composition"].push_back(to_json(s));
  j["local_fn"] = c.local_fn.to_string("u", "v");
  j["local_fn_structured"] = ratfunc_to_json(c.local_fn);
  j["cleared_exponents"] = json::array({c.cleared_num, c.cleared_den});
  return j;
}

json to_json(const ResolutionWitness& w) {
  json j;
  j["kind"] = to_string(w.kind);
  j["pole"] = to_json(w.pole);
  j["chart"] = json::array();
  for (const auto& s : w.chart) j["chart"].push_back(to_json(s));
  j["points"] = json::array();
  for (const auto& p : w.points) j["points"].push_back(to_json(p));
  j["values"] = json::array();
  for (const auto& v : w.values) j["values"].push_back(to_json(v));
  if (w.box) j["box"] = to_json(*w.box);
  j["detail"] = w.detail;
  return j;
}

json to_json(const ResolutionNode& n) {
  json j;
  j["point"] = to_json(n.point);
  j["depth"] = n.depth;
  j["status"] = to_string(n.status);
  if (n.box) j["box"] = to_json(*n.box);
  j["charts"] = json::array();
  for (const auto& c : n.charts) j["charts"].push_back(to_json(c));
  j["children"] = json::array();
  for (const auto& c : n.children) j["children"].push_back(to_json(c));
  return j;
}

json to_json(const DefinitenessVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["form"] = v.form.to_string();
  if (v.witness) {
    json w;
    w["kind"] = v.witness->kind == DefinitenessWitness::Kind::vertical_line ? "vertical_line" : "root";
    if (v.witness->kind == DefinitenessWitness::Kind::root) w["root"] = to_json(v.witness->root);
    if (!v.witness->line_factor.is_zero()) w["line_factor"] = v.witness->line_factor.to_string();
    w["multiplicity"] = v.witness->multiplicity;
    j["witness"] = w;
  }
  return j;
}

json to_json(const Continuity& c) {
  json j;
  j["kind"] = to_string(c.kind);
  if (c.kind == Continuity::Kind::regular || c.kind == Continuity::Kind::limit) j["value"] = to_json(c.value);
  if (c.witness) j["witness"] = to_json(*c.witness);
  if (c.box) j["box"] = to_json(*c.box);
  return j;
}

json to_json(const ResolutionReport& r, bool with_tree) {
  json j;
  j["regulous"] = r.regulous;
  j["verdict"] = r.regulous ? "regulous" : r.refuted() ? "not_regulous" : "unsupported";
  j["stages"] = r.stages;
  j["poles"] = json::array();
  for (const auto& p : r.poles) {
    json e;
    e["point"] = to_json(p);
    auto it = r.pole_limits.find(p);
    e["limit"] = it != r.pole_limits.end() ? to_json(it->second) : json(nullptr);
    j["poles"].push_back(e);
  }
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  if (with_tree) {
    j["tree"] = json::array();
    for (const auto& n : r.tree) j["tree"].push_back(to_json(n));
  }
  return j;
}

json to_json(const ClassificationReport& r) {
  json j;
  j["is_rational_with_finite_poles"] = r.is_rational_with_finite_poles;
  j["regulous"] = r.regulous;
  j["verdict"] = r.regulous ? "regulous" : r.unsupported ? "unsupported" : "not_regulous";
  j["k_max"] = r.k_max;
  j["max_verified_k"] = r.max_verified_k ? json(*r.max_verified_k) : json(nullptr);
  j["budget_exhausted"] = r.budget_exhausted;
  j["stages"] = r.stages;
  j["poles"] = json::array();
  for (const auto& pc : r.per_pole) {
    json e;
    e["point"] = to_json(pc.point);
    e["limit"] = pc.limit ? to_json(*pc.limit) : json(nullptr);
    e["definiteness"] = to_json(pc.definiteness);
    e["first_failing_order"] = pc.first_failing_order ? json(*pc.first_failing_order) : json(nullptr);
    if (pc.failing_partial)
      e["failing_partial"] = json::array({pc.failing_partial->first, pc.failing_partial->second});
    if (pc.failure) e["failure"] = to_json(*pc.failure);
    j["poles"].push_back(e);
  }
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  return j;
}

json to_json(const VerificationReport& r) {
  json j;
  j["ok"] = r.ok();
  j["identity"] = r.identity_ok ? "pass" : "fail";
  j["difference"] = r.difference.to_string();
  j["membership"] = r.membership_ok ? "pass" : "fail";
  j["terms"] = json::array();
  for (const auto& t : r.terms) {
    json e;
    e["index"] = t.index;
    e["ok"] = t.ok;
    e["finite_poles"] = t.finite_poles;
    e["poles"] = json::array();
    for (std::size_t k = 0; k < t.poles.size(); ++k) {
      json p;
      p["point"] = to_json(t.poles[k]);
      if (k < t.definiteness.size()) p["definiteness"] = to_json(t.definiteness[k]);
      if (k < t.continuity.size()) p["continuity"] = to_json(t.continuity[k]);
      e["poles"].push_back(p);
    }
    if (!t.detail.empty()) e["detail"] = t.detail;
    j["terms"].push_back(e);
  }
  return j;
}

}  // namespace regulous
