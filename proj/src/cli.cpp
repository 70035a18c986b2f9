#include "regulous/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "regulous/classify.hpp"
#include "regulous/corpus.hpp"
#include "regulous/errors.hpp"
#include "regulous/parse.hpp"

namespace regulous {

namespace {

struct Outcome {
  json report;
  int code = kExitOk;
};

json envelope(const std::string& command, const std::string& input, const RatFunc& f) {
  json j;
  j["command"] = command;
  j["input"] = input;
  j["normal_form"] = f.to_string();
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::optional<Rat> limit_at_zero(const Frac1& g) {
  if (g.num.is_zero()) return Rat(0);
  std::size_t on = 0, od = 0;
  while (g.num.coeff(on) == 0) ++on;
  while (g.den.coeff(od) == 0) ++od;
  if (on > od) return Rat(0);
  if (on == od) return g.num.coeff(on) / g.den.coeff(od);
  return std::nullopt;
}

RatFunc apply_partials(RatFunc f, const std::string& word) {
  for (char c : word) {
    if (c == 'x') f = derivative_rf(f, Axis::x);
    else if (c == 'y') f = derivative_rf(f, Axis::y);
    else throw ParseError(std::string("derivative letters must be x or y, got '") + c + "'", 0);
  }
  return f;
}

json directional_derivatives(const RatFunc& f, const Point& a) {
  json j = json::object();
  for (const auto& [name, v] : {std::pair<const char*, Point>{"(1, 0)", {1, 0}}, {"(0, 1)", {0, 1}}}) {
    try {
      j[name] = to_json(directional_derivative_at(f, a, v));
    } catch (const NoDerivative&) {
      j[name] = nullptr;
    } catch (const IdenticallyUndefined&) {
      j[name] = nullptr;
    }
  }
  return j;
}

Outcome do_classify(const std::string& expr, unsigned kmax, bool parallel) {
  const RatFunc f = parse_expression(expr);
  ResolveOptions opts;
  opts.parallel = parallel;
  const ClassificationReport r = regularity_class(f, kmax, opts);
  Outcome o;
  o.report = envelope("classify", expr, f);
  json rep = to_json(r);
  json partials;
  partials["dx"] = derivative_rf(f, Axis::x).to_string();
  partials["dy"] = derivative_rf(f, Axis::y).to_string();
  rep["partials"] = partials;
  if (r.regulous) {
    json dirs = json::array();
    for (const auto& pc : r.per_pole) {
      json e;
      e["point"] = to_json(pc.point);
      e["directions"] = directional_derivatives(f, pc.point);
      dirs.push_back(e);
    }
    rep["directional_derivatives"] = dirs;
  }
  o.report["report"] = rep;
  o.code = r.unsupported ? kExitUnsupported : kExitOk;
  return o;
}

Outcome do_resolve(const std::string& expr, bool tree, unsigned max_stages, bool parallel) {
  const RatFunc f = parse_expression(expr);
  ResolveOptions opts;
  opts.max_stages = max_stages;
  opts.parallel = parallel;
  const ResolutionReport r = resolve(f, opts);
  Outcome o;
  o.report = envelope("resolve", expr, f);
  o.report["report"] = to_json(r, tree);
  o.code = r.undecided() ? kExitUnsupported : kExitOk;
  return o;
}

std::optional<SosRep> witness_from_file(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return sos_from_json(parse_json_file(path));
}

Outcome do_certify(const std::string& expr, const std::string& p_file, const std::string& q_file,
                   const std::string& out_file) {
  const RatFunc f = parse_expression(expr);
  // A sign change makes any witness search pointless.
  nonnegativity_guard(f);
  auto p_rep = witness_from_file(p_file);
  auto q_rep = witness_from_file(q_file);
  std::string source = "file";
  if (!p_rep || !q_rep) {
    auto syn = syntactic_sos(expr);
    if (syn && RatFunc::reduce(syn->first.expand(), syn->second.expand()) == f) {
      if (!p_rep) p_rep = syn->first;
      if (!q_rep) q_rep = syn->second;
      source = p_file.empty() && q_file.empty() ? "syntax" : "file+syntax";
    }
  }
  if (!p_rep || !q_rep) {
    if (!p_rep) p_rep = find_sos_witness(f.num());
    if (!q_rep) q_rep = find_sos_witness(f.den());
    source = "search";
  }
  if (!p_rep || !q_rep)
    throw Unsupported(std::string("no sum-of-squares witness found for the ") + (p_rep ? "denominator" : "numerator"));

  const RatSosCertificate cert = certify_nonnegative(f, *p_rep, *q_rep);
  const VerificationReport check = verify_certificate(cert);
  const json cj = certificate_to_json(cert);
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw FormatError("cannot write " + out_file);
    out << cj.dump(2) << "\n";
  }
  Outcome o;
  o.report = envelope("certify", expr, f);
  json rep;
  rep["witness_source"] = source;
  rep["p_witness"] = sos_to_json(*p_rep);
  rep["q_witness"] = sos_to_json(*q_rep);
  rep["certificate"] = cj;
  rep["verified"] = check.ok();
  if (!out_file.empty()) rep["written_to"] = out_file;
  o.report["report"] = rep;
  o.code = check.ok() ? kExitOk : kExitError;
  return o;
}

Outcome do_verify(const std::string& path) {
  const RatSosCertificate cert = certificate_from_json(parse_json_file(path));
  const VerificationReport r = verify_certificate(cert);
  Outcome o;
  o.report = envelope("verify", path, cert.target);
  o.report["report"] = to_json(r);
  return o;
}

Outcome do_flat_power(const std::string& expr, unsigned k, unsigned budget) {
  const RatFunc f = parse_expression(expr);
  const unsigned m = flat_power(f, k, budget);
  Outcome o;
  o.report = envelope("flat-power", expr, f);
  json rep;
  rep["k"] = k;
  rep["m"] = m;
  rep["k_flat_verified"] = verify_k_flat(f, m, k);
  rep["minimal"] = m <= 1 || !verify_k_flat(f, m - 1, k);
  o.report["report"] = rep;
  return o;
}

Outcome do_sample(const std::string& expr, const std::string& arc, unsigned depth, const std::string& derivative) {
  const RatFunc f = parse_expression(expr);
  Outcome o;
  o.report = envelope("sample", expr, f);
  o.report["report"] = sample_report(f, arc, depth, derivative);
  return o;
}

// ---- text rendering ------------------------------------------------------

std::string str(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  // points
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return "(" + j[0].get<std::string>() + ", " + j[1].get<std::string>() + ")";
  return j.dump();
}

std::string partial_name(const json& ij) {
  const unsigned i = ij[0], j = ij[1];
  auto var = [](const char* v, unsigned e) {
    return e == 0 ? std::string() : e == 1 ? std::string("d") + v : std::string("d") + v + "^" + std::to_string(e);
  };
  const unsigned n = i + j;
  return (n == 1 ? std::string("d/") : "d^" + std::to_string(n) + "/") + var("x", i) + var("y", j);
}

std::string pts(const json& arr) {
  std::string s;
  for (const auto& p : arr) s += (s.empty() ? "" : ", ") + str(p);
  return s.empty() ? "none" : s;
}

void render_witnesses(const json& ws, std::ostream& out) {
  for (const auto& w : ws) {
    out << "  witness " << str(w["kind"]) << " at " << str(w["pole"]);
    if (!w["values"].empty()) out << ", values " << w["values"].dump();
    if (!str(w["detail"]).empty()) out << ": " << str(w["detail"]);
    out << "\n";
  }
}

std::string chart_name(const json& composition) {
  std::string s;
  for (const auto& sub : composition) {
    if (!s.empty()) s += " . ";
    s += str(sub["branch"]) + "@" + str(sub["center"]);
  }
  return s.empty() ? "root" : s;
}

void render_node(const json& n, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out << pad << str(n["point"]) << " depth " << n["depth"].get<unsigned>() << ": " << str(n["status"]) << "\n";
  for (const auto& c : n["charts"])
    out << pad << "  chart " << chart_name(c["composition"]) << ": " << str(c["local_fn"]) << "\n";
  for (const auto& c : n["children"]) render_node(c, out, indent + 2);
}

void render_text(const json& env, std::ostream& out) {
  const std::string cmd = env["command"];
  const json& r = env["report"];
  if (env.contains("input")) out << "input: " << str(env["input"]) << "\n";
  if (env.contains("normal_form")) out << "normal form: " << str(env["normal_form"]) << "\n";
  if (cmd == "classify") {
    out << "verdict: " << str(r["verdict"]) << "\n";
    out << "stages: " << r["stages"] << "\n";
    out << "max_verified_k: " << (r["max_verified_k"].is_null() ? "none" : r["max_verified_k"].dump())
        << " (k_max " << r["k_max"] << (r["budget_exhausted"].get<bool>() ? ", budget exhausted" : "") << ")\n";
    for (const auto& p : r["poles"]) {
      out << "pole " << str(p["point"]) << ": limit " << (p["limit"].is_null() ? "none" : str(p["limit"])) << ", lowest form "
          << str(p["definiteness"]["form"]) << " " << str(p["definiteness"]["status"]);
      if (!p["first_failing_order"].is_null())
        out << ", first failing order " << p["first_failing_order"] << " (" << partial_name(p["failing_partial"]) << ")";
      out << "\n";
    }
    out << "d/dx: " << str(r["partials"]["dx"]) << "\n";
    out << "d/dy: " << str(r["partials"]["dy"]) << "\n";
    if (r.contains("directional_derivatives"))
      for (const auto& d : r["directional_derivatives"])
        for (const auto& [dir, v] : d["directions"].items())
          out << "directional derivative at " << str(d["point"]) << " along " << dir << ": " << str(v) << "\n";
    render_witnesses(r["witnesses"], out);
  } else if (cmd == "resolve") {
    out << "verdict: " << str(r["verdict"]) << "\n";
    out << "stages: " << r["stages"] << "\n";
    for (const auto& p : r["poles"]) out << "pole " << str(p["point"]) << ": limit " << (p["limit"].is_null() ? "none" : str(p["limit"])) << "\n";
    render_witnesses(r["witnesses"], out);
    if (r.contains("tree"))
      for (const auto& n : r["tree"]) render_node(n, out, 0);
  } else if (cmd == "certify") {
    const json& c = r["certificate"];
    out << "witnesses: " << str(r["witness_source"]) << "\n";
    out << "eliminated points: " << pts(c["provenance"]["eliminated_points"]) << "\n";
    for (const auto& t : c["provenance"]["step_traces"]) {
      out << "step at " << str(t["point"]) << ": f = " << to_string(parse_rat(str(t["value"]))) << "\n";
      for (const auto& s : t["r_terms"]) out << "  p-term " << poly_from_json(s).to_string() << "\n";
      for (const auto& s : t["s_terms"]) out << "  q-term " << poly_from_json(s).to_string() << "\n";
    }
    out << "terms (" << c["terms"].size() << "):\n";
    for (const auto& t : c["terms"]) out << "  " << str(t["text"]) << "\n";
    out << "verified: " << (r["verified"].get<bool>() ? "yes" : "no") << "\n";
    if (r.contains("written_to")) out << "written to " << str(r["written_to"]) << "\n";
  } else if (cmd == "verify") {
    out << "identity: " << str(r["identity"]) << "\n";
    if (str(r["identity"]) == "fail") out << "difference: " << str(r["difference"]) << "\n";
    out << "membership: " << str(r["membership"]) << "\n";
    for (const auto& t : r["terms"]) {
      out << "term " << t["index"] << ": " << (t["ok"].get<bool>() ? "ok" : "rejected");
      if (t.contains("detail")) out << " (" << str(t["detail"]) << ")";
      out << "\n";
    }
    out << "result: " << (r["ok"].get<bool>() ? "pass" : "fail") << "\n";
  } else if (cmd == "flat-power") {
    out << "k: " << r["k"] << "\nm: " << r["m"] << "\nk-flat verified: " << r["k_flat_verified"]
        << "\nminimal: " << r["minimal"] << "\n";
  } else if (cmd == "sample") {
    out << "restriction: " << str(r["restriction"]) << "\n";
    for (const auto& s : r["samples"]) out << "t = " << str(s["t"]) << ": " << str(s["value"]) << "\n";
    out << "limit at t = 0: " << (r["limit_at_0"].is_null() ? "unbounded" : str(r["limit_at_0"])) << "\n";
  } else if (cmd == "fixtures") {
    for (const auto& row : r["rows"])
      out << (str(row["status"]) == "pass" ? "pass  " : "FAIL  ") << str(row["name"]) << "  " << str(row["detail"])
          << "\n";
    out << r["passed"] << " passed, " << r["failed"] << " failed\n";
  }
}

}  // namespace

json sample_report(const RatFunc& f, const std::string& arc, unsigned depth, const std::string& derivative) {
  const RatFunc g = apply_partials(f, derivative);
  const auto [xt, yt] = parse_arc(arc);
  const ArcRestriction a = restrict_to_arc(g, xt, yt);
  json j;
  j["arc"] = json::array({xt.to_string(), yt.to_string()});
  j["derivative"] = derivative;
  j["function"] = g.to_string();
  j["restriction"] = a.value.to_string();
  j["samples"] = json::array();
  for (unsigned i = 1; i <= depth; ++i) {
    const Rat t = dyadic(i);
    json s;
    s["t"] = to_json(t);
    const Rat d = a.value.den.evaluate(t);
    s["value"] = d == 0 ? json(nullptr) : to_json(a.value.num.evaluate(t) / d);
    j["samples"].push_back(s);
  }
  const auto lim = limit_at_zero(a.value);
  j["limit_at_0"] = lim ? to_json(*lim) : json(nullptr);
  return j;
}

namespace {

struct FixtureRow {
  std::string name;
  std::vector<std::string> args;
  std::string expected;
  /// Empty string on success, else what went wrong.
  std::function<std::string(const json&)> check;
};

std::string expect_eq(const std::string& what, const json& got, const json& want) {
  return got == want ? "" : what + " = " + got.dump() + ", expected " + want.dump();
}

bool same_function(const json& structured, const std::string& expr) {
  return ratfunc_from_json(structured) == parse_expression(expr);
}

std::string check_charts(const json& node, const std::vector<std::string>& exprs) {
  for (std::size_t k = 0; k < exprs.size(); ++k)
    if (k >= node["charts"].size() || !same_function(node["charts"][k]["local_fn_structured"], exprs[k]))
      return "chart " + std::to_string(k) + " differs from " + exprs[k];
  return "";
}

std::vector<FixtureRow> fixture_rows() {
  std::vector<FixtureRow> rows;
  rows.push_back({"classify-cubic-over-circle",
                  {"classify", "x^3/(x^2+y^2)", "--kmax", "2"},
                  "regulous, stages 1, max_verified_k 0, exact d/dx, derivative 1 along (1, 0)",
                  [](const json& r) {
                    std::string e = expect_eq("regulous", r["regulous"], true);
                    if (e.empty()) e = expect_eq("stages", r["stages"], 1);
                    if (e.empty()) e = expect_eq("max_verified_k", r["max_verified_k"], 0);
                    if (e.empty() && !(parse_expression(r["partials"]["dx"].get<std::string>()) ==
                                       parse_expression("(x^4+3*x^2*y^2)/(x^2+y^2)^2")))
                      e = "d/dx = " + r["partials"]["dx"].dump();
                    if (e.empty())
                      e = expect_eq("directional derivative", r["directional_derivatives"][0]["directions"]["(1, 0)"],
                                    "1");
                    return e;
                  }});
  rows.push_back({"resolve-cubic-over-quartic",
                  {"resolve", "x^3/(x^2+y^4)", "--tree"},
                  "stages 2 with charts u/(1+u^2v^4), u^3v/(u^2+v^2), then r^2s/(1+s^2), r^3s^2/(r^2+1)",
                  [](const json& r) {
                    std::string e = expect_eq("stages", r["stages"], 2);
                    if (!e.empty()) return e;
                    const json& root = r["tree"][0];
                    e = check_charts(root, {"x/(1+x^2*y^4)", "x^3*y/(x^2+y^2)"});
                    if (!e.empty()) return e;
                    for (const auto& child : root["children"])
                      if (child["status"] == "blown_up")
                        return check_charts(child, {"x^2*y/(1+y^2)", "x^3*y^2/(x^2+1)"});
                    return std::string("no second stage in the tree");
                  }});
  rows.push_back({"classify-arc-unbounded-derivative",
                  {"classify", "y*x^2/(x^2+y^4)", "--kmax", "1"},
                  "regulous, stages 2",
                  [](const json& r) {
                    std::string e = expect_eq("regulous", r["regulous"], true);
                    return e.empty() ? expect_eq("stages", r["stages"], 2) : e;
                  }});
  rows.push_back({"classify-arc-limit-half",
                  {"classify", "y^2*x^2/(x^2+y^4)", "--kmax", "1"},
                  "regulous, max_verified_k 0",
                  [](const json& r) {
                    std::string e = expect_eq("regulous", r["regulous"], true);
                    return e.empty() ? expect_eq("max_verified_k", r["max_verified_k"], 0) : e;
                  }});
  rows.push_back({"sample-arc-limit-half",
                  {"sample", "y^2*x^2/(x^2+y^4)", "--arc", "t^2,t", "--depth", "6", "--derivative", "x"},
                  "d/dx tends to 1/2 along (t^2, t)",
                  [](const json& r) { return expect_eq("limit", r["limit_at_0"], "1/2"); }});
  rows.push_back({"sample-arc-limit-half-x-axis",
                  {"sample", "y^2*x^2/(x^2+y^4)", "--arc", "t,0", "--depth", "6", "--derivative", "x"},
                  "d/dx tends to 0 along the x axis",
                  [](const json& r) { return expect_eq("limit", r["limit_at_0"], "0"); }});
  rows.push_back({"sample-arc-limit-half-y-axis",
                  {"sample", "y^2*x^2/(x^2+y^4)", "--arc", "0,t", "--depth", "6", "--derivative", "x"},
                  "d/dx tends to 0 along the y axis",
                  [](const json& r) { return expect_eq("limit", r["limit_at_0"], "0"); }});
  rows.push_back({"sample-cubic-over-circle",
                  {"sample", "x^3/(x^2+y^2)", "--arc", "t,0", "--depth", "5"},
                  "values 1/2, 1/4, 1/8, 1/16, 1/32",
                  [](const json& r) {
                    json values = json::array();
                    for (const auto& s : r["samples"]) values.push_back(s["value"]);
                    return expect_eq("values", values, json::array({"1/2", "1/4", "1/8", "1/16", "1/32"}));
                  }});
  rows.push_back({"resolve-two-poles",
                  {"resolve", "x^3*(x-1)^3/((x^2+y^2)*((x-1)^2+y^2))"},
                  "stages 1, poles (0, 0) and (1, 0)",
                  [](const json& r) {
                    std::string e = expect_eq("stages", r["stages"], 1);
                    if (!e.empty()) return e;
                    json pts = json::array();
                    for (const auto& p : r["poles"]) pts.push_back(p["point"]);
                    return expect_eq("poles", pts, json::array({json::array({"0", "0"}), json::array({"1", "0"})}));
                  }});
  for (const auto& [l, m] : {std::pair{1, 3}, std::pair{2, 5}, std::pair{3, 3}}) {
    const std::string expr = "1 - x^" + std::to_string(2 * l + m) + "/(y^2+x^" + std::to_string(2 * l) + ")";
    const unsigned stages = static_cast<unsigned>(l);
    rows.push_back({"resolve-topology-" + std::to_string(l) + "-" + std::to_string(m),
                    {"resolve", expr},
                    "stages " + std::to_string(l),
                    [stages](const json& r) { return expect_eq("stages", r["stages"], stages); }});
  }
  rows.push_back({"certify-worked-example",
                  {"certify", "((x+y)^2+(x-y+y^2)^2)/((x+y^2)^2+y^2)"},
                  "one elimination with the expected intermediate polynomials; certificate verifies",
                  [](const json& r) {
                    std::string e = expect_eq("verified", r["verified"], true);
                    if (!e.empty()) return e;
                    const json& traces = r["certificate"]["provenance"]["step_traces"];
                    if (traces.size() != 1) return std::string("expected one elimination step");
                    auto polys = [](const json& arr) {
                      std::vector<Poly2> v;
                      for (const auto& p : arr) v.push_back(poly_from_json(p));
                      return v;
                    };
                    const auto R = polys(traces[0]["r_terms"]);
                    const auto S = polys(traces[0]["s_terms"]);
                    const Poly2 p1 = parse_polynomial("2*(x^2+y^2)+y^2*(x-y)");
                    const Poly2 p2 = parse_polynomial("y^2*(x+y)");
                    const Poly2 q1 = parse_polynomial("x^2+y^2+x*y^2");
                    const Poly2 q2 = parse_polynomial("y^3");
                    if (R.size() != 2 || R[0] != p1 || (R[1] != p2 && R[1] != -p2)) return std::string("p-terms differ");
                    if (S.size() != 2 || S[0] != q1 || (S[1] != q2 && S[1] != -q2)) return std::string("q-terms differ");
                    return std::string();
                  }});
  return rows;
}

}  // namespace

json fixtures_report(const std::string& golden_dir, bool write_golden) {
  json rep;
  rep["rows"] = json::array();
  unsigned passed = 0, failed = 0;
  for (const auto& row : fixture_rows()) {
    std::vector<std::string> args{"--format", "json"};
    args.insert(args.end(), row.args.begin(), row.args.end());
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    json e;
    e["name"] = row.name;
    json cmd = json::array();
    for (const auto& a : row.args) cmd.push_back(a);
    e["command"] = cmd;
    e["expected"] = row.expected;
    std::string detail;
    json env;
    if (code != kExitOk) {
      detail = "exit code " + std::to_string(code) + ": " + err.str();
      while (!detail.empty() && detail.back() == '\n') detail.pop_back();
    } else {
      env = json::parse(out.str());
      try {
        detail = row.check(env["report"]);
      } catch (const std::exception& ex) {
        detail = std::string("check failed: ") + ex.what();
      }
    }
    if (detail.empty() && !golden_dir.empty()) {
      const std::string path = golden_dir + "/" + row.name + ".json";
      if (write_golden) {
        std::ofstream g(path);
        g << env.dump(2) << "\n";
      } else {
        std::ifstream g(path);
        if (!g) {
          detail = "missing golden file " + path;
        } else {
          std::stringstream ss;
          ss << g.rdbuf();
          if (ss.str() != env.dump(2) + "\n") detail = "report differs from " + path;
        }
      }
    }
    e["status"] = detail.empty() ? "pass" : "fail";
    e["detail"] = detail;
    (detail.empty() ? passed : failed) += 1;
    rep["rows"].push_back(e);
  }
  rep["passed"] = passed;
  rep["failed"] = failed;
  return rep;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of planar regulous functions", "regulous"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  bool timing = false;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", timing, "Include wall-clock timing in the report");

  std::string expr, arc, derivative, p_file, q_file, out_file, cert_path, golden;
  unsigned kmax = 2, max_stages = 32, k = 1, budget = 64, depth = 8;
  bool tree = false, parallel = false, write_golden = false;

  auto* classify = app.add_subcommand("classify", "Regulousness, blow-up stages and smoothness class");
  classify->add_option("EXPR", expr, "Rational function in x, y")->required();
  classify->add_option("--kmax", kmax, "Highest derivative order examined");
  classify->add_flag("--parallel", parallel, "Work on distinct poles concurrently");

  auto* res = app.add_subcommand("resolve", "Resolve the indeterminacies by point blow-ups");
  res->add_option("EXPR", expr, "Rational function in x, y")->required();
  res->add_flag("--tree", tree, "Include the blow-up tree");
  res->add_option("--max-stages", max_stages, "Stage budget");
  res->add_flag("--parallel", parallel, "Work on distinct poles concurrently");

  auto* cert = app.add_subcommand("certify", "Write f as a sum of squares of regulous functions");
  cert->add_option("EXPR", expr, "Nonnegative rational function in x, y")->required();
  cert->add_option("--p-witness", p_file, "SOS witness file for the numerator");
  cert->add_option("--q-witness", q_file, "SOS witness file for the denominator");
  cert->add_option("--out", out_file, "Certificate output file");

  auto* ver = app.add_subcommand("verify", "Check a certificate file");
  ver->add_option("CERT", cert_path, "Certificate file")->required();

  auto* flat = app.add_subcommand("flat-power", "Least power of f found to be k-flat");
  flat->add_option("EXPR", expr, "Regulous function in x, y")->required();
  flat->add_option("--k", k, "Flatness order")->required();
  flat->add_option("--budget", budget, "Largest exponent tried");

  auto* smp = app.add_subcommand("sample", "Exact values along an arc at t = 2^-i");
  smp->add_option("EXPR", expr, "Rational function in x, y")->required();
  smp->add_option("--arc", arc, "Arc \"X(t),Y(t)\" with polynomial coordinates")->required();
  smp->add_option("--depth", depth, "Number of samples");
  smp->add_option("--derivative", derivative, "Sample a partial derivative, e.g. x or xy");

  auto* fix = app.add_subcommand("fixtures", "Regression fixtures");
  fix->require_subcommand(1);
  auto* fix_run = fix->add_subcommand("run", "Run every fixture");
  fix_run->add_option("--golden", golden, "Compare reports with the golden files in this directory");
  fix_run->add_flag("--write-golden", write_golden, "Write the golden files instead of comparing");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (*classify) o = do_classify(expr, kmax, parallel);
    else if (*res) o = do_resolve(expr, tree, max_stages, parallel);
    else if (*cert) o = do_certify(expr, p_file, q_file, out_file);
    else if (*ver) o = do_verify(cert_path);
    else if (*flat) o = do_flat_power(expr, k, budget);
    else if (*smp) o = do_sample(expr, arc, depth, derivative);
    else if (*fix_run) {
      o.report["command"] = "fixtures";
      o.report["report"] = fixtures_report(golden, write_golden);
      o.code = o.report["report"]["failed"].get<unsigned>() == 0 ? kExitOk : kExitError;
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    if (format == "json") {
      json j;
      j["error"] = {{"kind", e.kind()}, {"message", e.what()}};
      out << j.dump(2) << "\n";
    }
    return dynamic_cast<const Unsupported*>(&e) ? kExitUnsupported : kExitError;
  }
  if (timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    o.report["timing_ms"] = ms;
  }
  if (format == "json") {
    out << o.report.dump(2) << "\n";
  } else {
    render_text(o.report, out);
    if (timing) out << "time: " << o.report["timing_ms"].get<double>() << " ms\n";
  }
  return o.code;
}

}  // namespace regulous
