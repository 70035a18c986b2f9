// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "regulous/algebra.hpp"
#include "regulous/certify.hpp"
#include "regulous/classify.hpp"
#include "regulous/cli.hpp"
#include "regulous/corpus.hpp"
#include "regulous/errors.hpp"
#include "regulous/parse.hpp"

using namespace regulous;

namespace {

/// Collects failed expectations for one criterion.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

json cli(std::vector<std::string> args, int expected_code = kExitOk) {
  args.insert(args.begin(), {"--format", "json"});
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  if (code != expected_code) throw std::runtime_error("exit code " + std::to_string(code) + ": " + err.str());
  return json::parse(out.str());
}

std::string cli_raw(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  std::ostringstream out, err;
  run_command(args, out, err);
  return out.str();
}

RatFunc F(const std::string& s) { return parse_expression(s); }
Poly2 P(const std::string& s) { return parse_polynomial(s); }

bool same(const json& structured, const std::string& expr) { return ratfunc_from_json(structured) == F(expr); }

Poly2 sum_sq(const std::vector<Poly2>& v) {
  Poly2 s;
  for (const auto& p : v) s += p * p;
  return s;
}

void criterion1(Checker& c) {
  const json r = cli({"classify", "x^3/(x^2+y^2)", "--kmax", "2"})["report"];
  c.expect(r["regulous"] == true, "regulous");
  c.expect(r["stages"] == 1, "stages = 1");
  c.expect(r["max_verified_k"] == 0, "max_verified_k = 0");
  c.expect(F(r["partials"]["dx"].get<std::string>()) == F("(x^4+3*x^2*y^2)/(x^2+y^2)^2"), "d/dx");
  c.expect(r["directional_derivatives"][0]["directions"]["(1, 0)"] == "1", "directional derivative");
}

void criterion2(Checker& c) {
  const json r = cli({"resolve", "x^3/(x^2+y^4)", "--tree"})["report"];
  c.expect(r["stages"] == 2, "stages = 2");
  const json& root = r["tree"][0];
  c.expect(same(root["charts"][0]["local_fn_structured"], "x/(1+x^2*y^4)"), "chart u/(1+u^2v^4)");
  c.expect(same(root["charts"][1]["local_fn_structured"], "x^3*y/(x^2+y^2)"), "chart u^3v/(u^2+v^2)");
  bool second = false;
  for (const auto& child : root["children"])
    if (child["status"] == "blown_up")
      second = same(child["charts"][0]["local_fn_structured"], "x^2*y/(1+y^2)") &&
               same(child["charts"][1]["local_fn_structured"], "x^3*y^2/(x^2+1)");
  c.expect(second, "second-stage charts r^2s/(1+s^2), r^3s^2/(r^2+1)");
}

void criterion3(Checker& c) {
  const json a = cli({"classify", "y*x^2/(x^2+y^4)"})["report"];
  c.expect(a["regulous"] == true && a["stages"] == 2, "y x^2/(x^2+y^4): regulous, stages 2");
  const json b = cli({"classify", "y^2*x^2/(x^2+y^4)"})["report"];
  c.expect(b["max_verified_k"] == 0, "y^2 x^2/(x^2+y^4): max_verified_k = 0");
  const std::string g = "y^2*x^2/(x^2+y^4)";
  c.expect(cli({"sample", g, "--arc", "t^2,t", "--derivative", "x"})["report"]["limit_at_0"] == "1/2",
           "limit 1/2 along (t^2, t)");
  c.expect(cli({"sample", g, "--arc", "t,0", "--derivative", "x"})["report"]["limit_at_0"] == "0", "x axis");
  c.expect(cli({"sample", g, "--arc", "0,t", "--derivative", "x"})["report"]["limit_at_0"] == "0", "y axis");
}

void criterion4(Checker& c) {
  const json r = cli({"resolve", "x^3*(x-1)^3/((x^2+y^2)*((x-1)^2+y^2))"})["report"];
  c.expect(r["stages"] == 1, "stages = 1");
  json pts = json::array();
  for (const auto& p : r["poles"]) pts.push_back(p["point"]);
  c.expect(pts == json::array({json::array({"0", "0"}), json::array({"1", "0"})}), "poles {(0,0), (1,0)}");
}

void criterion5(Checker& c) {
  for (const auto& [l, m] : {std::pair{1, 3}, std::pair{2, 5}, std::pair{3, 3}}) {
    const std::string e = "1 - x^" + std::to_string(2 * l + m) + "/(y^2+x^" + std::to_string(2 * l) + ")";
    c.expect(cli({"resolve", e})["report"]["stages"] == l, e + ": stages " + std::to_string(l));
  }
}

void criterion6(Checker& c) {
  unsigned members = 0;
  for (const auto& e : corpus()) {
    if (!e.regulous) continue;
    ++members;
    const RatFunc f = F(e.expr);
    const ResolutionReport r = resolve(f);
    c.expect(r.regulous, e.name + " regulous");
    c.expect((r.stages <= 1) == one_blowup_criterion(f).holds, e.name + ": criterion disagrees with stages");
  }
  c.expect(members >= 12, "corpus has at least 12 regulous functions");
}

void criterion7(Checker& c) {
  const std::string expr = "((x+y)^2+(x-y+y^2)^2)/((x+y^2)^2+y^2)";
  const auto path = std::filesystem::temp_directory_path() / "regulous-acceptance-worked.json";
  const json r = cli({"certify", expr, "--out", path.string()})["report"];
  const json& traces = r["certificate"]["provenance"]["step_traces"];
  c.expect(traces.size() == 1, "one elimination step");
  if (traces.size() == 1) {
    std::vector<Poly2> R, S;
    for (const auto& p : traces[0]["r_terms"]) R.push_back(poly_from_json(p));
    for (const auto& p : traces[0]["s_terms"]) S.push_back(poly_from_json(p));
    const Poly2 p2 = P("y^2*(x+y)"), q2 = P("y^3");
    c.expect(R.size() == 2 && R[0] == P("2*(x^2+y^2)+y^2*(x-y)") && (R[1] == p2 || R[1] == -p2), "p1, p2");
    c.expect(S.size() == 2 && S[0] == P("x^2+y^2+x*y^2") && (S[1] == q2 || S[1] == -q2), "q1, q2");
  }
  const Poly2 D = P("(x^2+y^2)*((x+y^2)^2+y^2)");
  const RatSosCertificate cert = certificate_from_json(r["certificate"]);
  bool divides = true;
  for (const auto& t : cert.terms) divides = divides && try_divide(D, t.den()).has_value();
  c.expect(divides, "term denominators divide (x^2+y^2)((x+y^2)^2+y^2)");
  const json v = cli({"verify", path.string()})["report"];
  c.expect(v["ok"] == true, "verify accepts");
  bool all = !v["terms"].empty();
  for (const auto& t : v["terms"]) {
    all = all && t["ok"] == true;
    for (const auto& p : t["poles"])
      all = all && p["definiteness"]["status"] == "positive_definite" && p["continuity"]["kind"] == "limit";
  }
  c.expect(all, "every term one-stage regulous");
}

void criterion8(Checker& c) {
  const std::string expr = "((x+y)^2+(x-y+y^2)^2)/((x+y^2)^2+y^2)";
  const auto syn = syntactic_sos(expr);
  const RatSosCertificate cert = certify_nonnegative(F(expr), syn->first, syn->second);
  for (std::size_t k = 0; k < cert.terms.size(); ++k) {
    RatSosCertificate bad = cert;
    bad.terms[k] = bad.terms[k] * RatFunc(2);
    const VerificationReport v = verify_certificate(bad);
    c.expect(!v.identity_ok && v.difference == RatFunc(3) * cert.terms[k] * cert.terms[k],
             "tampered term " + std::to_string(k) + ": exact residual");
  }
  RatSosCertificate degenerate = cert;
  degenerate.terms[0] = RatFunc::reduce(cert.terms[0].num(), P("x^2+y^4"));
  const VerificationReport v = verify_certificate(degenerate);
  c.expect(!v.membership_ok && !v.terms[0].definiteness.empty() &&
               v.terms[0].definiteness[0].status == DefinitenessVerdict::Status::degenerate,
           "x^2+y^4 denominator: degenerate lowest form");
}

void criterion9(Checker& c) {
  gen::Engine rng(9);
  // Product identity.
  for (int n = 0; n < 500; ++n) {
    std::vector<Poly2> X(static_cast<std::size_t>(gen::uniform(rng, 1, 4))), Y(static_cast<std::size_t>(gen::uniform(rng, 1, 4)));
    for (auto& p : X) p = gen::poly2(rng, 2);
    for (auto& p : Y) p = gen::poly2(rng, 2);
    if (sum_sq(product_of_sos(X, Y)) != sum_sq(X) * sum_sq(Y)) c.expect(false, "product identity");
  }
  // Sturm counts vs planted roots.
  for (int n = 0; n < 500; ++n) {
    std::set<Rat> roots;
    for (long i = gen::uniform(rng, 1, 5); i > 0; --i) roots.insert(gen::small_rat(rng, 12, 5));
    Poly1 p = Poly1{Rat(gen::uniform(rng, 1, 5)), 0, 1};
    for (const Rat& r : roots) p *= Poly1{-r, 1}.pow(static_cast<unsigned>(gen::uniform(rng, 1, 2)));
    Rat a = gen::small_rat(rng, 12, 3), b = gen::small_rat(rng, 12, 3);
    if (b < a) std::swap(a, b);
    unsigned expected = 0;
    for (const Rat& r : roots) expected += (a <= r && r <= b);
    if (sturm_count(p, Interval::closed(a, b)) != expected) c.expect(false, "Sturm count");
  }
  // Order inequality.
  for (int n = 0; n < 200;) {
    const Point a = gen::point(rng);
    const Poly2 dx = Poly2::x() - a.x, dy = Poly2::y() - a.y;
    const RatFunc f = RatFunc::reduce(gen::nonzero_poly2(rng, 4) * dx, (dx * dx + dy * dy) * (Poly2(1) + gen::poly2(rng, 1).pow(2)));
    const RatFunc df = derivative_rf(f, gen::uniform(rng, 0, 1) ? Axis::x : Axis::y);
    if (f.is_zero() || df.is_zero()) continue;
    if (order_at_rf(df, a) < order_at_rf(f, a) - 1) c.expect(false, "order inequality");
    ++n;
  }
  // Chart soundness on every tree, flatness powers, pipeline postconditions.
  for (const auto& e : corpus()) {
    const RatFunc f = F(e.expr);
    const ResolutionReport r = resolve(f);
    std::function<void(const ResolutionNode&)> walk = [&](const ResolutionNode& node) {
      for (const auto& ch : node.charts)
        for (int n = 0; n < 50; ++n) {
          const Point p = gen::point(rng);
          const auto lv = ch.local_fn.value_at(p), gv = f.value_at(push_forward(ch.composition, p));
          if (lv && gv && *lv != *gv) c.expect(false, e.name + ": chart soundness");
        }
      for (const auto& child : node.children) walk(child);
    };
    for (const auto& root : r.tree) walk(root);
    if (e.regulous && e.stages <= 1)
      for (unsigned k = 1; k <= 2; ++k)
        if (!verify_k_flat(f, 2 * k, k)) c.expect(false, e.name + ": f^" + std::to_string(2 * k) + " not k-flat");
  }
  for (const auto& fx : certify_fixtures()) {
    if (!fx.terms) continue;
    const RatFunc f = F(fx.expr);
    const auto syn = syntactic_sos(fx.expr);
    PipelineState s;
    s.f = f;
    s.p_rep = syn->first;
    s.q_rep = syn->second;
    s.p = s.p_rep.expand();
    s.q = s.q_rep.expand();
    s.bad = bad_set(f, s.q, s.d);
    while (!s.bad.empty()) {
      const std::vector<Point> before = s.bad;
      const PipelineState n = bad_point_step(s, before.front());
      const bool ok = RatFunc::reduce(n.p, n.q) == f && n.q_rep.expand() == n.q &&
                      n.bad == std::vector<Point>(before.begin() + 1, before.end());
      c.expect(ok, fx.name + ": step postconditions");
      s = n;
    }
  }
}

void criterion10(Checker& c) {
  const std::string a = cli_raw({"fixtures", "run"});
  const std::string b = cli_raw({"fixtures", "run"});
  c.expect(a == b, "byte-identical fixture output");
  const json j = json::parse(a);
  c.expect(j["report"]["failed"] == 0, "all fixtures pass");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
      {"classify x^3/(x^2+y^2): regulous, stages 1, C^0, exact partial and directional derivative", criterion1},
      {"resolve x^3/(x^2+y^4): two stages with the expected charts", criterion2},
      {"arc examples: regulous, stages 2, derivative limit 1/2 along (t^2, t)", criterion3},
      {"two-pole example: one stage, poles (0,0) and (1,0)", criterion4},
      {"topology family: stages equal l", criterion5},
      {"one-blow-up criterion agrees with resolution on the corpus", criterion6},
      {"worked sum-of-squares example: trace, denominator, verification", criterion7},
      {"verifier negative controls", criterion8},
      {"property suites", criterion9},
      {"fixture determinism", criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 10) c.failures.push_back("took " + std::to_string(secs) + " s");
    std::cout << "criterion " << (k + 1) << ": " << (c.failures.empty() ? "PASS" : "FAIL") << "  "
              << criteria[k].first;
    for (const auto& f : c.failures) std::cout << "\n    " << f;
    std::cout << std::endl;
    failed += !c.failures.empty();
  }
  return failed == 0 ? 0 : 1;
}
