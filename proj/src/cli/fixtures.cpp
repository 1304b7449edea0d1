#include "symprod/cli/fixtures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "symprod/cli/expression.hpp"
#include "symprod/errors.hpp"
#include "symprod/parallel.hpp"

#ifndef SYMPROD_FIXTURE_DIR
#define SYMPROD_FIXTURE_DIR "fixtures"
#endif

namespace symprod::cli {

namespace {

// A check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string(const Json&)>;

std::string str(const Json& j, const char* key) { return j.at(key).get<std::string>(); }

RationalMap1 map_of(const Json& j) { return parse_map(str(j, "map")).map; }

PkPoint tuple_of(const std::string& text) {
  PointExpression pe = parse_point(text);
  if (!pe.is_tuple) fail(ErrorCode::invalid_argument, "expected a tuple, got " + text);
  return pe.tuple;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string mismatch(const std::string& got, const std::string& want) {
  return "got " + got + ", expected " + want;
}

std::string close(double got, double want, double tol) {
  return std::abs(got - want) <= tol ? std::string() : mismatch(num(got), num(want) + " +/- " + num(tol));
}

std::string substitute(std::string text, const std::string& placeholder, const std::string& value) {
  for (std::size_t at; (at = text.find(placeholder)) != std::string::npos;)
    text.replace(at, placeholder.size(), "(" + value + ")");
  return text;
}

std::string check_symmetrize(const Json& j) {
  const unsigned k = j.at("k");
  const MorphismPk F = symmetrize(map_of(j), k).normalized();
  std::vector<std::string> names;
  for (unsigned i = 0; i <= k; ++i) names.push_back("v" + std::to_string(i));
  const auto& want = j.at("expected");
  if (want.size() != F.components().size()) return "component count differs";
  for (std::size_t i = 0; i < want.size(); ++i)
    if (F[i].pretty(names) != want[i].get<std::string>())
      return "component " + std::to_string(i) + ": " + mismatch(F[i].pretty(names), want[i]);
  return {};
}

std::string check_commutation(const Json& j) {
  const std::string placeholder = "{" + str(j, "parameter") + "}";
  const int degree = j.at("expected_degree");
  std::size_t count = 0;
  for (const auto& v : j.at("values"))
    for (const auto& kj : j.at("k")) {
      const unsigned k = kj;
      const RationalMap1 f = parse_map(substitute(str(j, "map"), placeholder, v.get<std::string>())).map;
      const MorphismPk F = symmetrize(f, k);
      if (F.degree() != degree) return "degree " + std::to_string(F.degree()) + " at " + v.get<std::string>();
      if (!commutes_symbolically(f, F, k))
        return "identity fails at " + v.get<std::string>() + ", k = " + std::to_string(k);
      ++count;
    }
  return count ? std::string() : "no instances";
}

std::string check_eta(const Json& j) {
  std::vector<PkPoint> pts;
  for (const auto& p : j.at("points")) pts.push_back(tuple_of(p));
  const PkPoint got = eta(pts);
  return got == tuple_of(str(j, "expected")) ? std::string() : mismatch(got.to_string(), str(j, "expected"));
}

std::string check_eta_tilde(const Json& j) {
  const PointExpression pe = parse_point(str(j, "point"));
  const PkPoint got = j.contains("k") ? eta_tilde(pe.point, j.at("k").get<unsigned>()) : eta_tilde(pe.point);
  return got == tuple_of(str(j, "expected")) ? std::string() : mismatch(got.to_string(), str(j, "expected"));
}

std::string check_apply(const Json& j) {
  const MorphismPk F = symmetrize(map_of(j), j.at("k").get<unsigned>());
  const PkPoint got = F.apply(tuple_of(str(j, "point")));
  return got == tuple_of(str(j, "expected")) ? std::string() : mismatch(got.to_string(), str(j, "expected"));
}

std::string check_transfer(const Json& j) {
  const RationalMap1 f = map_of(j);
  const AlgebraicPoint P = parse_point(str(j, "point")).point;
  const AlgebraicPoint Q = apply(f, P);
  const std::string mp = Q.minpoly().to_string("x");
  if (mp != str(j, "expected_minpoly")) return mismatch(mp, str(j, "expected_minpoly"));
  const unsigned k = static_cast<unsigned>(P.field->degree());
  if (!(eta_tilde(Q, k) == symmetrize(f, k).apply(eta_tilde(P, k)))) return "eta_tilde does not intertwine";
  return {};
}

std::string check_form(const Json& j) {
  const PkPoint p = tuple_of(str(j, "point"));
  const BinaryForm g = form_of_point(p);
  if (g.to_string() != str(j, "expected")) return mismatch(g.to_string(), str(j, "expected"));
  return point_of_form(g) == p ? std::string() : "round trip changed the point";
}

std::string check_naive_height(const Json& j) {
  return close(naive_height(tuple_of(str(j, "point"))), j.at("expected"), j.at("tolerance"));
}

std::string check_canonical_height(const Json& j) {
  const RationalMap1 f = map_of(j);
  const PointExpression pe = parse_point(str(j, "point"));
  HeightOptions opt;
  opt.tol = j.value("tol", 1e-6);
  HeightValue h;
  if (pe.is_tuple)
    h = canonical_height(symmetrize(f, pe.tuple.dim()), pe.tuple, opt);
  else if (j.contains("k"))
    h = canonical_height(symmetrize(f, j.at("k").get<unsigned>()), eta_tilde(pe.point, j.at("k").get<unsigned>()), opt);
  else
    h = canonical_height_nf(f, pe.point, opt);
  if (h.error_bound > opt.tol) return "error bound " + num(h.error_bound) + " above tol";
  return close(h.value, j.at("expected"), j.at("tolerance"));
}

std::string check_green(const Json& j) {
  const MorphismPk F = symmetrize(map_of(j), j.at("k").get<unsigned>());
  const std::string place = str(j, "place");
  const LocalGreen g = green_local(F, tuple_of(str(j, "point")), place == "inf" ? Integer(0) : Integer(place));
  return close(g.value, j.at("expected"), j.at("tolerance"));
}

std::string check_bound(const Json& j) {
  const MorphismPk F = symmetrize(map_of(j), j.at("k").get<unsigned>());
  const HeightConstant hc = height_comparison_constant(F);
  if (!hc.certified) return "height constant not certified";
  return close(preperiodicity_bound(F), j.at("expected"), j.at("tolerance"));
}

std::string check_orbit(const Json& j) {
  const RationalMap1 f = map_of(j);
  const PointExpression pe = parse_point(str(j, "point"));
  const OrbitClassification oc =
      pe.is_tuple ? orbit_classify(symmetrize(f, pe.tuple.dim()), pe.tuple) : orbit_classify(f, pe.point);
  const std::string status = oc.preperiodic() ? "preperiodic" : "wandering";
  if (status != str(j, "expected_status")) return mismatch(status, str(j, "expected_status"));
  if (oc.preperiodic() && (oc.tail != j.value("expected_tail", 0u) || oc.period != j.value("expected_period", 0u)))
    return mismatch("tail " + std::to_string(oc.tail) + " period " + std::to_string(oc.period),
                    "tail " + std::to_string(j.value("expected_tail", 0u)) + " period " +
                        std::to_string(j.value("expected_period", 0u)));
  return {};
}

std::string check_graph(const Json& j) {
  const RationalMap1 f = map_of(j);
  const GraphReport r = build_graph_report(f, j.at("k"), j.at("n_max"), j.value("budget", default_budget));
  std::vector<std::string> rational;
  std::size_t in_degree = 0;
  const int field_degree = j.value("field_degree", 0);
  for (const auto& c : r.classes) {
    if (c.cls.degree() == 1) rational.push_back(class_label(c.cls));
    if (c.cls.degree() == field_degree) in_degree += static_cast<std::size_t>(field_degree);
  }
  std::vector<std::string> want = j.at("expected_rational");
  std::sort(rational.begin(), rational.end());
  std::sort(want.begin(), want.end());
  if (rational != want) return mismatch(Json(rational).dump(), Json(want).dump());
  const auto K = NumberField::make(parse_polynomial(str(j, "field")));
  const std::size_t over_K = points_over_field(r.classes, K);
  const std::size_t want_K = j.at("expected_field_points");
  if (over_K != want_K) return mismatch(std::to_string(over_K) + " points over the field", std::to_string(want_K));
  // every recovered point of the field's degree must lie in the given field
  if (over_K != rational.size() + in_degree) return "a point of the field's degree lies in another field";
  return {};
}

std::string check_periodic_search(const Json& j) {
  const RationalMap1 f = map_of(j);
  const unsigned degree = j.at("expected_degree"), period = j.at("expected_period");
  for (const auto& pp : rational_periodic_points(f, j.at("k").get<unsigned>(), j.at("n_max").get<unsigned>(),
                                                 j.value("budget", default_budget)))
    for (const auto& cls : conjugate_points(pp.point)) {
      if (cls.degree() != static_cast<int>(degree)) continue;
      const OrbitClassification oc = orbit_classify(f, cls.point);
      if (oc.preperiodic() && oc.tail == 0 && oc.period == period) return {};
    }
  return "no degree-" + std::to_string(degree) + " point of exact period " + std::to_string(period);
}

std::string check_preimages(const Json& j) {
  const RationalMap1 f = map_of(j);
  const MorphismPk F = symmetrize(f, j.at("k").get<unsigned>());
  const PkPoint q = tuple_of(str(j, "point"));
  const auto pre = rational_preimages(f, F, q);
  for (const auto& p : pre)
    if (!(F.apply(p) == q)) return "a returned point is not a preimage";
  return pre.size() == j.at("expected_count").get<std::size_t>()
             ? std::string()
             : mismatch(std::to_string(pre.size()), std::to_string(j.at("expected_count").get<std::size_t>()));
}

std::string joined(const BadPrimeSet& s) {
  std::string t;
  for (const auto& p : s) t += (t.empty() ? "" : ",") + to_string(p);
  return "{" + t + "}";
}

std::string check_bad_primes(const Json& j) {
  const RationalMap1 f = map_of(j);
  BadPrimeSet want;
  for (const auto& p : j.at("expected")) want.push_back(Integer(p.get<std::string>()));
  if (bad_primes(f) != want) return mismatch(joined(bad_primes(f)), joined(want));
  for (const auto& kj : j.value("k", Json::array()))
    if (bad_primes_sym(f, kj.get<unsigned>()) != want) return "symmetric product disagrees at k = " + kj.dump();
  return {};
}

std::string check_factor_integer(const Json& j) {
  std::string got;
  for (const auto& [p, e] : factor_integer(Integer(str(j, "n"))))
    got += (got.empty() ? "" : "*") + to_string(p) + (e > 1 ? "^" + std::to_string(e) : "");
  return got == str(j, "expected") ? std::string() : mismatch(got, str(j, "expected"));
}

std::string check_period_bound(const Json& j) {
  PeriodBoundInput in{Integer(str(j, "Np")), j.at("k").get<unsigned>(), Integer(str(j, "p")), Integer(str(j, "v"))};
  const std::string got = to_string(period_bound(in));
  return got == str(j, "expected") ? std::string() : mismatch(got, str(j, "expected"));
}

std::string check_exponent(const Json& j) {
  const unsigned got = exponent_bound(Integer(str(j, "p")), Integer(str(j, "v")));
  return got == j.at("expected").get<unsigned>() ? std::string()
                                                 : mismatch(std::to_string(got), j.at("expected").dump());
}

std::string check_periods_mod_p(const Json& j) {
  const auto got = periods_mod_p(map_of(j), j.at("p"), j.at("k"));
  const std::set<unsigned> want = j.at("expected");
  return got == want ? std::string() : mismatch(Json(got).dump(), Json(want).dump());
}

std::string check_multiplier_f(const Json& j) {
  const NFElem got = multiplier_f(map_of(j), parse_point(str(j, "point")).point, j.at("period"));
  return got.to_string() == str(j, "expected") ? std::string() : mismatch(got.to_string(), str(j, "expected"));
}

std::string check_multiplier_F(const Json& j) {
  const RationalMap1 f = map_of(j);
  const PkPoint p = tuple_of(str(j, "point"));
  const unsigned n = j.at("period");
  const MultiplierReport m = j.contains("chart") ? multiplier_F(f, p.dim(), p, n, j.at("chart").get<std::size_t>())
                                                 : multiplier_F(f, p.dim(), p, n);
  const std::string got = factored_string(m.charpoly);
  return got == str(j, "expected") ? std::string() : mismatch(got, str(j, "expected"));
}

std::string check_critical(const Json& j) {
  std::vector<std::string> got;
  for (const auto& c : critical_points(map_of(j)))
    got.push_back(class_label(c) + (c.multiplicity > 1 ? "^" + std::to_string(c.multiplicity) : ""));
  std::vector<std::string> want = j.at("expected");
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want ? std::string() : mismatch(Json(got).dump(), Json(want).dump());
}

std::string check_pcf(const Json& j) {
  const RationalMap1 f = map_of(j);
  const unsigned k = j.value("k", 1u);
  const PCFCertificate c = k > 1 ? is_strongly_pcf_symmetric(f, k) : is_pcf(f);
  for (const auto& co : c.critical)
    if (co.orbit.preperiodic() != c.pcf && c.pcf) return "certificate contradicts the verdict";
  return c.pcf == j.at("expected").get<bool>() ? std::string()
                                               : mismatch(c.pcf ? "PCF" : "not PCF", j.at("expected").dump());
}

const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table{
      {"symmetrize", check_symmetrize},
      {"commutation", check_commutation},
      {"eta", check_eta},
      {"eta_tilde", check_eta_tilde},
      {"apply", check_apply},
      {"transfer", check_transfer},
      {"form", check_form},
      {"naive_height", check_naive_height},
      {"canonical_height", check_canonical_height},
      {"green_local", check_green},
      {"preperiodicity_bound", check_bound},
      {"orbit", check_orbit},
      {"preperiodic_graph", check_graph},
      {"periodic_search", check_periodic_search},
      {"preimages", check_preimages},
      {"bad_primes", check_bad_primes},
      {"factor_integer", check_factor_integer},
      {"period_bound", check_period_bound},
      {"exponent_bound", check_exponent},
      {"periods_mod_p", check_periods_mod_p},
      {"multiplier_f", check_multiplier_f},
      {"multiplier_F", check_multiplier_F},
      {"critical_points", check_critical},
      {"pcf", check_pcf},
  };
  return table;
}

}  // namespace

std::size_t FixtureReport::passed() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
}

std::string default_fixture_path() { return std::string(SYMPROD_FIXTURE_DIR) + "/corpus.json"; }

FixtureReport run_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot read fixture corpus " + path);
  Json corpus;
  try {
    corpus = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::io_error, std::string("malformed fixture corpus: ") + e.what());
  }
  return run_fixtures(corpus);
}

FixtureReport run_fixtures(const Json& corpus) {
  const Json& list = corpus.at("fixtures");
  FixtureReport report;
  report.results.resize(list.size());
  reset_op_counts();
  parallel_for(list.size(), [&](std::size_t i) {
    const Json& fx = list[i];
    FixtureResult& r = report.results[i];
    r.name = fx.value("name", "fixture-" + std::to_string(i));
    r.kind = fx.value("kind", "");
    r.provenance = fx.value("provenance", "");
    try {
      const auto it = checks().find(r.kind);
      if (it == checks().end()) {
        r.detail = "unknown fixture kind '" + r.kind + "'";
        return;
      }
      if (r.provenance != "published" && r.provenance != "derived" && r.provenance != "trivial") {
        r.detail = "missing provenance";
        return;
      }
      r.detail = it->second(fx);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
  });
  for (std::size_t i = 0; i < op_count; ++i) report.op_calls[i] = op_calls(static_cast<Op>(i));
  return report;
}

Json fixture_report_json(const FixtureReport& r) {
  Json j = json_header("fixtures run");
  Json list = Json::array();
  for (const auto& x : r.results)
    list.push_back({{"name", x.name},
                    {"kind", x.kind},
                    {"provenance", x.provenance},
                    {"passed", x.passed},
                    {"detail", x.detail}});
  j["fixtures"] = list;
  j["passed"] = r.passed();
  j["total"] = r.results.size();
  Json uncovered = Json::array();
  for (std::size_t i = 0; i < op_count; ++i)
    if (r.op_calls[i] == 0) uncovered.push_back(std::string(op_name(static_cast<Op>(i))));
  j["uncovered_operations"] = uncovered;
  return j;
}

std::string fixture_report_text(const FixtureReport& r) {
  std::ostringstream os;
  for (const auto& x : r.results) {
    os << (x.passed ? "PASS  " : "FAIL  ") << x.name << "  [" << x.provenance << "]";
    if (!x.detail.empty()) os << "  " << x.detail;
    os << "\n";
  }
  os << r.passed() << "/" << r.results.size() << " fixtures passed\n";
  std::string uncovered;
  for (std::size_t i = 0; i < op_count; ++i)
    if (r.op_calls[i] == 0) uncovered += " " + std::string(op_name(static_cast<Op>(i)));
  if (!uncovered.empty()) os << "operations not exercised:" << uncovered << "\n";
  return os.str();
}

}  // namespace symprod::cli
