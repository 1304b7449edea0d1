#include "symprod/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "symprod/cli/expression.hpp"
#include "symprod/cli/fixtures.hpp"
#include "symprod/cli/report.hpp"
#include "symprod/errors.hpp"

namespace symprod::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string map;
  std::string point;
  unsigned k = 0;  // 0: not given
  double tol = 1e-6;
  unsigned n_max = 0;
  std::uint64_t budget = default_budget;
  bool json = false;
  std::string dot;
  unsigned precision = 128;
  std::string Np, p, v = "1";
  std::string fixture_file;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

unsigned k_or(const Options& o, unsigned fallback) { return o.k ? o.k : fallback; }

PointExpression point_for(const Options& o) {
  PointExpression pe = parse_point(o.point);
  if (pe.is_tuple && o.k && o.k != pe.tuple.dim())
    throw UsageError("--k " + std::to_string(o.k) + " does not match the point's dimension " +
                     std::to_string(pe.tuple.dim()));
  return pe;
}

int cmd_symmetrize(const Options& o, std::ostream& out) {
  const MapExpression m = parse_map(o.map);
  const unsigned k = k_or(o, 1);
  const MorphismPk F = symmetrize(m.map, k).normalized();
  std::vector<std::string> names;
  for (unsigned i = 0; i <= k; ++i) names.push_back("v" + std::to_string(i));
  if (o.json) {
    Json j = json_header("symmetrize");
    j["map"] = m.canonical();
    j["k"] = k;
    j["degree"] = F.degree();
    Json comps = Json::array(), display = Json::array();
    for (const auto& c : F.components()) {
      comps.push_back(c.serialize());
      display.push_back(c.pretty(names));
    }
    j["components"] = comps;
    j["display"] = display;
    emit(out, j);
    return exit_ok;
  }
  out << "map: " << m.canonical() << "\n";
  out << "symmetric product k = " << k << ": degree " << F.degree() << " map of P^" << k << "\n";
  for (std::size_t i = 0; i < F.components().size(); ++i) out << "  F" << i << " = " << F[i].pretty(names) << "\n";
  return exit_ok;
}

int cmd_preperiodic(const Options& o, std::ostream& out) {
  const MapExpression m = parse_map(o.map);
  const unsigned k = k_or(o, 1);
  if (!o.point.empty()) {
    const PointExpression pe = point_for(o);
    const OrbitClassification oc =
        pe.is_tuple ? orbit_classify(symmetrize(m.map, pe.tuple.dim()), pe.tuple) : orbit_classify(m.map, pe.point);
    if (o.json) {
      Json j = json_header("preperiodic");
      j["map"] = m.canonical();
      j["point"] = o.point;
      j["orbit"] = orbit_json(oc);
      emit(out, j);
    } else {
      out << "map: " << m.canonical() << "\n" << orbit_text(oc);
    }
    return exit_ok;
  }
  const unsigned n_max = o.n_max ? o.n_max : default_n_max(m.map, k, 0, o.budget);
  const GraphReport r = build_graph_report(m.map, k, n_max, o.budget);
  if (o.dot == "-") {
    out << graph_dot(r);
    return exit_ok;
  }
  if (!o.dot.empty()) {
    std::ofstream dot(o.dot);
    if (!dot) fail(ErrorCode::io_error, "cannot write " + o.dot);
    dot << graph_dot(r);
  }
  if (o.json)
    emit(out, graph_json(r));
  else
    out << graph_text(r);
  return exit_ok;
}

int cmd_canonical_height(const Options& o, std::ostream& out) {
  const MapExpression m = parse_map(o.map);
  const PointExpression pe = point_for(o);
  HeightOptions opt;
  opt.tol = o.tol;
  opt.precision = o.precision;
  if (!(o.tol > 0)) throw UsageError("--tol must be positive");
  HeightValue h;
  if (pe.is_tuple)
    h = canonical_height(symmetrize(m.map, pe.tuple.dim()), pe.tuple, opt);
  else if (o.k > 1)
    h = canonical_height(symmetrize(m.map, o.k), eta_tilde(pe.point, o.k), opt);
  else
    h = canonical_height_nf(m.map, pe.point, opt);
  if (o.json) {
    Json j = json_header("canonical-height");
    j["map"] = m.canonical();
    j["point"] = o.point;
    j.update(height_json(h));
    emit(out, j);
  } else {
    out << height_text(h);
  }
  return exit_ok;
}

int cmd_bad_primes(const Options& o, std::ostream& out) {
  const MapExpression m = parse_map(o.map);
  const unsigned k = k_or(o, 1);
  const BadPrimeSet base = bad_primes(m.map);
  const BadPrimeSet sym = k > 1 ? bad_primes_sym(m.map, k) : base;
  auto list = [](const BadPrimeSet& s) {
    Json a = Json::array();
    for (const auto& p : s) a.push_back(to_string(p));
    return a;
  };
  auto text = [](const BadPrimeSet& s) {
    std::string t;
    for (const auto& p : s) t += (t.empty() ? "" : ", ") + to_string(p);
    return "{" + t + "}";
  };
  if (o.json) {
    Json j = json_header("bad-primes");
    j["map"] = m.canonical();
    j["k"] = k;
    j["bad_primes"] = list(base);
    j["bad_primes_symmetric"] = list(sym);
    emit(out, j);
  } else {
    out << "bad primes of f: " << text(base) << "\n";
    if (k > 1) out << "bad primes of the symmetric product (k = " << k << "): " << text(sym) << "\n";
  }
  return exit_ok;
}

Integer parse_integer_flag(const std::string& name, const std::string& text) {
  Integer n;
  if (text.empty() || n.set_str(text, 10) != 0) throw UsageError(name + " expects an integer, got '" + text + "'");
  return n;
}

int cmd_period_bound(const Options& o, std::ostream& out) {
  PeriodBoundInput in;
  in.Np = parse_integer_flag("--Np", o.Np);
  in.p = parse_integer_flag("--p", o.p);
  in.vp = parse_integer_flag("--v", o.v);
  in.k = k_or(o, 1);
  const Integer bound = period_bound(in);
  const unsigned e = exponent_bound(in.p, in.vp);
  if (o.json) {
    Json j = json_header("period-bound");
    j["Np"] = to_string(in.Np);
    j["p"] = to_string(in.p);
    j["v"] = to_string(in.vp);
    j["k"] = in.k;
    j["exponent"] = e;
    j["bound"] = to_string(bound);
    emit(out, j);
  } else {
    out << "period bound: " << to_string(bound) << "\n";
    out << "exponent e: " << e << "\n";
  }
  return exit_ok;
}

unsigned period_under(const OrbitClassification& oc) {
  if (!oc.preperiodic() || oc.tail != 0) fail(ErrorCode::not_periodic, "the point is not periodic");
  return oc.period;
}

int cmd_multipliers(const Options& o, std::ostream& out) {
  const MapExpression m = parse_map(o.map);
  std::vector<MultiplierReport> reports;
  std::optional<std::pair<unsigned, NFElem>> base_only;
  if (!o.point.empty()) {
    const PointExpression pe = point_for(o);
    if (!pe.is_tuple && k_or(o, 1) == 1) {
      const unsigned n = period_under(orbit_classify(m.map, pe.point));
      base_only.emplace(n, multiplier_f(m.map, pe.point, n));
    } else {
      const PkPoint pt = pe.is_tuple ? pe.tuple : eta_tilde(pe.point, o.k);
      const MorphismPk F = symmetrize(m.map, pt.dim());
      reports.push_back(multiplier_F(m.map, pt.dim(), pt, period_under(orbit_classify(F, pt))));
    }
  } else {
    const unsigned k = k_or(o, 1);
    const MorphismPk F = symmetrize(m.map, k);
    const unsigned n_max = o.n_max ? o.n_max : default_n_max(m.map, k, 0, o.budget);
    for (const auto& pp : rational_periodic_points(m.map, F, n_max, o.budget))
      reports.push_back(multiplier_F(m.map, k, pp.point, pp.period));
  }
  if (o.json) {
    Json j = json_header("multipliers");
    j["map"] = m.canonical();
    if (base_only) {
      j["point"] = o.point;
      j["period"] = base_only->first;
      j["multiplier"] = base_only->second.to_string();
    } else {
      Json a = Json::array();
      for (const auto& r : reports) a.push_back(multiplier_json(r));
      j["points"] = a;
    }
    emit(out, j);
    return exit_ok;
  }
  out << "map: " << m.canonical() << "\n";
  if (base_only) {
    out << "period " << base_only->first << "  multiplier " << base_only->second.to_string() << "\n";
    return exit_ok;
  }
  for (const auto& r : reports) out << multiplier_text(r);
  return exit_ok;
}

int cmd_pcf(const Options& o, std::ostream& out) {
  const MapExpression m = parse_map(o.map);
  const unsigned k = k_or(o, 1);
  const PCFCertificate c = k > 1 ? is_strongly_pcf_symmetric(m.map, k) : is_pcf(m.map);
  if (o.json) {
    Json j = json_header("pcf");
    j["map"] = m.canonical();
    j.update(pcf_json(c));
    emit(out, j);
  } else {
    out << "map: " << m.canonical() << "\n" << pcf_text(c);
  }
  return exit_ok;
}

int cmd_fixtures_run(const Options& o, std::ostream& out) {
  const FixtureReport r = run_fixtures(o.fixture_file.empty() ? default_fixture_path() : o.fixture_file);
  if (o.json)
    emit(out, fixture_report_json(r));
  else
    out << fixture_report_text(r);
  return r.all_passed() ? exit_ok : exit_domain_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric products of rational maps of the projective line", "symprod"};
  app.require_subcommand(1);
  Options o;

  auto add_map = [&](CLI::App* s) { s->add_option("--map", o.map, "map: polynomial in x or [P(z,t), Q(z,t)]")->required(); };
  auto add_k = [&](CLI::App* s) { s->add_option("--k", o.k, "symmetric power k")->check(CLI::Range(1u, 64u)); };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "machine-readable output"); };
  auto add_budget = [&](CLI::App* s) {
    s->add_option("--n-max", o.n_max, "largest period searched (default: derived from the period bound)")
        ->check(CLI::Range(1u, 64u));
    s->add_option("--budget", o.budget, "largest admissible degree d^n of an iterate")->check(CLI::PositiveNumber);
  };

  auto* sym = app.add_subcommand("symmetrize", "print the k-symmetric product of f");
  add_map(sym);
  add_k(sym);
  add_json(sym);

  auto* pre = app.add_subcommand("preperiodic", "rational preperiodic graph of the symmetric product, or one orbit");
  add_map(pre);
  add_k(pre);
  pre->add_option("--point", o.point, "classify the orbit of this point instead");
  add_budget(pre);
  add_json(pre);
  pre->add_option("--dot", o.dot, "write the graph in Graphviz format (- for stdout)");

  auto* ch = app.add_subcommand("canonical-height", "canonical height with certified error");
  add_map(ch);
  add_k(ch);
  ch->add_option("--point", o.point, "rational value, inf, root(poly) or a tuple (a, b, ...)")->required();
  ch->add_option("--tol", o.tol, "target absolute error");
  ch->add_option("--precision", o.precision, "MPFR bits at the archimedean place")->check(CLI::Range(32u, 65536u));
  add_json(ch);

  auto* bp = app.add_subcommand("bad-primes", "primes of bad reduction");
  add_map(bp);
  add_k(bp);
  add_json(bp);

  auto* pb = app.add_subcommand("period-bound", "bound on minimal periods of rational periodic points");
  pb->add_option("--Np", o.Np, "norm of the prime")->required();
  pb->add_option("--p", o.p, "residue characteristic")->required();
  pb->add_option("--v", o.v, "v(p), the valuation of p");
  add_k(pb);
  add_json(pb);

  auto* mu = app.add_subcommand("multipliers", "multiplier matrices and characteristic polynomials");
  add_map(mu);
  add_k(mu);
  mu->add_option("--point", o.point, "a periodic point; all rational periodic points if omitted");
  add_budget(mu);
  add_json(mu);

  auto* pc = app.add_subcommand("pcf", "postcritical finiteness certificate");
  add_map(pc);
  add_k(pc);
  add_json(pc);

  auto* fx = app.add_subcommand("fixtures", "regression corpus");
  fx->require_subcommand(1);
  auto* fr = fx->add_subcommand("run", "run every fixture");
  fr->add_option("--file", o.fixture_file, "corpus file (default: the shipped corpus)");
  add_json(fr);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage_error;
  }

  try {
    if (sym->parsed()) return cmd_symmetrize(o, out);
    if (pre->parsed()) return cmd_preperiodic(o, out);
    if (ch->parsed()) return cmd_canonical_height(o, out);
    if (bp->parsed()) return cmd_bad_primes(o, out);
    if (pb->parsed()) return cmd_period_bound(o, out);
    if (mu->parsed()) return cmd_multipliers(o, out);
    if (pc->parsed()) return cmd_pcf(o, out);
    if (fr->parsed()) return cmd_fixtures_run(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage_error;
  } catch (const ParseError& e) {
    err << "usage error E" << static_cast<int>(e.code()) << " (" << error_code_name(e.code()) << "): " << e.what()
        << "\n";
    return exit_usage_error;
  } catch (const Error& e) {
    err << "error E" << static_cast<int>(e.code()) << " (" << error_code_name(e.code()) << "): " << e.what() << "\n";
    return exit_domain_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain_error;
  }
  return exit_usage_error;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace symprod::cli
