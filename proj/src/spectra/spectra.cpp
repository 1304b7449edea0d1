#include "symprod/spectra/spectra.hpp"

#include "symprod/arith/factor.hpp"
#include "symprod/errors.hpp"
#include "symprod/op_trace.hpp"
#include "symprod/parallel.hpp"

namespace symprod {

namespace {

bool same_point(const AlgebraicPoint& a, const AlgebraicPoint& b) {
  if (a.infinity || b.infinity) return a.infinity == b.infinity;
  return a.x == b.x;
}

// Exact period of a point known to be periodic, searched up to `cap`.
unsigned period_of(const RationalMap1& f, const AlgebraicPoint& P, unsigned cap) {
  AlgebraicPoint cur = P;
  for (unsigned m = 1; m <= cap; ++m) {
    cur = apply(f, cur);
    if (same_point(cur, P)) return m;
  }
  return 0;
}

std::size_t default_chart(const PkPoint& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return i;
  fail(ErrorCode::invalid_argument, "multiplier_F: zero point");
}

}  // namespace

NFElem multiplier_f(const RationalMap1& f, const AlgebraicPoint& P, unsigned n) {
  note_op(Op::multiplier_f);
  require(n >= 1, ErrorCode::invalid_argument, "multiplier_f: period must be positive");
  const FieldPtr& K = P.field;
  const NFElem zero(K, Rational(0)), one(K, Rational(1));
  {
    AlgebraicPoint cur = P;
    for (unsigned i = 0; i < n; ++i) cur = apply(f, cur);
    if (!same_point(cur, P)) fail(ErrorCode::not_periodic, "multiplier_f: f^n(P) != P");
  }
  const BinaryForm Pz = f.num().derivative_x(), Pt = f.num().derivative_y();
  const BinaryForm Qz = f.den().derivative_x(), Qt = f.den().derivative_y();
  NFElem lambda = one;
  AlgebraicPoint cur = P;
  for (unsigned i = 0; i < n; ++i) {
    // source chart: u = z/t at finite points, w = t/z at infinity
    const NFElem z = cur.infinity ? one : cur.x;
    const NFElem t = cur.infinity ? zero : one;
    const NFElem pv = f.num().evaluate(z, t, zero), qv = f.den().evaluate(z, t, zero);
    const NFElem dp = cur.infinity ? Pt.evaluate(z, t, zero) : Pz.evaluate(z, t, zero);
    const NFElem dq = cur.infinity ? Qt.evaluate(z, t, zero) : Qz.evaluate(z, t, zero);
    if (!qv.is_zero())
      lambda *= (dp * qv - pv * dq) / (qv * qv);
    else
      lambda *= (dq * pv - qv * dp) / (pv * pv);
    cur = apply(f, cur);
  }
  return lambda;
}

MultiplierReport multiplier_F(const RationalMap1& f, unsigned k, const PkPoint& p, unsigned n) {
  return multiplier_F(f, symmetrize(f, k), p, n, default_chart(p));
}

MultiplierReport multiplier_F(const RationalMap1& f, unsigned k, const PkPoint& p, unsigned n, std::size_t chart) {
  return multiplier_F(f, symmetrize(f, k), p, n, chart);
}

MultiplierReport multiplier_F(const RationalMap1& f, const MorphismPk& F, const PkPoint& p, unsigned n,
                              std::size_t chart) {
  note_op(Op::multiplier_F);
  require(n >= 1, ErrorCode::invalid_argument, "multiplier_F: period must be positive");
  require(p.size() == F.dim() + 1, ErrorCode::invalid_argument, "multiplier_F: dimension mismatch");
  require(chart < p.size() && p[chart] != 0, ErrorCode::invalid_argument, "multiplier_F: chart coordinate vanishes");
  const std::size_t dim = F.dim();

  std::vector<PkPoint> orbit{p};
  for (unsigned i = 1; i < n; ++i) orbit.push_back(F.apply(orbit.back()));
  if (!(F.apply(orbit.back()) == p)) fail(ErrorCode::not_periodic, "multiplier_F: F^n(p) != p");
  auto chart_of = [&](std::size_t i) { return i % n == 0 ? chart : default_chart(orbit[i % n]); };

  std::vector<std::vector<MPoly>> jac(dim + 1, std::vector<MPoly>(dim + 1));
  for (std::size_t a = 0; a <= dim; ++a)
    for (std::size_t b = 0; b <= dim; ++b) jac[a][b] = F[a].derivative(b);

  RatMatrix total = RatMatrix::identity(dim);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = chart_of(i), dst = chart_of(i + 1);
    std::vector<Rational> x = orbit[i].rational_coords();
    const Rational scale = 1 / x[src];
    for (auto& v : x) v *= scale;
    std::vector<Rational> fx(dim + 1);
    for (std::size_t a = 0; a <= dim; ++a) fx[a] = F[a](x);
    require(fx[dst] != 0, ErrorCode::invariant_violation, "multiplier_F: target chart coordinate vanishes");
    const Rational inv2 = 1 / (fx[dst] * fx[dst]);
    RatMatrix step(dim, dim);
    std::size_t r = 0;
    for (std::size_t a = 0; a <= dim; ++a) {
      if (a == dst) continue;
      std::size_t c = 0;
      for (std::size_t b = 0; b <= dim; ++b) {
        if (b == src) continue;
        step(r, c) = (jac[a][b](x) * fx[dst] - fx[a] * jac[dst][b](x)) * inv2;
        ++c;
      }
      ++r;
    }
    total = step * total;
  }

  MultiplierReport rep;
  rep.point = p;
  rep.period = n;
  rep.chart = chart;
  rep.matrix = total;
  rep.charpoly = total.charpoly();
  for (const auto& cls : conjugate_points(p)) {
    BaseMultiplier bm;
    bm.cls = cls;
    bm.period = period_of(f, cls.point, n * static_cast<unsigned>(dim));
    require(bm.period > 0, ErrorCode::invariant_violation, "multiplier_F: constituent point is not periodic");
    bm.multiplier = multiplier_f(f, cls.point, bm.period);
    rep.base.push_back(std::move(bm));
  }
  return rep;
}

std::string factored_string(const UniPoly& p, const std::string& var) {
  if (p.degree() <= 0) return to_string(p.coeff(0));
  Factorization fz = factor_unipoly(p);
  Rational lead = fz.content;
  std::string body;
  for (const auto& [u, m] : fz.factors) {
    Rational l = u.lead();
    for (unsigned i = 0; i < m; ++i) lead *= l;
    if (!body.empty()) body += "*";
    body += "(" + u.monic().to_string(var) + ")";
    if (m > 1) body += "^" + std::to_string(m);
  }
  if (lead == 1) return body;
  return to_string(lead) + "*" + body;
}

std::vector<ConjugateClass> critical_points(const RationalMap1& f) {
  note_op(Op::critical_points);
  const BinaryForm w = f.wronskian();
  if (w.is_zero()) fail(ErrorCode::degenerate_map, "critical_points: Wronskian vanishes identically");
  return conjugate_points(point_of_roots(w));
}

PCFCertificate is_pcf(const RationalMap1& f) {
  note_op(Op::is_pcf);
  PCFCertificate cert;
  for (auto& cls : critical_points(f)) cert.critical.push_back({cls, {}});
  parallel_for(cert.critical.size(),
               [&](std::size_t i) { cert.critical[i].orbit = orbit_classify(f, cert.critical[i].point.point); });
  cert.pcf = true;
  for (const auto& c : cert.critical) cert.pcf = cert.pcf && c.orbit.preperiodic();
  cert.justification = cert.pcf ? "every critical point has a finite forward orbit"
                                 : "a critical orbit exceeds the preperiodicity height bound";
  return cert;
}

PCFCertificate is_strongly_pcf_symmetric(const RationalMap1& f, unsigned k) {
  note_op(Op::is_strongly_pcf_symmetric);
  require(k >= 1, ErrorCode::invalid_argument, "is_strongly_pcf_symmetric: k must be positive");
  PCFCertificate cert = is_pcf(f);
  cert.k = k;
  cert.justification = std::string("symmetric product of degree ") + std::to_string(k) +
                       ": strongly PCF iff PCF iff the base map is PCF; base verdict: " + cert.justification;
  return cert;
}

}  // namespace symprod
