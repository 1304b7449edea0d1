#include "symprod/heights/heights.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "real.hpp"
#include "symprod/arith/modpoly.hpp"
#include "symprod/errors.hpp"
#include "symprod/kernels/modp.hpp"
#include "symprod/op_trace.hpp"
#include "symprod/parallel.hpp"

namespace symprod {

using detail::Real;

double naive_height(const PkPoint& p) {
  note_op(Op::naive_height);
  Integer m = 0;
  for (const auto& c : p.coords()) m = std::max(m, abs(c));
  require(m != 0, ErrorCode::invalid_argument, "naive_height: zero vector");
  return log_abs(m);
}

bool degenerate_mod(const RationalMap1& f, const Integer& p) {
  const int d = f.degree();
  if (p >= Integer(kernels::max_modulus)) {
    Rational res = f.resultant();
    return mpz_divisible_p(res.get_num_mpz_t(), p.get_mpz_t()) != 0;
  }
  const auto q = static_cast<std::uint32_t>(p.get_ui());
  ModPoly a = ModPoly::reduce(f.num().dehomogenize(), q);
  ModPoly b = ModPoly::reduce(f.den().dehomogenize(), q);
  if (a.is_zero() || b.is_zero()) return true;
  if (a.degree() < d && b.degree() < d) return true;  // common root at infinity
  return gcd(a, b).degree() >= 1;
}

BadPrimeSet bad_primes(const RationalMap1& f) {
  note_op(Op::bad_primes);
  Rational res = f.resultant();
  require(res != 0 && res.get_den() == 1, ErrorCode::invariant_violation, "bad_primes: unexpected resultant");
  BadPrimeSet out;
  for (const auto& pp : factor_integer(res.get_num()))
    if (degenerate_mod(f, pp.prime)) out.push_back(pp.prime);
  return out;
}

BadPrimeSet bad_primes_sym(const RationalMap1& f, unsigned k) {
  note_op(Op::bad_primes_sym);
  require(k >= 1, ErrorCode::invalid_argument, "bad_primes_sym: k must be positive");
  // A common zero of f mod p gives the common zero eta(P0, ..., P0) of F mod p,
  // and a common zero of F mod p forces one of f: the two sets agree.
  return bad_primes(f);
}

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (nvars == 0) return out;
  rec(rec, 0, degree);
  return out;
}

Monomial add_monomials(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Integer l1_norm(const MPoly& p) {
  Integer s = 0;
  for (const auto& [m, c] : p.terms()) {
    require(c.get_den() == 1, ErrorCode::invariant_violation, "l1_norm: non-integral coefficient");
    s += abs(c.get_num());
  }
  return s;
}

// Attempts all k+1 identities in one fixed degree by a single elimination on
// the augmented matrix [A | targets].
std::optional<NullstellensatzCertificate> certificate_in_degree(const MorphismPk& F, unsigned M) {
  const std::size_t n = F.dim() + 1;
  const unsigned d = static_cast<unsigned>(F.degree());
  const auto rows_m = monomials_of_degree(n, M);
  const auto mult_m = monomials_of_degree(n, M - d);
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t i = 0; i < rows_m.size(); ++i) row_of[rows_m[i]] = i;

  const std::size_t unknowns = n * mult_m.size();
  const std::size_t rows = rows_m.size();
  const std::size_t width = unknowns + n;
  // sparse rows: column -> value
  std::vector<std::map<std::size_t, Rational>> a(rows);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t u = 0; u < mult_m.size(); ++u) {
      const std::size_t col = j * mult_m.size() + u;
      for (const auto& [m, c] : F[j].terms()) a[row_of.at(add_monomials(m, mult_m[u]))][col] += c;
    }
  for (std::size_t i = 0; i < n; ++i) {
    Monomial target(n, 0);
    target[i] = M;
    a[row_of.at(target)][unknowns + i] = 1;
  }
  for (auto& row : a)
    for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);

  // Gauss-Jordan over the unknown columns, sparsest pivot row first.
  std::vector<std::size_t> pivot_col(rows, width);
  std::vector<bool> used(rows, false);
  for (std::size_t col = 0; col < unknowns; ++col) {
    std::size_t best = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (used[r]) continue;
      auto it = a[r].find(col);
      if (it == a[r].end()) continue;
      if (best == rows || a[r].size() < a[best].size()) best = r;
    }
    if (best == rows) continue;
    used[best] = true;
    pivot_col[best] = col;
    const Rational inv = 1 / a[best].at(col);
    for (auto& [c, v] : a[best]) v *= inv;
    const auto pivot_row = a[best];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == best) continue;
      auto it = a[r].find(col);
      if (it == a[r].end()) continue;
      const Rational factor = it->second;
      for (const auto& [c, v] : pivot_row) {
        Rational& slot = a[r][c];
        slot -= factor * v;
        if (slot == 0) a[r].erase(c);
      }
    }
  }
  // consistency: rows without a pivot must have zero target part
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < rows; ++r)
      if (!used[r] && a[r].count(unknowns + i)) return std::nullopt;

  NullstellensatzCertificate cert;
  cert.degree = M;
  cert.r.resize(n);
  cert.g.assign(n, std::vector<MPoly>(n, MPoly(n)));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> sol(unknowns);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!used[r]) continue;
      auto it = a[r].find(unknowns + i);
      if (it != a[r].end()) sol[pivot_col[r]] = it->second;
    }
    Integer den = 1;
    for (const auto& v : sol) den = lcm(den, v.get_den());
    Integer num = den;
    for (const auto& v : sol)
      if (v != 0) num = gcd(num, Integer(v.get_num() * (den / v.get_den())));
    Rational scale = make_rational(den, num);
    cert.r[i] = Rational(scale).get_num();
    require(Rational(scale).get_den() == 1, ErrorCode::invariant_violation, "certificate scaling");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t u = 0; u < mult_m.size(); ++u) {
        const Rational& v = sol[j * mult_m.size() + u];
        if (v != 0) cert.g[i][j].add_term(mult_m[u], v * scale);
      }
  }
  return cert;
}

}  // namespace

bool NullstellensatzCertificate::verify(const MorphismPk& F) const {
  const std::size_t n = F.dim() + 1;
  if (r.size() != n || g.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] == 0) return false;
    MPoly lhs(n);
    for (std::size_t j = 0; j < n; ++j) lhs += g[i][j] * F[j];
    Monomial m(n, 0);
    m[i] = degree;
    if (!(lhs == MPoly::monomial(m, Rational(r[i])))) return false;
  }
  return true;
}

std::optional<NullstellensatzCertificate> nullstellensatz_certificate(const MorphismPk& F, unsigned max_degree) {
  require(F.integral(), ErrorCode::invalid_argument, "nullstellensatz_certificate: morphism must be integral");
  const unsigned k = static_cast<unsigned>(F.dim());
  const unsigned d = static_cast<unsigned>(F.degree());
  for (unsigned M = std::max((k + 1) * (d - 1) + 1, d); M <= std::max(max_degree, d); ++M)
    if (auto cert = certificate_in_degree(F, M)) return cert;
  return std::nullopt;
}

HeightConstant height_comparison_constant(const MorphismPk& F_in, unsigned max_degree) {
  note_op(Op::height_comparison_constant);
  const MorphismPk F = F_in.normalized();
  const std::size_t n = F.dim() + 1;
  HeightConstant hc;
  Integer top = 0;
  for (const auto& c : F.components()) top = std::max(top, l1_norm(c));
  hc.archimedean_high = log_abs(top);
  hc.upper = hc.archimedean_high;

  hc.certificate = nullstellensatz_certificate(F, max_degree);
  if (!hc.certificate) {
    // Heuristic mode: symmetric guess, flagged as unverified.
    hc.certified = false;
    hc.archimedean_low = -hc.archimedean_high;
    hc.lower = -hc.archimedean_high;
    hc.C = hc.archimedean_high;
    return hc;
  }
  hc.certified = true;
  const auto& cert = *hc.certificate;
  double low = 0;
  std::map<Integer, unsigned> vmax;
  for (std::size_t i = 0; i < n; ++i) {
    Integer norm = 0;
    for (std::size_t j = 0; j < n; ++j) norm += l1_norm(cert.g[i][j]);
    const double li = log_abs(cert.r[i]) - log_abs(norm);
    low = i == 0 ? li : std::min(low, li);
    for (const auto& pp : factor_integer(cert.r[i])) vmax[pp.prime] = std::max(vmax[pp.prime], pp.exponent);
  }
  hc.archimedean_low = low;
  double gcd_slack = 0;
  for (const auto& [q, v] : vmax) {
    hc.places.emplace_back(q, v);
    gcd_slack += v * log_abs(q);
  }
  hc.lower = low - gcd_slack;
  hc.C = std::max(hc.upper, -hc.lower);
  return hc;
}

double preperiodicity_bound(const MorphismPk& F) {
  note_op(Op::preperiodicity_bound);
  const auto hc = height_comparison_constant(F);
  return hc.C / (F.degree() - 1);
}

double preperiodicity_bound(const RationalMap1& f) { return preperiodicity_bound(as_morphism(f)); }

HeightContext::HeightContext(const MorphismPk& F, unsigned cap)
    : F_(F.normalized()), constant_(height_comparison_constant(F_, cap)) {
  require(F_.degree() >= 2, ErrorCode::invalid_argument, "heights need degree >= 2");
}

namespace {

struct ArchRun {
  Real value;
  unsigned iterations;
};

ArchRun archimedean_run(const MorphismPk& F, const PkPoint& p, unsigned N, mpfr_prec_t prec) {
  const std::size_t n = F.dim() + 1;
  const unsigned d = static_cast<unsigned>(F.degree());
  struct Term {
    Real coef;
    Monomial mono;
  };
  std::vector<std::vector<Term>> comps(n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [m, c] : F[j].terms()) comps[j].push_back({Real(prec, c), m});

  Integer top = 0;
  for (const auto& c : p.coords()) top = std::max(top, abs(c));
  Real top_r(prec, top);
  Real total = top_r.log();
  std::vector<Real> y;
  for (const auto& c : p.coords()) y.push_back(Real(prec, c).div(top_r));

  Real weight(prec, Rational(1, d));
  const Real inv_d(prec, Rational(1, d));
  for (unsigned it = 0; it < N; ++it) {
    // powers[i][e] = y_i^e
    std::vector<std::vector<Real>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
      powers[i].push_back(Real(prec, Integer(1)));
      for (unsigned e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * y[i]);
    }
    std::vector<Real> image;
    Real m(prec);
    for (std::size_t j = 0; j < n; ++j) {
      Real acc(prec);
      for (const auto& t : comps[j]) {
        Real term = t.coef;
        for (std::size_t i = 0; i < n; ++i)
          if (t.mono[i]) term *= powers[i][t.mono[i]];
        acc += term;
      }
      Real a = acc.abs();
      if (a.cmp(m) > 0) m = a;
      image.push_back(std::move(acc));
    }
    if (m.is_zero()) fail(ErrorCode::precision_not_reached, "archimedean Green function: image vanished numerically");
    total += weight * m.log();
    for (std::size_t j = 0; j < n; ++j) y[j] = std::move(image[j].div(m));
    weight *= inv_d;
  }
  return {total, N};
}

// Number of terms after which the half-width of the remaining tail drops
// below tol; the tail of sum_{n>=N} d^-(n+1) L_n lies in [lo, hi] d^-N/(d-1).
unsigned terms_needed(double lo, double hi, unsigned d, double tol, unsigned cap) {
  const double width = std::max(0.0, (hi - lo) / 2) / (d - 1);
  unsigned N = 0;
  double scale = 1;
  while (width * scale > tol) {
    scale /= d;
    if (++N > cap) fail(ErrorCode::precision_not_reached, "Green function: iteration cap reached before tolerance");
  }
  return N;
}

}  // namespace

LocalGreen HeightContext::green(const PkPoint& p, const Integer& place, const HeightOptions& opt) const {
  require(p.size() == F_.dim() + 1, ErrorCode::invalid_argument, "green: dimension mismatch");
  const unsigned d = static_cast<unsigned>(F_.degree());
  LocalGreen out;
  if (place == 0) {
    const double lo = constant_.archimedean_low, hi = constant_.archimedean_high;
    const unsigned N = terms_needed(lo, hi, d, opt.tol / 2, opt.max_iterations);
    const auto prec = static_cast<mpfr_prec_t>(std::max(opt.precision, 53u));
    ArchRun a = archimedean_run(F_, p, N, prec);
    ArchRun b = archimedean_run(F_, p, N, prec + 64);
    const double tail_scale = std::pow(static_cast<double>(d), -static_cast<double>(N)) / (d - 1);
    const double mid = (lo + hi) / 2 * tail_scale;
    const double half = std::max(0.0, (hi - lo) / 2) * tail_scale;
    const double rounding = 2 * std::fabs(a.value.to_double() - b.value.to_double()) +
                            std::ldexp(1.0, -static_cast<int>(prec) + 16);
    out.value = b.value.to_double() + mid;
    out.error = half + rounding;
    out.iterations = N;
    return out;
  }

  require(is_prime(place), ErrorCode::invalid_argument, "green: place must be 0 or a prime");
  unsigned vmax = 0;
  bool listed = false;
  for (const auto& [q, v] : constant_.places)
    if (q == place) {
      vmax = v;
      listed = true;
    }
  if (!listed && constant_.certified) return out;  // good reduction: local term of a coprime lift is 0
  if (!constant_.certified) vmax = 8;
  const double logq = log_abs(place);
  const double lo = -static_cast<double>(vmax) * logq;
  const unsigned N = terms_needed(lo, 0.0, d, opt.tol, opt.max_iterations);
  unsigned long digits = static_cast<unsigned long>(vmax) * N + 2;
  Integer modulus = pow(place, digits);
  std::vector<Integer> y = p.coords();
  Rational sum = 0;
  Integer weight = d;
  for (unsigned it = 0; it < N; ++it) {
    std::vector<Integer> img = F_.apply_lift(y);
    unsigned v = static_cast<unsigned>(digits);
    for (auto& c : img) {
      c %= modulus;
      if (c != 0) v = std::min(v, valuation(c, place));
    }
    if (v + 1 >= digits) fail(ErrorCode::precision_not_reached, "q-adic Green function: precision exhausted");
    Integer pv = pow(place, v);
    digits -= v;
    modulus = pow(place, digits);
    for (auto& c : img) {
      c /= pv;
      c %= modulus;
    }
    y = std::move(img);
    sum -= make_rational(Integer(v), weight);
    weight *= d;
  }
  const double tail_scale = std::pow(static_cast<double>(d), -static_cast<double>(N)) / (d - 1);
  out.value = sum.get_d() * logq + lo / 2 * tail_scale;
  out.error = -lo / 2 * tail_scale + 1e-15 * std::fabs(out.value);
  out.iterations = N;
  return out;
}

HeightValue HeightContext::canonical(const PkPoint& p, const HeightOptions& opt) const {
  std::vector<Integer> places{Integer(0)};
  for (const auto& [q, v] : constant_.places)
    if (v > 0) places.push_back(q);
  HeightOptions local = opt;
  local.tol = opt.tol / static_cast<double>(places.size());
  std::vector<LocalGreen> parts(places.size());
  parallel_for(places.size(), [&](std::size_t i) { parts[i] = green(p, places[i], local); });

  HeightValue hv;
  hv.certified = constant_.certified;
  if (!hv.certified) hv.note = "unverified: no Nullstellensatz certificate within the degree cap";
  for (std::size_t i = 0; i < places.size(); ++i) {
    hv.value += parts[i].value;
    hv.error_bound += parts[i].error;
    hv.places.push_back({places[i] == 0 ? std::string("inf") : to_string(places[i]), parts[i].value, parts[i].error});
  }
  return hv;
}

LocalGreen green_local(const MorphismPk& F, const PkPoint& p, const Integer& place, const HeightOptions& opt) {
  note_op(Op::green_local);
  return HeightContext(F, opt.certificate_degree_cap).green(p, place, opt);
}

HeightValue canonical_height(const MorphismPk& F, const PkPoint& p, const HeightOptions& opt) {
  note_op(Op::canonical_height);
  return HeightContext(F, opt.certificate_degree_cap).canonical(p, opt);
}

HeightValue canonical_height_nf(const RationalMap1& f, const AlgebraicPoint& P, const HeightOptions& opt) {
  note_op(Op::canonical_height_nf);
  const unsigned k = P.infinity ? 1u : static_cast<unsigned>(P.field->degree());
  const MorphismPk F = symmetrize(f, k);
  HeightOptions scaled = opt;
  scaled.tol = opt.tol * k;
  HeightValue hv = canonical_height(F, eta_tilde(P, k), scaled);
  hv.value /= k;
  hv.error_bound /= k;
  for (auto& pc : hv.places) {
    pc.contribution /= k;
    pc.error /= k;
  }
  if (k > 1) {
    const auto roots = roots_in_field(P.field->minpoly(), P.field);
    if (roots.size() != k) {
      if (!hv.note.empty()) hv.note += "; ";
      hv.note += "transfer outside stated hypotheses (non-Galois field)";
    }
  }
  return hv;
}

}  // namespace symprod
