#include "symprod/core/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "symprod/arith/factor.hpp"
#include "symprod/arith/matrix.hpp"
#include "symprod/errors.hpp"
#include "symprod/op_trace.hpp"

namespace symprod {

PkPoint eta(const std::vector<PkPoint>& points) {
  note_op(Op::eta);
  require(!points.empty(), ErrorCode::invalid_argument, "eta: empty point list");
  std::vector<std::pair<Integer, Integer>> pairs;
  for (const auto& p : points) {
    require(p.size() == 2, ErrorCode::invalid_argument, "eta: inputs must be points of P^1");
    pairs.emplace_back(p[0], p[1]);
  }
  std::vector<Integer> c{Integer(1)};
  for (const auto& [z, t] : pairs) {
    std::vector<Integer> next(c.size() + 1, Integer(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j] * z;
      next[j + 1] += c[j] * t;
    }
    c = std::move(next);
  }
  return PkPoint(std::move(c));
}

std::vector<NFElem> eta(const std::vector<std::pair<NFElem, NFElem>>& points) {
  note_op(Op::eta);
  require(!points.empty(), ErrorCode::invalid_argument, "eta: empty point list");
  for (const auto& [z, t] : points)
    require(!(z.is_zero() && t.is_zero()), ErrorCode::invalid_argument, "eta: degenerate (0:0) point");
  return eta_values(points, NFElem(points.front().first.field(), Rational(0)));
}

namespace {

// Exponent vectors of length n summing to d, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial m(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), DegRevLexGreater{});
  return out;
}

// eta_k as polynomials in 2k variables (z_l = var 2l, t_l = var 2l+1),
// evaluated at the given coordinate polynomials.
std::vector<MPoly> eta_polys(const std::vector<std::pair<MPoly, MPoly>>& pts, std::size_t nvars) {
  std::vector<MPoly> c{MPoly::constant(nvars, 1)};
  for (const auto& [z, t] : pts) {
    std::vector<MPoly> next(c.size() + 1, MPoly(nvars));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j] * z;
      next[j + 1] += c[j] * t;
    }
    c = std::move(next);
  }
  return c;
}

MPoly form_in(const BinaryForm& f, const MPoly& z, const MPoly& t) {
  MPoly acc(z.nvars());
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    acc += z.pow(static_cast<unsigned>(i)) * t.pow(static_cast<unsigned>(f.degree() - i)) * f.coeff(i);
  }
  return acc;
}

struct Symbols {
  std::vector<MPoly> eta;    // eta_k(z, t)
  std::vector<MPoly> image;  // eta_k(f(z_1,t_1), ..., f(z_k,t_k))
};

Symbols symbols(const RationalMap1& f, unsigned k) {
  const std::size_t nv = 2 * k;
  std::vector<std::pair<MPoly, MPoly>> base, mapped;
  for (unsigned l = 0; l < k; ++l) {
    MPoly z = MPoly::variable(nv, 2 * l), t = MPoly::variable(nv, 2 * l + 1);
    mapped.emplace_back(form_in(f.num(), z, t), form_in(f.den(), z, t));
    base.emplace_back(std::move(z), std::move(t));
  }
  return {eta_polys(base, nv), eta_polys(mapped, nv)};
}

}  // namespace

MorphismPk symmetrize(const RationalMap1& f, unsigned k) {
  note_op(Op::symmetrize);
  require(k >= 1, ErrorCode::invalid_argument, "symmetrize: k must be at least 1");
  const unsigned d = static_cast<unsigned>(f.degree());
  Symbols sym = symbols(f, k);
  const std::vector<Monomial> unknowns = monomials_of_degree(k + 1, d);

  // Expansion of each eta-monomial in the 2k variables.
  std::vector<std::vector<MPoly>> eta_pows(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    eta_pows[i].push_back(MPoly::constant(2 * k, 1));
    for (unsigned e = 1; e <= d; ++e) eta_pows[i].push_back(eta_pows[i].back() * sym.eta[i]);
  }
  std::vector<MPoly> expanded;
  for (const auto& m : unknowns) {
    MPoly t = MPoly::constant(2 * k, 1);
    for (std::size_t i = 0; i <= k; ++i)
      if (m[i]) t = t * eta_pows[i][m[i]];
    expanded.push_back(std::move(t));
  }
  std::map<Monomial, std::size_t, DegRevLexGreater> rows;
  for (const auto& e : expanded)
    for (const auto& [mono, c] : e.terms()) rows.try_emplace(mono, rows.size());
  for (const auto& g : sym.image)
    for (const auto& [mono, c] : g.terms()) rows.try_emplace(mono, rows.size());

  RatMatrix a(rows.size(), unknowns.size());
  for (std::size_t col = 0; col < expanded.size(); ++col)
    for (const auto& [mono, c] : expanded[col].terms()) a(rows.at(mono), col) = c;
  require(a.rank() == unknowns.size(), ErrorCode::invariant_violation, "symmetrize: eta monomials are dependent");

  std::vector<MPoly> comps;
  for (const auto& g : sym.image) {
    std::vector<Rational> rhs(rows.size());
    for (const auto& [mono, c] : g.terms()) rhs[rows.at(mono)] = c;
    auto sol = solve_linear(a, rhs);
    if (!sol) fail(ErrorCode::invariant_violation, "symmetrize: image is not a polynomial in eta");
    MPoly comp(k + 1);
    for (std::size_t col = 0; col < unknowns.size(); ++col) comp.add_term(unknowns[col], (*sol)[col]);
    comps.push_back(std::move(comp));
  }
  return MorphismPk(std::move(comps)).normalized();
}

bool commutes_symbolically(const RationalMap1& f, const MorphismPk& F, unsigned k) {
  if (F.dim() != k || F.degree() != f.degree()) return false;
  Symbols sym = symbols(f, k);
  std::vector<MPoly> lhs;
  for (const auto& comp : F.components()) lhs.push_back(comp.compose(sym.eta));
  // find the scalar from the first nonzero pair
  Rational scale = 0;
  for (std::size_t j = 0; j <= k && scale == 0; ++j) {
    if (sym.image[j].is_zero()) continue;
    const auto& [mono, c] = *sym.image[j].terms().begin();
    scale = lhs[j].coeff(mono) / c;
  }
  if (scale == 0) return false;
  for (std::size_t j = 0; j <= k; ++j)
    if (!(lhs[j] == sym.image[j] * scale)) return false;
  return true;
}

BinaryForm form_of_point(const PkPoint& p) {
  note_op(Op::form_of_point);
  const int k = static_cast<int>(p.dim());
  std::vector<Rational> asc(static_cast<std::size_t>(k) + 1);
  // coefficient of X^(k-j) Y^j is coordinate j, i.e. X^i has coordinate k-i
  for (int i = 0; i <= k; ++i) asc[static_cast<std::size_t>(i)] = Rational(p[static_cast<std::size_t>(k - i)]);
  return BinaryForm(k, std::move(asc));
}

PkPoint point_of_form(const BinaryForm& g) {
  note_op(Op::point_of_form);
  require(!g.is_zero(), ErrorCode::invalid_argument, "point_of_form: zero form");
  const int k = g.degree();
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(j)] = g.coeff(k - j);
  return PkPoint::from_rationals(c);
}

BinaryForm point_polynomial(const PkPoint& p) {
  // R(z,t) = g(t, -z) = sum_j eta_j t^(k-j) (-z)^j
  const int k = static_cast<int>(p.dim());
  std::vector<Rational> asc(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    Rational v(p[static_cast<std::size_t>(j)]);
    asc[static_cast<std::size_t>(j)] = (j % 2) ? Rational(-v) : v;
  }
  return BinaryForm(k, std::move(asc));
}

PkPoint point_of_roots(const BinaryForm& r) {
  require(!r.is_zero(), ErrorCode::invalid_argument, "point_of_roots: zero form");
  const int k = r.degree();
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(j)] = (j % 2) ? Rational(-r.coeff(j)) : r.coeff(j);
  return PkPoint::from_rationals(c);
}

MorphismPk as_morphism(const RationalMap1& f) {
  auto to_mpoly = [](const BinaryForm& g) {
    MPoly out(2);
    const int d = g.degree();
    for (int i = 0; i <= d; ++i)
      if (g.coeff(i) != 0) out.add_term({static_cast<unsigned>(i), static_cast<unsigned>(d - i)}, g.coeff(i));
    return out;
  };
  return MorphismPk({to_mpoly(f.num()), to_mpoly(f.den())});
}

AlgebraicPoint AlgebraicPoint::rational(const Rational& v) {
  auto q = NumberField::rationals();
  return {q, false, NFElem(q, v)};
}

AlgebraicPoint AlgebraicPoint::at_infinity() {
  auto q = NumberField::rationals();
  return {q, true, NFElem(q, Rational(0))};
}

UniPoly AlgebraicPoint::minpoly() const {
  if (infinity) return {};
  return minimal_polynomial(x).primitive();
}

std::string AlgebraicPoint::to_string() const {
  if (infinity) return "inf";
  if (x.is_rational()) return symprod::to_string(x.rational_value());
  return x.to_string();
}

bool operator==(const AlgebraicPoint& a, const AlgebraicPoint& b) {
  if (a.infinity || b.infinity) return a.infinity == b.infinity;
  return a.x == b.x;
}

std::vector<ConjugateClass> conjugate_points(const PkPoint& p) {
  note_op(Op::conjugate_points);
  BinaryForm r = point_polynomial(p);
  std::vector<ConjugateClass> out;
  UniPoly affine = r.dehomogenize();
  if (affine.degree() >= 1) {
    for (auto& [fac, mult] : factor_unipoly(affine).factors) {
      ConjugateClass cls;
      cls.multiplicity = mult;
      cls.minpoly = fac;
      if (fac.degree() == 1) {
        cls.point = AlgebraicPoint::rational(-fac.coeff(0) / fac.coeff(1));
        cls.field = cls.point.field;
      } else {
        cls.field = NumberField::make(fac);
        cls.point = AlgebraicPoint::affine(NFElem::generator(cls.field));
      }
      out.push_back(std::move(cls));
    }
  }
  int inf = r.infinity_multiplicity();
  if (inf > 0) {
    ConjugateClass cls;
    cls.point = AlgebraicPoint::at_infinity();
    cls.field = cls.point.field;
    cls.multiplicity = static_cast<unsigned>(inf);
    out.push_back(std::move(cls));
  }
  return out;
}

PkPoint eta_tilde(const AlgebraicPoint& p) {
  return eta_tilde(p, static_cast<unsigned>(p.field->degree()));
}

PkPoint eta_tilde(const AlgebraicPoint& p, unsigned k) {
  note_op(Op::eta_tilde);
  require(k >= 1, ErrorCode::invalid_argument, "eta_tilde: k must be at least 1");
  if (p.infinity) {
    std::vector<Integer> c(k + 1, Integer(0));
    c[0] = 1;
    return PkPoint(std::move(c));
  }
  const unsigned n = static_cast<unsigned>(p.field->degree());
  require(k % n == 0, ErrorCode::invalid_argument, "eta_tilde: k must be a multiple of the field degree");
  // chi(T) = prod over embeddings (T - x_sigma); eta_j = (-1)^(k-j) chi_j.
  UniPoly chi = p.x.multiplication_matrix().charpoly().pow(k / n);
  std::vector<Rational> c(k + 1);
  for (unsigned j = 0; j <= k; ++j) c[j] = ((k - j) % 2) ? Rational(-chi.coeff(static_cast<int>(j))) : chi.coeff(static_cast<int>(j));
  return PkPoint::from_rationals(c);
}

}  // namespace symprod
