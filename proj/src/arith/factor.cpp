#include "symprod/arith/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "symprod/arith/modpoly.hpp"
#include "symprod/errors.hpp"
#include "symprod/op_trace.hpp"

namespace symprod {

namespace {

using ZPoly = std::vector<Integer>;  // low to high

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void reduce(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  reduce(r, m);
  return r;
}

ZPoly add(ZPoly a, const ZPoly& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  reduce(a, m);
  return a;
}

ZPoly sub(ZPoly a, const ZPoly& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  reduce(a, m);
  return a;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> divmod_monic(ZPoly a, const ZPoly& b, const Integer& m) {
  const int db = deg(b);
  if (deg(a) < db) return {ZPoly{}, a};
  ZPoly q(static_cast<std::size_t>(deg(a) - db) + 1);
  for (int i = deg(a); i >= db; --i) {
    Integer c = a[static_cast<std::size_t>(i)];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      mpz_submul(a[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
  }
  a.resize(static_cast<std::size_t>(db));
  reduce(a, m);
  reduce(q, m);
  return {q, a};
}

ZPoly from_mod(const ModPoly& f) {
  ZPoly r;
  for (auto c : f.coeffs()) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

// Exact division over Z; nullopt-like false when b does not divide a.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  const int db = deg(b);
  if (deg(a) < db) return false;
  ZPoly rem = a;
  ZPoly q(static_cast<std::size_t>(deg(a) - db) + 1);
  const Integer& lb = b.back();
  for (int i = deg(a); i >= db; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      mpz_submul(rem[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

UniPoly to_unipoly(const ZPoly& a) { return UniPoly::from_integers(a); }

// Binary factor tree for multifactor Hensel lifting (monic target).
struct HenselNode {
  ZPoly poly;
  int left = -1, right = -1;
  ZPoly s, t;  // s*left + t*right == 1 mod current modulus
};

class HenselTree {
 public:
  HenselTree(const std::vector<ModPoly>& factors, std::uint32_t p) : p_(p) {
    root_ = build(factors, 0, factors.size());
  }

  // Lift the factorization of monic f from modulus m to m2 (m2 | m^2).
  void lift(const ZPoly& f, const Integer& m2) { lift_node(root_, f, m2); }

  std::vector<ZPoly> leaves() const {
    std::vector<ZPoly> out;
    collect(root_, out);
    return out;
  }

 private:
  int build(const std::vector<ModPoly>& factors, std::size_t lo, std::size_t hi) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    if (hi - lo == 1) {
      nodes_[static_cast<std::size_t>(id)].poly = from_mod(factors[lo]);
      return id;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    ModPoly lp = ModPoly::constant(p_, 1), rp = ModPoly::constant(p_, 1);
    for (std::size_t i = lo; i < mid; ++i) lp = lp * factors[i];
    for (std::size_t i = mid; i < hi; ++i) rp = rp * factors[i];
    int l = build(factors, lo, mid);
    int r = build(factors, mid, hi);
    auto eg = extended_gcd(lp, rp);
    require(eg.g.degree() == 0, ErrorCode::invariant_violation, "Hensel: factors not coprime mod p");
    HenselNode& node = nodes_[static_cast<std::size_t>(id)];
    node.left = l;
    node.right = r;
    node.s = from_mod(eg.s);
    node.t = from_mod(eg.t);
    node.poly = from_mod(lp * rp);
    return id;
  }

  void lift_node(int id, const ZPoly& f, const Integer& m) {
    HenselNode& node = nodes_[static_cast<std::size_t>(id)];
    node.poly = f;
    if (node.left < 0) return;
    ZPoly g = nodes_[static_cast<std::size_t>(node.left)].poly;
    ZPoly h = nodes_[static_cast<std::size_t>(node.right)].poly;
    const ZPoly one{Integer(1)};
    ZPoly e = sub(f, mul(g, h, m), m);
    auto [q, r] = divmod_monic(mul(node.s, e, m), h, m);
    ZPoly g2 = add(add(g, mul(node.t, e, m), m), mul(q, g, m), m);
    ZPoly h2 = add(h, r, m);
    ZPoly b = sub(add(mul(node.s, g2, m), mul(node.t, h2, m), m), one, m);
    auto [c, d] = divmod_monic(mul(node.s, b, m), h2, m);
    node.s = sub(node.s, d, m);
    node.t = sub(sub(node.t, mul(node.t, b, m), m), mul(c, g2, m), m);
    const int l = node.left, rr = node.right;
    lift_node(l, g2, m);
    lift_node(rr, h2, m);
  }

  void collect(int id, std::vector<ZPoly>& out) const {
    const HenselNode& node = nodes_[static_cast<std::size_t>(id)];
    if (node.left < 0) {
      out.push_back(node.poly);
      return;
    }
    collect(node.left, out);
    collect(node.right, out);
  }

  std::uint32_t p_;
  std::vector<HenselNode> nodes_;
  int root_ = 0;
};

struct PrimeChoice {
  std::uint32_t p = 0;
  std::vector<int> degrees;  // degrees of the irreducible factors mod p
};

// Subset sums of a degree multiset, as a bitmask over [0, n].
std::vector<bool> subset_sums(const std::vector<int>& degrees, int n) {
  std::vector<bool> ok(static_cast<std::size_t>(n) + 1, false);
  ok[0] = true;
  for (int d : degrees)
    for (int s = n; s >= d; --s)
      if (ok[static_cast<std::size_t>(s - d)]) ok[static_cast<std::size_t>(s)] = true;
  return ok;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<UniPoly> zassenhaus(const ZPoly& g_in) {
  const int n = deg(g_in);
  if (n <= 1) return {to_unipoly(g_in)};
  const Integer lc = g_in.back();

  // Pick the prime with the fewest modular factors among a few candidates,
  // intersecting the admissible factor degrees along the way.
  std::vector<bool> admissible(static_cast<std::size_t>(n) + 1, true);
  PrimeChoice best;
  int usable = 0;
  for (std::uint32_t p : small_primes_upto(100000)) {
    if (p == 2) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    ModPoly gp = ModPoly::reduce(g_in, p);
    if (gp.degree() != n) continue;
    gp = gp.monic();
    if (gcd(gp, gp.derivative()).degree() != 0) continue;
    std::vector<int> degrees;
    for (auto& [part, d] : distinct_degree_factor(gp))
      for (int i = 0; i < part.degree() / d; ++i) degrees.push_back(d);
    auto sums = subset_sums(degrees, n);
    for (int s = 0; s <= n; ++s) admissible[static_cast<std::size_t>(s)] = admissible[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
    if (best.p == 0 || degrees.size() < best.degrees.size()) best = {p, degrees};
    if (degrees.size() == 1) return {to_unipoly(g_in)};
    if (++usable >= 6) break;
  }
  require(best.p != 0, ErrorCode::invariant_violation, "factor: no usable prime");
  bool any_proper = false;
  for (int s = 1; s < n; ++s) any_proper = any_proper || admissible[static_cast<std::size_t>(s)];
  if (!any_proper) return {to_unipoly(g_in)};

  const std::uint32_t p = best.p;
  std::mt19937_64 rng(0x5eed0000u + p);
  ModPoly gp = ModPoly::reduce(g_in, p).monic();
  std::vector<ModPoly> modular = factor_squarefree_mod(gp, rng);

  // Coefficient bound for lc * (any factor): |lc| * 2^n * ||g||_2.
  Integer norm2 = 0;
  for (const auto& c : g_in) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = 2 * abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  unsigned a = 1;
  Integer modulus = p;
  while (modulus <= bound) {
    modulus *= p;
    ++a;
  }

  HenselTree tree(modular, p);
  unsigned e = 1;
  while (e < a) {
    unsigned e2 = std::min(2 * e, a);
    Integer m2 = pow(Integer(p), e2);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m2.get_mpz_t());
    ZPoly f = g_in;
    for (auto& c : f) c *= inv;
    reduce(f, m2);
    tree.lift(f, m2);
    e = e2;
  }
  std::vector<ZPoly> lifted = tree.leaves();

  // Recombination.
  std::vector<UniPoly> result;
  ZPoly g = g_in;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> comb(s);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    const Integer glc = g.back();
    const Integer lc_g0 = glc * g.front();
    do {
      int dsum = 0;
      for (auto i : comb) dsum += deg(lifted[i]);
      if (!admissible[static_cast<std::size_t>(dsum)]) continue;
      Integer c0 = glc;
      for (auto i : comb) {
        c0 *= lifted[i].front();
        mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), modulus.get_mpz_t());
      }
      if (c0 > modulus / 2) c0 -= modulus;
      if (c0 == 0 || !mpz_divisible_p(lc_g0.get_mpz_t(), c0.get_mpz_t())) continue;
      ZPoly cand{glc};
      for (auto i : comb) cand = mul(cand, lifted[i], modulus);
      cand = primitive(symmetric(cand, modulus));
      ZPoly quotient;
      if (!divide_exact(g, cand, quotient)) continue;
      result.push_back(to_unipoly(cand));
      g = std::move(quotient);
      std::vector<ZPoly> rest;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (std::find(comb.begin(), comb.end(), i) == comb.end()) rest.push_back(std::move(lifted[i]));
      lifted = std::move(rest);
      found = true;
      break;
    } while (next_combination(comb, lifted.size()));
    if (!found) ++s;
  }
  if (deg(g) > 0) result.push_back(to_unipoly(primitive(g)));
  return result;
}

}  // namespace

bool factor_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Rational ca = a.coeff(i), cb = b.coeff(i);
    if (ca != cb) return ca < cb;
  }
  return false;
}

UniPoly Factorization::expand() const {
  UniPoly r = UniPoly::constant(content);
  for (const auto& [f, m] : factors) r *= f.pow(m);
  return r;
}

unsigned Factorization::total_degree() const {
  unsigned t = 0;
  for (const auto& [f, m] : factors) t += static_cast<unsigned>(f.degree()) * m;
  return t;
}

std::vector<UniPoly> factor_squarefree_integral(const UniPoly& g) {
  ZPoly z = g.integer_coeffs();
  std::vector<UniPoly> out;
  if (deg(z) >= 1 && z.front() == 0) {
    out.push_back(UniPoly::x());
    z.erase(z.begin());
  }
  if (deg(z) >= 1) {
    auto parts = zassenhaus(z);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

Factorization factor_unipoly(const UniPoly& p) {
  note_op(Op::factor_unipoly);
  require(!p.is_zero(), ErrorCode::invalid_argument, "factor_unipoly: zero polynomial");
  auto [content, prim] = p.content_primitive();
  Factorization out{content, {}};
  for (auto& [part, mult] : squarefree_decomposition(prim))
    for (auto& f : factor_squarefree_integral(part.primitive())) out.factors.emplace_back(f, mult);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return factor_less(a.first, b.first);
  });
  return out;
}

bool is_irreducible(const UniPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_unipoly(p);
  return f.factors.size() == 1 && f.factors.front().second == 1;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  for (auto& [f, m] : factor_unipoly(p).factors)
    if (f.degree() == 1) roots.push_back(-f.coeff(0) / f.coeff(1));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace symprod
