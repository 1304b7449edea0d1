#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "symprod/arith/factor.hpp"
#include "symprod/dynamics/dynamics.hpp"
#include "symprod/errors.hpp"
#include "symprod/heights/heights.hpp"
#include "symprod/op_trace.hpp"
#include "symprod/parallel.hpp"

namespace symprod {

namespace {

const BinaryForm kZ(1, {Rational(0), Rational(1)});  // X
const BinaryForm kT(1, {Rational(1), Rational(0)});  // Y, vanishing at infinity

struct UniPolyLess {
  bool operator()(const UniPoly& a, const UniPoly& b) const { return factor_less(a, b); }
};

// Irreducible root form with the number of times it may be used.
struct RootFactor {
  BinaryForm form;
  unsigned available;
};

// Root factors of a nonzero binary form: affine irreducible factors
// homogenized to their own degree, plus the form Y for a root at infinity.
std::vector<RootFactor> root_factors(const BinaryForm& g) {
  std::vector<RootFactor> out;
  const UniPoly affine = g.dehomogenize();
  if (affine.degree() >= 1)
    for (const auto& [fac, mult] : factor_unipoly(affine).factors)
      out.push_back({BinaryForm::homogenize(fac, fac.degree()), mult});
  if (const int inf = g.infinity_multiplicity(); inf > 0) out.push_back({kT, static_cast<unsigned>(inf)});
  return out;
}

// Every product of the factors, each used at most `available` times, of total degree k.
std::vector<PkPoint> assemble(const std::vector<RootFactor>& factors, unsigned k) {
  std::vector<PkPoint> out;
  auto rec = [&](auto&& self, std::size_t i, unsigned left, const BinaryForm& acc) -> void {
    if (left == 0) {
      out.push_back(point_of_roots(acc));
      return;
    }
    if (i == factors.size()) return;
    const unsigned deg = static_cast<unsigned>(factors[i].form.degree());
    BinaryForm cur = acc;
    for (unsigned used = 0;; ++used) {
      self(self, i + 1, left - used * deg, cur);
      if (used == factors[i].available || (used + 1) * deg > left) break;
      cur = cur * factors[i].form;
    }
  };
  rec(rec, 0, k, BinaryForm(0, {Rational(1)}));
  return out;
}

// Positive scalar making the pair (a, b) jointly primitive integral.
Rational joint_scale(const BinaryForm& a, const BinaryForm& b) {
  Integer den = 1, num = 0;
  for (const auto* g : {&a, &b})
    for (const auto& c : g->coeffs()) den = lcm(den, c.get_den());
  for (const auto* g : {&a, &b})
    for (const auto& c : g->coeffs())
      if (c != 0) num = gcd(num, Integer(c.get_num() * (den / c.get_den())));
  return make_rational(den, num);
}

std::uint64_t checked_power(std::uint64_t base, unsigned e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

std::vector<PeriodicPoint> rational_periodic_points(const RationalMap1& f, unsigned k, unsigned n_max,
                                                    std::uint64_t budget) {
  return rational_periodic_points(f, symmetrize(f, k), n_max, budget);
}

std::vector<PeriodicPoint> rational_periodic_points(const RationalMap1& f, const MorphismPk& F, unsigned n_max,
                                                    std::uint64_t budget) {
  note_op(Op::rational_periodic_points);
  require(n_max >= 1, ErrorCode::invalid_argument, "rational_periodic_points: n_max must be positive");
  const unsigned k = static_cast<unsigned>(F.dim());
  const auto d = static_cast<std::uint64_t>(f.degree());
  if (checked_power(d, n_max, budget) > budget)
    fail(ErrorCode::budget_exceeded, "rational_periodic_points: d^n_max = " + std::to_string(d) + "^" +
                                         std::to_string(n_max) + " exceeds the factorization budget " +
                                         std::to_string(budget));

  std::set<UniPoly, UniPolyLess> affine;
  bool infinity = false;
  BinaryForm pn = kZ, qn = kT;
  for (unsigned n = 1; n <= n_max; ++n) {
    BinaryForm a = f.num().compose(pn, qn), b = f.den().compose(pn, qn);
    const Rational s = joint_scale(a, b);
    pn = a * s;
    qn = b * s;
    const BinaryForm fixed = (kZ * qn - kT * pn).primitive();
    require(!fixed.is_zero(), ErrorCode::invariant_violation, "fixed-point form vanished");
    for (const auto& rf : root_factors(fixed)) {
      if (rf.form.degree() > static_cast<int>(k)) continue;
      if (rf.form == kT)
        infinity = true;
      else
        affine.insert(rf.form.dehomogenize());
    }
  }
  std::vector<RootFactor> factors;
  for (const auto& u : affine) factors.push_back({BinaryForm::homogenize(u, u.degree()), k});
  if (infinity) factors.push_back({kT, k});

  const std::vector<PkPoint> candidates = assemble(factors, k);
  unsigned horizon = 1;
  for (unsigned n = 1; n <= n_max; ++n) horizon = std::lcm(horizon, n);

  std::vector<unsigned> period(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t i) {
    PkPoint cur = candidates[i];
    for (unsigned n = 1; n <= horizon; ++n) {
      cur = F.apply(cur);
      if (cur == candidates[i]) {
        period[i] = n;
        return;
      }
    }
  });
  std::vector<PeriodicPoint> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (period[i]) out.push_back({candidates[i], period[i]});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PkPoint> rational_preimages(const RationalMap1& f, const MorphismPk& F, const PkPoint& q) {
  note_op(Op::rational_preimages);
  require(q.dim() == F.dim(), ErrorCode::invalid_argument, "rational_preimages: dimension mismatch");
  const unsigned k = static_cast<unsigned>(F.dim());
  const BinaryForm pullback = point_polynomial(q).compose(f.num(), f.den());
  require(!pullback.is_zero(), ErrorCode::invariant_violation, "rational_preimages: pullback vanished");
  std::vector<PkPoint> out;
  for (auto& p : assemble(root_factors(pullback), k))
    if (F.apply(p) == q) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::size_t> PreperiodicGraph::find(const PkPoint& p) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), p, [](const GraphNode& n, const PkPoint& q) { return n.point < q; });
  if (it == nodes.end() || !(it->point == p)) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

PreperiodicGraph preperiodic_graph(const RationalMap1& f, unsigned k, unsigned n_max, std::uint64_t budget) {
  note_op(Op::preperiodic_graph);
  const MorphismPk F = symmetrize(f, k);
  std::set<PkPoint> all;
  std::vector<PkPoint> frontier;
  for (auto& pp : rational_periodic_points(f, F, n_max, budget))
    if (all.insert(pp.point).second) frontier.push_back(pp.point);
  while (!frontier.empty()) {
    std::vector<std::vector<PkPoint>> found(frontier.size());
    parallel_for(frontier.size(), [&](std::size_t i) { found[i] = rational_preimages(f, F, frontier[i]); });
    std::vector<PkPoint> next;
    for (auto& batch : found)
      for (auto& p : batch)
        if (all.insert(p).second) next.push_back(std::move(p));
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  PreperiodicGraph g;
  g.k = k;
  for (const auto& p : all) g.nodes.push_back({p, {}, 0, 0});
  g.image.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    auto j = g.find(F.apply(g.nodes[i].point));
    require(j.has_value(), ErrorCode::invariant_violation, "preperiodic_graph: graph not closed under F");
    g.image[i] = *j;
  }
  // tail/period from the functional graph
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    std::unordered_map<std::size_t, unsigned> step;
    std::size_t v = i;
    unsigned n = 0;
    while (!step.count(v)) {
      step[v] = n++;
      v = g.image[v];
    }
    g.nodes[i].tail = step[v];
    g.nodes[i].period = n - step[v];
  }
  parallel_for(g.nodes.size(), [&](std::size_t i) { g.nodes[i].conjugates = conjugate_points(g.nodes[i].point); });
  return g;
}

std::vector<RecoveredClass> recovered_classes(const RationalMap1& f, const PreperiodicGraph& g) {
  std::map<std::pair<int, std::vector<Rational>>, RecoveredClass> seen;
  for (const auto& node : g.nodes)
    for (const auto& cls : node.conjugates) {
      auto key = std::make_pair(cls.point.infinity ? 0 : cls.degree(), cls.point.infinity ? std::vector<Rational>{} : cls.minpoly.coeffs());
      if (seen.count(key)) continue;
      RecoveredClass rc;
      rc.cls = cls;
      rc.cls.multiplicity = 1;
      std::map<std::pair<bool, std::vector<Rational>>, unsigned> orbit;
      AlgebraicPoint cur = cls.point;
      for (unsigned n = 0;; ++n) {
        auto k2 = std::make_pair(cur.infinity, cur.infinity ? std::vector<Rational>{} : cur.x.coords());
        if (auto it = orbit.find(k2); it != orbit.end()) {
          rc.tail = it->second;
          rc.period = n - it->second;
          break;
        }
        require(n < 100000, ErrorCode::invariant_violation, "recovered point is not preperiodic");
        orbit.emplace(std::move(k2), n);
        cur = apply(f, cur);
      }
      seen.emplace(std::move(key), std::move(rc));
    }
  std::vector<RecoveredClass> out;
  for (auto& [key, rc] : seen) out.push_back(std::move(rc));
  std::stable_sort(out.begin(), out.end(), [](const RecoveredClass& a, const RecoveredClass& b) {
    const int da = a.cls.point.infinity ? 0 : a.cls.degree(), db = b.cls.point.infinity ? 0 : b.cls.degree();
    if (da != db) return da < db;
    if (da == 0) return false;
    if (da == 1) return a.cls.point.x.rational_value() < b.cls.point.x.rational_value();
    return factor_less(a.cls.minpoly, b.cls.minpoly);
  });
  return out;
}

std::size_t points_over_field(const std::vector<RecoveredClass>& classes, const FieldPtr& K) {
  std::size_t count = 0;
  for (const auto& rc : classes) {
    if (rc.cls.point.infinity || rc.cls.degree() == 1) {
      ++count;
      continue;
    }
    if (K->degree() % rc.cls.degree() != 0) continue;
    count += roots_in_field(rc.cls.minpoly, K).size();
  }
  return count;
}

std::vector<FieldSummary> field_summaries(const std::vector<RecoveredClass>& classes) {
  std::vector<FieldSummary> out;
  FieldSummary q;
  q.minpoly = UniPoly::x();
  q.degree = 1;
  q.galois = true;
  q.rational_points = points_over_field(classes, NumberField::rationals());
  out.push_back(q);
  std::vector<FieldPtr> fields;
  for (const auto& rc : classes) {
    if (rc.cls.point.infinity || rc.cls.degree() == 1) continue;
    bool placed = false;
    for (std::size_t i = 0; i < fields.size() && !placed; ++i)
      if (fields[i]->degree() == rc.cls.degree() && field_contains_root(fields[i], rc.cls.minpoly)) {
        out[i + 1].members.push_back(rc.cls.minpoly);
        placed = true;
      }
    if (placed) continue;
    fields.push_back(rc.cls.field);
    FieldSummary s;
    s.degree = rc.cls.degree();
    s.members.push_back(rc.cls.minpoly);
    out.push_back(s);
  }
  auto height = [](const UniPoly& u) {
    Integer m = 0;
    for (const auto& c : u.coeffs()) m = std::max(m, abs(c.get_num()));
    return m;
  };
  for (std::size_t i = 0; i < fields.size(); ++i) {
    FieldSummary& s = out[i + 1];
    s.minpoly = *std::min_element(s.members.begin(), s.members.end(), [&](const UniPoly& a, const UniPoly& b) {
      const Integer ha = height(a), hb = height(b);
      return ha != hb ? ha < hb : factor_less(a, b);
    });
    s.galois = roots_in_field(fields[i]->minpoly(), fields[i]).size() == static_cast<std::size_t>(s.degree);
    s.rational_points = points_over_field(classes, fields[i]);
  }
  return out;
}

unsigned default_n_max(const RationalMap1& f, unsigned k, unsigned cap, std::uint64_t budget) {
  const auto d = static_cast<std::uint64_t>(f.degree());
  unsigned by_budget = 0;
  while (checked_power(d, by_budget + 1, budget) <= budget) ++by_budget;
  Integer best = by_budget;
  const auto bad = bad_primes(f);
  unsigned used = 0;
  for (unsigned p = 2; used < 2; ++p) {
    if (!is_prime(Integer(p)) || std::find(bad.begin(), bad.end(), Integer(p)) != bad.end()) continue;
    ++used;
    best = std::min(best, period_bound({Integer(p), k, Integer(p), Integer(1)}));
  }
  if (cap > 0) best = std::min(best, Integer(cap));
  return std::max(1u, static_cast<unsigned>(best.get_ui()));
}

}  // namespace symprod
