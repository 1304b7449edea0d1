#include <map>
#include <unordered_map>

#include "symprod/dynamics/dynamics.hpp"
#include "symprod/errors.hpp"
#include "symprod/heights/heights.hpp"
#include "symprod/op_trace.hpp"

namespace symprod {

namespace {

constexpr std::size_t kOrbitRecord = 256;
constexpr double kHeightMargin = 1e-9;

std::vector<Rational> point_key(const AlgebraicPoint& p) {
  if (p.infinity) return {};
  return p.x.coords();
}

}  // namespace

AlgebraicPoint apply(const RationalMap1& f, const AlgebraicPoint& p) {
  const FieldPtr& K = p.field;
  const NFElem zero(K, Rational(0));
  NFElem z = p.infinity ? NFElem(K, Rational(1)) : p.x;
  NFElem t = p.infinity ? zero : NFElem(K, Rational(1));
  auto [a, b] = f.apply(z, t, zero);
  if (b.is_zero()) {
    require(!a.is_zero(), ErrorCode::invariant_violation, "apply: both components vanish");
    return {K, true, zero};
  }
  return {K, false, a / b};
}

OrbitClassification orbit_classify(const MorphismPk& F, const PkPoint& p) {
  note_op(Op::orbit_classify);
  const HeightConstant hc = height_comparison_constant(F);
  OrbitClassification out;
  out.bound = hc.C / (F.degree() - 1);
  out.bound_certified = hc.certified;
  std::unordered_map<PkPoint, unsigned, PkPointHash> seen;
  PkPoint cur = p;
  for (unsigned n = 0;; ++n) {
    if (auto it = seen.find(cur); it != seen.end()) {
      out.status = OrbitClassification::Status::preperiodic;
      out.tail = it->second;
      out.period = n - it->second;
      return out;
    }
    const double h = naive_height(cur);
    if (out.orbit.size() < kOrbitRecord) out.orbit.push_back(cur.to_string());
    if (h > out.bound + kHeightMargin) {
      out.status = OrbitClassification::Status::wandering;
      out.escape_index = n;
      out.escape_height = h;
      return out;
    }
    seen.emplace(cur, n);
    cur = F.apply(cur);
  }
}

OrbitClassification orbit_classify(const RationalMap1& f, const AlgebraicPoint& p) {
  note_op(Op::orbit_classify);
  const unsigned k = p.infinity ? 1u : static_cast<unsigned>(p.field->degree());
  const MorphismPk F = k == 1 ? as_morphism(f) : symmetrize(f, k);
  const HeightConstant hc = height_comparison_constant(F);
  OrbitClassification out;
  out.bound = hc.C / (F.degree() - 1);
  out.bound_certified = hc.certified;
  std::map<std::pair<bool, std::vector<Rational>>, unsigned> seen;
  AlgebraicPoint cur = p;
  for (unsigned n = 0;; ++n) {
    auto key = std::make_pair(cur.infinity, point_key(cur));
    if (auto it = seen.find(key); it != seen.end()) {
      out.status = OrbitClassification::Status::preperiodic;
      out.tail = it->second;
      out.period = n - it->second;
      return out;
    }
    const double h = naive_height(eta_tilde(cur, k));
    if (out.orbit.size() < kOrbitRecord) out.orbit.push_back(cur.to_string());
    if (h > out.bound + kHeightMargin) {
      out.status = OrbitClassification::Status::wandering;
      out.escape_index = n;
      out.escape_height = h;
      return out;
    }
    seen.emplace(std::move(key), n);
    cur = apply(f, cur);
  }
}

}  // namespace symprod
