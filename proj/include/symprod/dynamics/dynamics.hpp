#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symprod/core/binary_form.hpp"
#include "symprod/core/projective.hpp"
#include "symprod/core/symmetric.hpp"

namespace symprod {

/// Factorization budget: largest admissible degree d^n of an iterate.
inline constexpr std::uint64_t default_budget = 64;

struct OrbitClassification {
  enum class Status { preperiodic, wandering };
  Status status = Status::preperiodic;
  unsigned tail = 0;    ///< preperiodic: steps before entering the cycle
  unsigned period = 0;  ///< preperiodic: minimal period
  /// wandering: first iterate index whose height exceeded the bound
  unsigned escape_index = 0;
  double escape_height = 0;
  double bound = 0;
  bool bound_certified = true;
  /// Orbit prefix as printed points (up to the repeat or escape).
  std::vector<std::string> orbit;

  bool preperiodic() const { return status == Status::preperiodic; }
};

/// Cycle detection by hashing exact normalized points; an orbit whose naive
/// height exceeds preperiodicity_bound(F) is certified wandering.
OrbitClassification orbit_classify(const MorphismPk& F, const PkPoint& p);
/// Points over Q or a number field; heights of algebraic iterates are measured
/// through eta_tilde and symmetrize(f, [K:Q]).
OrbitClassification orbit_classify(const RationalMap1& f, const AlgebraicPoint& p);

/// Image of an algebraic point under f.
AlgebraicPoint apply(const RationalMap1& f, const AlgebraicPoint& p);

/// Cycle lengths of f on P^1(F_{p^j}) for j <= k, closed under lcm of at most
/// k elements. Throws Error(invalid_argument) at a bad prime.
std::set<unsigned> periods_mod_p(const RationalMap1& f, unsigned p, unsigned k);

struct PeriodBoundInput {
  Integer Np;  ///< norm of the prime, a power of p
  unsigned k = 1;
  Integer p;
  Integer vp = 1;
};

/// floor of 1 + log_2(vp) for odd p; for p = 2 the floor of
/// 1 + log_phi((sqrt5 vp + sqrt(5 vp^2 + 4))/2) by exact comparison in Z[sqrt5].
unsigned exponent_bound(const Integer& p, const Integer& vp);
/// (sum_{i<=k} Np^i) k Np p^e.
Integer period_bound(const PeriodBoundInput& in);

struct PeriodicPoint {
  PkPoint point;
  unsigned period = 0;
  friend bool operator==(const PeriodicPoint&, const PeriodicPoint&) = default;
};

/// Q-points of P^k periodic under symmetrize(f, k) assembled from roots of the
/// fixed-point forms of f^n, n <= n_max. Throws Error(budget_exceeded) when
/// d^n_max exceeds the budget. Sorted by point.
std::vector<PeriodicPoint> rational_periodic_points(const RationalMap1& f, unsigned k, unsigned n_max,
                                                    std::uint64_t budget = default_budget);
/// Same, for an already computed F = symmetrize(f, k).
std::vector<PeriodicPoint> rational_periodic_points(const RationalMap1& f, const MorphismPk& F, unsigned n_max,
                                                    std::uint64_t budget = default_budget);

/// All p in P^k(Q) with F(p) = q, sorted.
std::vector<PkPoint> rational_preimages(const RationalMap1& f, const MorphismPk& F, const PkPoint& q);

struct GraphNode {
  PkPoint point;
  std::vector<ConjugateClass> conjugates;
  unsigned tail = 0;
  unsigned period = 0;
};

struct PreperiodicGraph {
  unsigned k = 1;
  std::vector<GraphNode> nodes;  ///< sorted by point
  std::vector<std::size_t> image;  ///< edge i -> image[i]

  std::optional<std::size_t> find(const PkPoint& p) const;
};

PreperiodicGraph preperiodic_graph(const RationalMap1& f, unsigned k, unsigned n_max,
                                   std::uint64_t budget = default_budget);

/// A preperiodic point of f recovered from the graph: one Galois orbit.
struct RecoveredClass {
  ConjugateClass cls;
  unsigned tail = 0, period = 0;
};
/// Distinct Galois orbits of f-points appearing in the node decompositions,
/// ordered by degree then minimal polynomial (infinity first).
std::vector<RecoveredClass> recovered_classes(const RationalMap1& f, const PreperiodicGraph& g);

/// A number field up to isomorphism together with the preperiodic points of f
/// it contains among the recovered classes.
struct FieldSummary {
  UniPoly minpoly;  ///< representative defining polynomial (integral primitive)
  int degree = 1;
  bool galois = true;
  std::size_t rational_points = 0;  ///< points of P^1(K) among recovered ones
  std::vector<UniPoly> members;     ///< minimal polynomials of classes generating K
};
std::vector<FieldSummary> field_summaries(const std::vector<RecoveredClass>& classes);

/// Number of recovered points lying in P^1(K).
std::size_t points_over_field(const std::vector<RecoveredClass>& classes, const FieldPtr& K);

/// n_max default: min of the cap, the period bound at the two smallest good
/// primes, and the largest n with d^n <= budget.
unsigned default_n_max(const RationalMap1& f, unsigned k, unsigned cap, std::uint64_t budget = default_budget);

}  // namespace symprod
