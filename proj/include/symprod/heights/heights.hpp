#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symprod/core/binary_form.hpp"
#include "symprod/core/projective.hpp"
#include "symprod/core/symmetric.hpp"

namespace symprod {

/// log max |x_i| of the coprime integral coordinates.
double naive_height(const PkPoint& p);

/// Sorted rational primes.
using BadPrimeSet = std::vector<Integer>;

/// True when the reduction of the primitive lift of f modulo p is not a
/// morphism of degree d (a component vanishes or the two forms share a
/// root over the algebraic closure of F_p).
bool degenerate_mod(const RationalMap1& f, const Integer& p);
BadPrimeSet bad_primes(const RationalMap1& f);
/// Bad primes of symmetrize(f, k); over Q these coincide with bad_primes(f).
BadPrimeSet bad_primes_sym(const RationalMap1& f, unsigned k);

/// sum_j g[i][j] * F_j = r[i] * x_i^degree with integral g and nonzero r.
struct NullstellensatzCertificate {
  unsigned degree = 0;
  std::vector<Integer> r;
  std::vector<std::vector<MPoly>> g;
  /// Exact re-check of every identity.
  bool verify(const MorphismPk& F) const;
};

/// Search in degrees (k+1)(d-1)+1 .. max_degree. F must be integral.
std::optional<NullstellensatzCertificate> nullstellensatz_certificate(const MorphismPk& F,
                                                                      unsigned max_degree = 8);

/// Two-sided bound lower <= h(F(p)) - d h(p) <= upper on P^k(Q) for the
/// primitive integral lift of F; C = max(upper, -lower).
struct HeightConstant {
  double upper = 0;
  double lower = 0;
  double C = 0;
  bool certified = false;
  /// Range of log ||F(y)|| over real y with ||y|| = 1.
  double archimedean_low = 0, archimedean_high = 0;
  /// Primes dividing some r_i with max_i v_q(r_i): the only places where
  /// the q-adic log-norm of F(y) can be negative.
  std::vector<std::pair<Integer, unsigned>> places;
  std::optional<NullstellensatzCertificate> certificate;
};
HeightConstant height_comparison_constant(const MorphismPk& F, unsigned max_degree = 8);

/// C/(d-1): a point with an iterate of naive height above this is not
/// preperiodic.
double preperiodicity_bound(const MorphismPk& F);
double preperiodicity_bound(const RationalMap1& f);

struct HeightOptions {
  double tol = 1e-6;
  unsigned precision = 128;  ///< MPFR bits for the archimedean place
  unsigned max_iterations = 10000;
  unsigned certificate_degree_cap = 8;
};

struct LocalGreen {
  double value = 0;
  double error = 0;
  unsigned iterations = 0;
};

/// Place 0 is archimedean, otherwise a prime. Values refer to the primitive
/// integral lift of F and the coprime integral lift of p.
LocalGreen green_local(const MorphismPk& F, const PkPoint& p, const Integer& place,
                       const HeightOptions& opt = {});

struct PlaceContribution {
  std::string place;  ///< "inf" or the prime
  double contribution = 0;
  double error = 0;
};

struct HeightValue {
  double value = 0;
  double error_bound = 0;
  std::vector<PlaceContribution> places;
  bool certified = true;
  std::string note;
};

HeightValue canonical_height(const MorphismPk& F, const PkPoint& p, const HeightOptions& opt = {});
/// (1/k) canonical height of eta_tilde(P) under symmetrize(f, k), k = [K:Q].
HeightValue canonical_height_nf(const RationalMap1& f, const AlgebraicPoint& P,
                                const HeightOptions& opt = {});

/// Precomputed lift, derivatives-free evaluation data and constants for one
/// morphism; reused across many height evaluations.
class HeightContext {
 public:
  explicit HeightContext(const MorphismPk& F, unsigned certificate_degree_cap = 8);
  const MorphismPk& morphism() const noexcept { return F_; }
  const HeightConstant& constant() const noexcept { return constant_; }
  LocalGreen green(const PkPoint& p, const Integer& place, const HeightOptions& opt) const;
  HeightValue canonical(const PkPoint& p, const HeightOptions& opt) const;

 private:
  MorphismPk F_;
  HeightConstant constant_;
};

}  // namespace symprod
