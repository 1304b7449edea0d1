#pragma once

#include <string>
#include <vector>

#include "symprod/arith/matrix.hpp"
#include "symprod/core/binary_form.hpp"
#include "symprod/core/symmetric.hpp"
#include "symprod/dynamics/dynamics.hpp"

namespace symprod {

/// (f^n)'(P) in affine charts along the cycle (w = 1/z at infinity).
/// Throws Error(not_periodic) unless f^n(P) = P.
NFElem multiplier_f(const RationalMap1& f, const AlgebraicPoint& P, unsigned n);

struct BaseMultiplier {
  ConjugateClass cls;
  unsigned period = 0;  ///< exact period of the point under f
  NFElem multiplier;    ///< over the n-th iterate of f at the point's own period
};

struct MultiplierReport {
  PkPoint point;
  unsigned period = 0;
  std::size_t chart = 0;  ///< coordinate set to 1 at the point
  std::vector<BaseMultiplier> base;
  RatMatrix matrix;  ///< Jacobian of F^n in the chart
  UniPoly charpoly;
};

/// Chart = index of a nonzero coordinate of p; by default the last one.
MultiplierReport multiplier_F(const RationalMap1& f, unsigned k, const PkPoint& p, unsigned n);
MultiplierReport multiplier_F(const RationalMap1& f, unsigned k, const PkPoint& p, unsigned n, std::size_t chart);
MultiplierReport multiplier_F(const RationalMap1& f, const MorphismPk& F, const PkPoint& p, unsigned n,
                              std::size_t chart);

/// Monic factors over Q, e.g. "(x + 3/2)*(x^2 + 5/4)".
std::string factored_string(const UniPoly& p, const std::string& var = "x");

/// Roots of the Wronskian with multiplicities (total 2d - 2).
std::vector<ConjugateClass> critical_points(const RationalMap1& f);

struct CriticalOrbit {
  ConjugateClass point;
  OrbitClassification orbit;
};

struct PCFCertificate {
  bool pcf = false;
  unsigned k = 1;  ///< symmetric power the verdict is reported for
  std::string justification;
  std::vector<CriticalOrbit> critical;
};

PCFCertificate is_pcf(const RationalMap1& f);
/// The verdict for symmetrize(f, k) is decided through f (strong PCF for
/// symmetric products is equivalent to PCF of the base map).
PCFCertificate is_strongly_pcf_symmetric(const RationalMap1& f, unsigned k);

}  // namespace symprod
