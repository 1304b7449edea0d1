#pragma once

#include <utility>
#include <vector>

#include "symprod/arith/upoly.hpp"

namespace symprod {

/// p = content * prod factors[i].first ^ factors[i].second.
/// Factors are integral, primitive, irreducible over Q, with positive leading
/// coefficient; sorted by degree, then by coefficients from the top down.
struct Factorization {
  Rational content;
  std::vector<std::pair<UniPoly, unsigned>> factors;

  UniPoly expand() const;
  unsigned total_degree() const;
};

/// Factorization over Q (Zassenhaus: mod-p factoring, Hensel lifting,
/// recombination). Throws on the zero polynomial.
Factorization factor_unipoly(const UniPoly& p);

/// Irreducible factors of a squarefree primitive integral polynomial with
/// positive leading coefficient, unsorted.
std::vector<UniPoly> factor_squarefree_integral(const UniPoly& g);

bool is_irreducible(const UniPoly& p);

/// Rational roots of p (distinct, ascending).
std::vector<Rational> rational_roots(const UniPoly& p);

/// Deterministic total order used for sorting factors.
bool factor_less(const UniPoly& a, const UniPoly& b);

}  // namespace symprod
