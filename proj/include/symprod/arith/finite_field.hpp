#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symprod/arith/modpoly.hpp"

namespace symprod {

/// F_q with q = p^e, elements encoded as integers in [0, q): the base-p
/// digits are the coefficients of a polynomial in the generator of a fixed
/// irreducible modulus. Multiplication goes through log/exp tables.
class GaloisField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint64_t max_order = std::uint64_t{1} << 22;

  /// Throws Error(budget_exceeded) when p^e exceeds max_order.
  GaloisField(std::uint32_t p, unsigned e);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }
  const ModPoly& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  ///< a != 0
  /// Image of an integer (prime-field embedding).
  Elem from_integer(const Integer& n) const;

 private:
  Elem poly_mul(Elem a, Elem b) const;  // schoolbook product mod the modulus

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  ModPoly modulus_;
  std::vector<Elem> exp_;           // exp_[i] = g^i, i in [0, 2(q-1))
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

}  // namespace symprod
