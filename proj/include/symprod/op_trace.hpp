#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace symprod {

// Library operations whose use is counted, so the fixture corpus can be
// checked for coverage. Counting is a relaxed atomic increment.
enum class Op : std::size_t {
  factor_integer,
  factor_unipoly,
  nf_arith,
  minimal_polynomial,
  eta,
  symmetrize,
  form_of_point,
  point_of_form,
  conjugate_points,
  eta_tilde,
  apply,
  orbit_classify,
  periods_mod_p,
  period_bound,
  rational_periodic_points,
  rational_preimages,
  preperiodic_graph,
  naive_height,
  bad_primes,
  bad_primes_sym,
  height_comparison_constant,
  preperiodicity_bound,
  green_local,
  canonical_height,
  canonical_height_nf,
  multiplier_f,
  multiplier_F,
  critical_points,
  is_pcf,
  is_strongly_pcf_symmetric,
  parse_map,
  count_
};

inline constexpr std::size_t op_count = static_cast<std::size_t>(Op::count_);

std::string_view op_name(Op op) noexcept;
void note_op(Op op) noexcept;
std::size_t op_calls(Op op) noexcept;
void reset_op_counts() noexcept;

}  // namespace symprod
