#include "symprod/errors.hpp"

#include <atomic>

#include "symprod/op_trace.hpp"

namespace symprod {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::degenerate_map: return "degenerate_map";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::field_mismatch: return "field_mismatch";
    case ErrorCode::not_periodic: return "not_periodic";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::precision_not_reached: return "precision_not_reached";
    case ErrorCode::invariant_violation: return "invariant_violation";
    case ErrorCode::certificate_failure: return "certificate_failure";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

namespace {
std::array<std::atomic<std::size_t>, op_count> g_op_counts{};
}

std::string_view op_name(Op op) noexcept {
  static constexpr std::array<std::string_view, op_count> names = {
      "factor_integer",
      "factor_unipoly",
      "nf_arith",
      "minimal_polynomial",
      "eta",
      "symmetrize",
      "form_of_point",
      "point_of_form",
      "conjugate_points",
      "eta_tilde",
      "apply",
      "orbit_classify",
      "periods_mod_p",
      "period_bound",
      "rational_periodic_points",
      "rational_preimages",
      "preperiodic_graph",
      "naive_height",
      "bad_primes",
      "bad_primes_sym",
      "height_comparison_constant",
      "preperiodicity_bound",
      "green_local",
      "canonical_height",
      "canonical_height_nf",
      "multiplier_f",
      "multiplier_F",
      "critical_points",
      "is_pcf",
      "is_strongly_pcf_symmetric",
      "parse_map",
  };
  return names[static_cast<std::size_t>(op)];
}

void note_op(Op op) noexcept {
  g_op_counts[static_cast<std::size_t>(op)].fetch_add(1, std::memory_order_relaxed);
}

std::size_t op_calls(Op op) noexcept {
  return g_op_counts[static_cast<std::size_t>(op)].load(std::memory_order_relaxed);
}

void reset_op_counts() noexcept {
  for (auto& c : g_op_counts) c.store(0, std::memory_order_relaxed);
}

}  // namespace symprod
