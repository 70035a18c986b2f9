#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regulous/resolve.hpp"

namespace regulous {

struct PoleClassification {
  Point point;
  std::optional<Rat> limit;
  DefinitenessVerdict definiteness;
  /// Order j of the first partial derivative without a continuous extension here.
  std::optional<unsigned> first_failing_order;
  /// The failing partial as (i, j - i): d^j / dx^i dy^(j-i).
  std::optional<std::pair<unsigned, unsigned>> failing_partial;
  std::optional<Continuity> failure;
};

struct ClassificationReport {
  bool is_rational_with_finite_poles = true;
  bool regulous = false;
  bool unsupported = false;
  unsigned k_max = 0;
  /// Largest k with every partial of order <= k extending continuously; unset unless regulous.
  std::optional<unsigned> max_verified_k;
  unsigned stages = 0;
  std::vector<PoleClassification> per_pole;
  /// All orders up to k_max passed, so the true class may be higher.
  bool budget_exhausted = false;
  std::vector<ResolutionWitness> witnesses;
};

ClassificationReport regularity_class(const RatFunc& f, unsigned k_max, const ResolveOptions& opts = {});

/// Least m (closed form 2k on the one-blow-up class) for which f^m is k-flat.
/// Throws PreconditionViolated when f is not regulous and BudgetExhausted past `budget`.
unsigned flat_power(const RatFunc& f, unsigned k, unsigned budget = 64);

/// f^m has all partials of order <= k vanishing (as continuous extensions) on the zero set of f.
/// Throws Unsupported for irrational zeros.
bool verify_k_flat(const RatFunc& f, unsigned m, unsigned k);

}  // namespace regulous
