#pragma once

#include <optional>
#include <vector>

#include "synthminer/event_log.hpp"

namespace synthminer {

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<long long>>;

struct LinearCombination {
  bool dependent = false;
  /// One coefficient per matrix column when `dependent`; free variables are 0.
  std::vector<Rational> witness;
};

/// Decides whether `target` lies in the rational span of the columns of
/// `matrix` by exact Gaussian elimination. An empty column set spans only
/// the zero vector. Throws std::invalid_argument on a dimension mismatch.
LinearCombination is_linear_combination(const IntMatrix& matrix, const std::vector<long long>& target);

IntMatrix transpose(const IntMatrix& m);

}  // namespace synthminer
