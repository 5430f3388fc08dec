#pragma once

#include <vector>

#include "hypint/errors.hpp"
#include "hypint/jet.hpp"

namespace hypint {

struct WynnEstimate {
  Complex value;
  double error;  // gap between the two most recent entries of the chosen column
};

// Wynn ε-algorithm on a sequence of partial sums. Among the even columns the
// one whose last two entries agree best is returned.
WynnEstimate wynn_epsilon(const std::vector<Complex>& sums);

struct WynnJetEstimate {
  Jet value;
  double error;
};

// Coefficientwise ε-algorithm on a sequence of jets of equal order.
WynnJetEstimate wynn_epsilon(const std::vector<Jet>& sums);

}  // namespace hypint
