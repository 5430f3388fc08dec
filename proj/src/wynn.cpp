#include "hypint/wynn.hpp"

#include <cmath>
#include <limits>

namespace hypint {

WynnEstimate wynn_epsilon(const std::vector<Complex>& sums) {
  const std::size_t n = sums.size();
  if (n == 0) throw DomainError("wynn_epsilon needs at least one partial sum");
  WynnEstimate best{sums.back(), std::numeric_limits<double>::infinity()};
  if (n >= 2) best.error = std::abs(sums[n - 1] - sums[n - 2]);
  // prev = column k−1, cur = column k; column k has n−k entries.
  std::vector<Complex> prev(n + 1, 0.0), cur(sums);
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Complex> next(n - k);
    bool broken = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const Complex d = cur[i + 1] - cur[i];
      if (std::abs(d) <= 1e-300 * std::max(1.0, std::abs(cur[i]))) {
        broken = true;
        break;
      }
      next[i] = prev[i + 1] + 1.0 / d;
    }
    if (broken) break;
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0 && cur.size() >= 2) {
      const double err = std::abs(cur.back() - cur[cur.size() - 2]);
      if (std::isfinite(err) && err < best.error) best = {cur.back(), err};
    }
  }
  return best;
}

WynnJetEstimate wynn_epsilon(const std::vector<Jet>& sums) {
  if (sums.empty()) throw DomainError("wynn_epsilon needs at least one partial sum");
  const int K = sums.front().order();
  WynnJetEstimate out{Jet(K), 0.0};
  std::vector<Complex> seq(sums.size());
  for (int c = 0; c <= K; ++c) {
    for (std::size_t i = 0; i < sums.size(); ++i) seq[i] = sums[i][c];
    const WynnEstimate e = wynn_epsilon(seq);
    out.value[c] = e.value;
    out.error = std::max(out.error, e.error);
  }
  return out;
}

}  // namespace hypint
