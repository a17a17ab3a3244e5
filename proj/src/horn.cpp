#include "depolar/horn.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "depolar/lr.hpp"

namespace depolar {

HornTriple::HornTriple(const YoungFrame& sum, const YoungFrame& first, const YoungFrame& second) {
  const int d = std::max({sum.d(), first.d(), second.d()});
  lambda = sum.padded(d);
  mu = first.padded(d);
  nu = second.padded(d);
}

bool basic_horn_holds(const HornTriple& t) {
  if (t.lambda.n() != t.mu.n() + t.nu.n()) return false;
  const int d = t.d();
  // 1-based i, j with m = i + j - 1 <= d.
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; i + j - 1 <= d; ++j) {
      const int m = i + j - 1;
      if (t.lambda[m - 1] > t.mu[i - 1] + t.nu[j - 1]) return false;
    }
  }
  return true;
}

bool horn_feasible(const HornTriple& t) { return lr_coefficient(t.lambda, t.mu, t.nu) > 0; }

SupportWindow::SupportWindow(const YoungFrame& lambda, int d, int k) : lambda_(lambda), d_(d), k_(k) {
  if (k < 0 || k > lambda.n()) throw std::invalid_argument("support_window: k outside [0, n]");
}

bool SupportWindow::operator()(const YoungFrame& lambda_prime) const {
  for (int m = 0; m < d_; ++m) {
    if (std::abs(lambda_[m] - lambda_prime[m]) > width()) return false;
  }
  return true;
}

bool theorem1_chain_check(const YoungFrame& lambda, const YoungFrame& lambda_prime, int l, int k, int d) {
  const auto source = lambda.padded(d);
  const auto target = lambda_prime.padded(d);
  std::set<YoungFrame> reachable;
  for (const auto& [mu, nu] : lr_nonzero_pairs(source, l, k)) reachable.insert(mu);
  for (const auto& [mu, gamma] : lr_nonzero_pairs(target, l, k)) {
    if (reachable.count(mu)) return false;
  }
  return true;
}

}  // namespace depolar
