#include "depolar/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "depolar/lr.hpp"

namespace depolar {

namespace {

ExactScalar as_scalar(std::uint64_t v) { return ExactScalar(mpz_class(std::to_string(v))); }

ExactScalar power_of(const ExactScalar& base, int e) {
  ExactScalar out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

ExactScalar BranchingTable::coefficient_of(const YoungFrame& mu) const {
  ExactScalar total = 0;
  for (const auto& [key, value] : entries) {
    if (key.first == mu) total += value;
  }
  return total;
}

const ExactScalar& SpectralTable::operator[](const YoungFrame& frame) const {
  const auto target = frame.padded(d);
  for (const auto& [f, w] : entries) {
    if (f == target) return w;
  }
  throw std::out_of_range("frame " + frame.to_string() + " is not in the table");
}

ExactScalar SpectralTable::total() const {
  ExactScalar sum = 0;
  for (const auto& entry : entries) sum += entry.second;
  return sum;
}

std::vector<YoungFrame> SpectralTable::support() const {
  std::vector<YoungFrame> out;
  for (const auto& [f, w] : entries) {
    if (w != 0) out.push_back(f);
  }
  return out;
}

BranchingTable partial_trace_decomposition(const YoungFrame& lambda, int k) {
  const int n = lambda.n();
  if (k < 0 || k > n) throw std::invalid_argument("partial_trace_decomposition: k outside [0, n]");
  const int d = lambda.d();
  BranchingTable table{lambda, n - k, k, {}};
  const auto dim_u_lambda = as_scalar(dim_unitary(lambda, d));
  for (const auto& [mu, nu] : lr_nonzero_pairs(lambda, n - k, k)) {
    ExactScalar coeff = dim_u_lambda * as_scalar(lr_coefficient(lambda, mu, nu)) * as_scalar(dim_sym(nu)) /
                        as_scalar(dim_unitary(mu, d));
    table.entries.emplace(std::make_pair(mu, nu), coeff);
  }
  return table;
}

ExactScalar alpha(const YoungFrame& lambda_prime, const YoungFrame& mu, const YoungFrame& gamma, int d) {
  if (mu.n() + gamma.n() != lambda_prime.n()) throw std::invalid_argument("alpha: |mu| + |gamma| must equal |lambda'|");
  const auto c = lr_coefficient(lambda_prime, mu, gamma);
  if (c == 0) return 0;
  return as_scalar(c) * as_scalar(dim_sym(mu)) * as_scalar(dim_sym(gamma)) / as_scalar(dim_sym(lambda_prime)) *
         as_scalar(dim_unitary(lambda_prime, d));
}

SpectralTable twirl_spectrum(const YoungFrame& lambda, int k, int d, bool normalized) {
  const auto source = lambda.padded(d);
  const int n = source.n();
  const auto branching = partial_trace_decomposition(source, k);
  // Collapse over nu: tr_{[k]} P_lambda = sum_mu a_mu P_mu.
  std::map<YoungFrame, ExactScalar> by_mu;
  for (const auto& [key, value] : branching.entries) by_mu[key.first] += value;
  const ExactScalar mixed = ExactScalar(1) / power_of(ExactScalar(d), k);
  const auto gammas = enumerate_frames(d, k);

  SpectralTable table{n, d, {}};
  for (const auto& target : enumerate_frames(d, n)) {
    ExactScalar weight = 0;
    for (const auto& [mu, a_mu] : by_mu) {
      ExactScalar inner = 0;
      for (const auto& gamma : gammas) inner += alpha(target, mu, gamma, d);
      weight += a_mu * mixed * inner;
    }
    // alpha carries a 1/dim F_lambda' relative to the overlap tr{P_lambda' .}.
    weight *= as_scalar(dim_sym(target));
    table.entries.emplace_back(target, weight);
  }
  if (normalized) {
    const ExactScalar trace = as_scalar(dim_sym(source)) * as_scalar(dim_unitary(source, d));
    for (auto& entry : table.entries) entry.second /= trace;
  }
  return table;
}

SpectralTable channel_output_spectrum(const YoungFrame& lambda, const ExactScalar& q, int d) {
  if (q < 0 || q > 1) throw std::domain_error("depolarising weight must lie in [0,1]");
  const auto source = lambda.padded(d);
  const int n = source.n();
  SpectralTable out{n, d, {}};
  for (const auto& f : enumerate_frames(d, n)) out.entries.emplace_back(f, 0);
  for (int k = 0; k <= n; ++k) {
    const ExactScalar w = as_scalar(binomial(n, k)) * power_of(q, k) * power_of(1 - q, n - k);
    if (w == 0) continue;
    const auto layer = twirl_spectrum(source, k, d, true);
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i].second += w * layer.entries[i].second;
  }
  return out;
}

double theorem2_delta(int n) { return std::log2(static_cast<double>(n) + 1.0) / n; }

OverlapBound theorem2_bound(const YoungFrame& lambda, const YoungFrame& lambda_prime, double q, int n) {
  if (lambda.length() > 2 || lambda_prime.length() > 2) throw std::invalid_argument("theorem2_bound: frames must have at most two rows");
  if (lambda.n() != n || lambda_prime.n() != n) throw std::invalid_argument("theorem2_bound: frames must have n boxes");
  if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("depolarising weight must lie in [0,1]");
  const double gap = std::abs(lambda[0] - lambda_prime[0]) / static_cast<double>(n);
  if (gap < q) {
    throw VacuousBound("bound vacuous: |lambda_1 - lambda'_1|/n = " + std::to_string(gap) + " < q = " + std::to_string(q));
  }
  const double excess = gap - q;
  const double exponent = -n * ((2.0 / std::log(2.0)) * excess * excess - theorem2_delta(n));
  return {exponent, std::exp2(exponent)};
}

XYResult xy_optimize(const YoungFrame& lambda, const YoungFrame& lambda_prime, int l, int k, int d) {
  if (l < 0 || k < 0 || l + k != lambda.n() || lambda_prime.n() != lambda.n()) {
    throw std::invalid_argument("xy_optimize: l + k must equal |lambda| = |lambda'|");
  }
  const auto source = lambda.padded(d);
  const auto target = lambda_prime.padded(d);
  const auto tail = enumerate_frames(d, k);
  XYResult result;
  for (const auto& mu : enumerate_frames(d, l)) {
    std::vector<const YoungFrame*> nus;
    std::vector<const YoungFrame*> gammas;
    for (const auto& f : tail) {
      if (lr_coefficient(source, mu, f) != 0) nus.push_back(&f);
      if (lr_coefficient(target, mu, f) != 0) gammas.push_back(&f);
    }
    if (nus.empty() || gammas.empty()) continue;
    result.feasible += nus.size() * gammas.size();
    const auto dim_mu = dim_sym(mu);
    for (const auto* nu : nus) {
      for (const auto* gamma : gammas) {
        const auto value = dim_mu * dim_sym(*nu) * dim_sym(*gamma);
        if (!result.argmax || value > result.x) {
          result.x = value;
          result.argmax = FrameTriple{mu, *nu, *gamma};
        }
        if (!result.argmin || value < result.y) {
          result.y = value;
          result.argmin = FrameTriple{mu, *nu, *gamma};
        }
      }
    }
  }
  return result;
}

LemmaCheck lemma_bound_check(const YoungFrame& lambda_prime, int k) {
  const auto target = lambda_prime.padded(2);
  const int n = target.n();
  if (k < 0 || k > n) throw std::invalid_argument("lemma_bound_check: k outside [0, n]");
  const YoungFrame source({n}, 2);
  const auto x = xy_optimize(source, target, n - k, k, 2).x;
  if (target[1] > k) return {0.0, x, x == 0};
  const double bound = k == 0 ? 1.0 : std::exp2(k * binary_entropy(static_cast<double>(target[1]) / k));
  return {bound, x, static_cast<double>(x) <= bound};
}

}  // namespace depolar
