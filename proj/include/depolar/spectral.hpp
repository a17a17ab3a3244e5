#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "depolar/frames.hpp"
#include "depolar/oracle.hpp"

namespace depolar {

/// tr_{[k]} P_lambda = sum_{mu,nu} coeff(mu,nu) P_mu, where
/// coeff(mu,nu) = dim U_lambda c^lambda_{mu nu} dim F_nu / dim U_mu.
struct BranchingTable {
  YoungFrame source;
  int kept = 0;    // l, sites that remain
  int traced = 0;  // k, sites traced out
  std::map<std::pair<YoungFrame, YoungFrame>, ExactScalar> entries;

  /// Coefficient of P_mu after summing over nu.
  ExactScalar coefficient_of(const YoungFrame& mu) const;
};

/// Weights over YF_{d,n}, one entry per frame (zeros included), in
/// enumerate_frames order.
struct SpectralTable {
  int n = 0;
  int d = 1;
  std::vector<std::pair<YoungFrame, ExactScalar>> entries;

  const ExactScalar& operator[](const YoungFrame& frame) const;
  ExactScalar total() const;
  std::vector<YoungFrame> support() const;
};

BranchingTable partial_trace_decomposition(const YoungFrame& lambda, int k);

/// c^{lambda'}_{mu gamma} (dim F_mu dim F_gamma / dim F_lambda') dim U_lambda',
/// which equals tr{P_lambda' (P_mu (x) P_gamma)} / dim F_lambda'.
ExactScalar alpha(const YoungFrame& lambda_prime, const YoungFrame& mu, const YoungFrame& gamma, int d);

/// Weight of lambda' in S_n[tr_{[k]} P_lambda (x) pi_{[k]}], measured as
/// tr{P_lambda' . }. With `normalized`, the input is pi_lambda and the weights
/// sum to 1.
SpectralTable twirl_spectrum(const YoungFrame& lambda, int k, int d, bool normalized);

/// Pr[lambda'] = tr{P_lambda' N_q^{(x)n}(pi_lambda)}, q the weight on the
/// replacement map.
SpectralTable channel_output_spectrum(const YoungFrame& lambda, const ExactScalar& q, int d);

/// Delta(n) = log2(n+1)/n.
double theorem2_delta(int n);

struct OverlapBound {
  double log2_value;  // -n ((2/ln 2)(gap - q)^2 - Delta(n))
  double value;
};

/// Raised when |lambda_1 - lambda'_1| / n < q, where the bound says nothing.
class VacuousBound : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// 2^{-n((2/ln 2)(|lambda_1 - lambda'_1|/n - q)^2 - Delta(n))} for d = 2.
OverlapBound theorem2_bound(const YoungFrame& lambda, const YoungFrame& lambda_prime, double q, int n);

struct FrameTriple {
  YoungFrame mu;
  YoungFrame nu;
  YoungFrame gamma;
};

struct XYResult {
  std::uint64_t x = 0;  // max of dim F_nu dim F_mu dim F_gamma
  std::uint64_t y = 0;  // min of the same
  std::optional<FrameTriple> argmax;
  std::optional<FrameTriple> argmin;
  std::size_t feasible = 0;  // number of feasible triples
};

/// Exhaustive max/min over mu in YF_{d,l}, nu, gamma in YF_{d,k} with
/// c^lambda_{mu nu} c^lambda'_{mu gamma} != 0. Empty set gives X = Y = 0.
XYResult xy_optimize(const YoungFrame& lambda, const YoungFrame& lambda_prime, int l, int k, int d);

struct LemmaCheck {
  double bound;   // 2^{k h(lambda'_2/k)}, or 0 when lambda'_2 > k
  std::uint64_t x;
  bool holds;
};

/// Single-row input lambda = (n,0): X <= 2^{k h(lambda'_2/k)} for
/// lambda'_2 <= k, and X = 0 otherwise.
LemmaCheck lemma_bound_check(const YoungFrame& lambda_prime, int k);

}  // namespace depolar
