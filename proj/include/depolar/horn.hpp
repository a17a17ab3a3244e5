#pragma once

#include "depolar/frames.hpp"

namespace depolar {

/// Spectra of C = A + B, read as frames padded to a common d.
struct HornTriple {
  YoungFrame lambda;  // spectrum of the sum
  YoungFrame mu;
  YoungFrame nu;

  HornTriple(const YoungFrame& sum, const YoungFrame& first, const YoungFrame& second);
  int d() const noexcept { return lambda.d(); }
};

/// Trace condition plus lambda_{i+j-1} <= mu_i + nu_j for all i + j - 1 <= d.
bool basic_horn_holds(const HornTriple& t);

/// Exact feasibility for integer spectra: c^lambda_{mu nu} > 0.
bool horn_feasible(const HornTriple& t);

/// Predicate lambda' -> max_m |lambda_m - lambda'_m| <= (d-1) k. Outside the
/// window the traced-out overlap is forced to vanish.
class SupportWindow {
 public:
  SupportWindow(const YoungFrame& lambda, int d, int k);
  bool operator()(const YoungFrame& lambda_prime) const;
  int width() const noexcept { return (d_ - 1) * k_; }

 private:
  YoungFrame lambda_;
  int d_;
  int k_;
};

inline SupportWindow support_window(const YoungFrame& lambda, int d, int k) { return SupportWindow(lambda, d, k); }

/// True iff no (mu in YF_{d,l}, nu, gamma in YF_{d,k}) has
/// c^lambda_{mu nu} * c^lambda'_{mu gamma} != 0.
bool theorem1_chain_check(const YoungFrame& lambda, const YoungFrame& lambda_prime, int l, int k, int d);

}  // namespace depolar
