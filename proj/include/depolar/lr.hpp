#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "depolar/frames.hpp"
#include "depolar/permutations.hpp"

namespace depolar {

/// Skew shape outer/inner, both padded to a common row budget.
struct SkewShape {
  YoungFrame outer;
  YoungFrame inner;

  /// Throws std::invalid_argument unless inner fits in outer.
  SkewShape(const YoungFrame& outer_frame, const YoungFrame& inner_frame);
};

/// A Littlewood-Richardson tableau: `filling[i]` holds the entries of row i
/// of the skew shape, left to right.
struct LRTableau {
  SkewShape skew;
  std::vector<std::vector<int>> filling;

  /// Checks row/column monotonicity, the lattice-word condition and that the
  /// content is a partition.
  bool is_valid() const;
  /// Multiplicity of each entry 1..max.
  std::vector<int> content() const;
};

/// c^lambda_{mu nu}: number of LR tableaux of shape lambda/mu with content nu.
/// Zero when the box counts do not add up or mu does not fit in lambda.
/// Results are cached (mutex-guarded).
std::uint64_t lr_coefficient(const YoungFrame& lambda, const YoungFrame& mu, const YoungFrame& nu);

/// The tableaux counted by lr_coefficient, in backtracking order.
std::vector<LRTableau> lr_tableaux(const YoungFrame& lambda, const YoungFrame& mu, const YoungFrame& nu);

/// Independent route: <Res chi_lambda, chi_mu x chi_nu> over S_l x S_k,
/// evaluated by summing over pairs of conjugacy classes. Throws CapExceeded
/// when |lambda| > cap.
std::uint64_t lr_via_characters(const YoungFrame& lambda, const YoungFrame& mu, const YoungFrame& nu,
                                int cap = kDefaultGroupCap);

/// All (mu in YF_{d,l}, nu in YF_{d,k}) with c^lambda_{mu nu} != 0, where d is
/// lambda's row budget. Order follows enumerate_frames on mu, then nu.
std::vector<std::pair<YoungFrame, YoungFrame>> lr_nonzero_pairs(const YoungFrame& lambda, int l, int k);

}  // namespace depolar
