#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace depolar {

/// Hard limits on frame sizes. The row budget is allowed up to the box cap so
/// that cycle types and full character tables of S_n are representable; the
/// local Hilbert dimension used by the operator code is capped separately.
inline constexpr int kMaxBoxes = 16;
inline constexpr int kMaxRowBudget = kMaxBoxes;
inline constexpr int kMaxLocalDimension = 4;

class FrameError : public std::invalid_argument {
 public:
  FrameError(const std::string& what, std::size_t position = 0)
      : std::invalid_argument(what), position_(position) {}
  /// Character offset into the parsed text where the problem was detected.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A Young frame with at most d rows and n boxes, stored zero-padded to
/// exactly d rows. Row indices are 0-based in this API.
class YoungFrame {
 public:
  /// The empty frame with a single (zero) row.
  YoungFrame() : rows_(1, 0) {}

  /// Validates and pads `rows` to length `d`. Throws FrameError if rows are
  /// not weakly decreasing, negative, exceed `d` nonzero entries, or exceed
  /// the box cap.
  YoungFrame(std::vector<int> rows, int d);

  /// Smallest row budget that holds `rows` (at least 1).
  static YoungFrame from_rows(std::vector<int> rows);

  /// Parses "4,2,1". Whitespace around entries is ignored.
  static YoungFrame parse(std::string_view text, int d);
  static YoungFrame parse(std::string_view text);

  int d() const noexcept { return static_cast<int>(rows_.size()); }
  int n() const noexcept { return boxes_; }
  /// Row length, 0 for any index at or beyond d.
  int operator[](int i) const noexcept {
    return (i >= 0 && i < d()) ? rows_[static_cast<std::size_t>(i)] : 0;
  }
  std::span<const int> rows() const noexcept { return rows_; }
  /// Number of nonzero rows.
  int length() const noexcept;

  /// Same frame with a different row budget. Throws if it does not fit.
  YoungFrame padded(int d) const;
  /// Nonzero rows only; used as a budget-independent key.
  std::vector<int> trimmed() const;
  /// Transposed frame with the minimal row budget.
  YoungFrame conjugate() const;

  /// True if this frame fits inside `outer` row by row.
  bool fits_in(const YoungFrame& outer) const noexcept;

  /// Canonical text form: all d rows joined by commas, e.g. "4,0".
  std::string to_string() const;

  friend bool operator==(const YoungFrame&, const YoungFrame&) = default;
  friend auto operator<=>(const YoungFrame& a, const YoungFrame& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<int> rows_;
  int boxes_ = 0;
};

/// YF_{d,n} in decreasing lexicographic order.
std::vector<YoungFrame> enumerate_frames(int d, int n);

/// Number of standard Young tableaux (hook-length formula).
std::uint64_t dim_sym(const YoungFrame& frame);

/// Number of semistandard tableaux with entries in [d] (Weyl dimension
/// formula). Zero when the frame has more than d nonzero rows.
std::uint64_t dim_unitary(const YoungFrame& frame, int d);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

// ---------------------------------------------------------------------------
// Scalar entropy helpers, base-2 logarithms throughout.

/// Distribution on {0,1}; p0 is the weight of outcome 0.
class ProbabilityPair {
 public:
  explicit ProbabilityPair(double p0);
  double p0() const noexcept { return p0_; }
  double p1() const noexcept { return 1.0 - p0_; }
  double operator()(int x) const noexcept { return x == 0 ? p0() : p1(); }

 private:
  double p0_;
};

/// h(t) = -t log t - (1-t) log(1-t); throws std::domain_error outside [0,1].
double binary_entropy(double t);

/// D(r||s) in bits, +infinity when s does not dominate r.
double rel_entropy(const ProbabilityPair& r, const ProbabilityPair& s);

/// Sum of absolute differences.
double l1_distance(const ProbabilityPair& r, const ProbabilityPair& s);

/// The Pinsker lower bound ||r-s||^2 / (2 ln 2) on rel_entropy(r, s).
double pinsker_lower_bound(const ProbabilityPair& r, const ProbabilityPair& s);

/// 2^{-a D}, honoring 2^{-a * inf} = 0 for a > 0.
double exp2_neg(double a, double divergence);

/// 2^{k h(gamma_1/k)} for a two-row frame with k boxes; 1 for the empty frame.
double dimension_entropy_bound(const YoungFrame& two_row_frame);

}  // namespace depolar
