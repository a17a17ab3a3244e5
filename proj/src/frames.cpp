#include "depolar/frames.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

namespace depolar {

YoungFrame::YoungFrame(std::vector<int> rows, int d) {
  if (d < 1 || d > kMaxRowBudget) {
    throw FrameError("row budget d=" + std::to_string(d) + " outside [1," +
                     std::to_string(kMaxRowBudget) + "]");
  }
  int nonzero = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0) throw FrameError("negative row length");
    if (i > 0 && rows[i] > rows[i - 1]) {
      throw FrameError("rows are not weakly decreasing");
    }
    if (rows[i] > 0) ++nonzero;
  }
  if (nonzero > d) {
    throw FrameError("frame has " + std::to_string(nonzero) +
                     " nonzero rows but the row budget is " + std::to_string(d));
  }
  boxes_ = std::accumulate(rows.begin(), rows.end(), 0);
  if (boxes_ > kMaxBoxes) {
    throw FrameError("frame has " + std::to_string(boxes_) +
                     " boxes; the cap is " + std::to_string(kMaxBoxes));
  }
  rows.resize(static_cast<std::size_t>(d), 0);
  rows_ = std::move(rows);
}

YoungFrame YoungFrame::from_rows(std::vector<int> rows) {
  auto nonzero = std::count_if(rows.begin(), rows.end(), [](int r) { return r > 0; });
  int d = std::max<int>(1, static_cast<int>(nonzero));
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return YoungFrame(std::move(rows), d);
}

namespace {

std::vector<int> parse_rows(std::string_view text) {
  std::vector<int> rows;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw FrameError("empty frame text", pos);
  while (true) {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw FrameError("expected a row length at position " + std::to_string(pos), pos);
    }
    if (value < 0) {
      throw FrameError("negative row length at position " + std::to_string(pos), pos);
    }
    if (!rows.empty() && value > rows.back()) {
      throw FrameError("row lengths must be weakly decreasing (position " +
                           std::to_string(pos) + ")",
                       pos);
    }
    rows.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw FrameError("unexpected character at position " + std::to_string(pos), pos);
    }
    ++pos;
  }
  return rows;
}

}  // namespace

YoungFrame YoungFrame::parse(std::string_view text, int d) { return YoungFrame(parse_rows(text), d); }

YoungFrame YoungFrame::parse(std::string_view text) { return from_rows(parse_rows(text)); }

int YoungFrame::length() const noexcept {
  return static_cast<int>(std::count_if(rows_.begin(), rows_.end(), [](int r) { return r > 0; }));
}

YoungFrame YoungFrame::padded(int d) const { return YoungFrame(trimmed(), d); }

std::vector<int> YoungFrame::trimmed() const {
  return {rows_.begin(), rows_.begin() + length()};
}

YoungFrame YoungFrame::conjugate() const {
  std::vector<int> cols(static_cast<std::size_t>(rows_.empty() ? 0 : rows_[0]), 0);
  for (int r : rows_) {
    for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return from_rows(std::move(cols));
}

bool YoungFrame::fits_in(const YoungFrame& outer) const noexcept {
  for (int i = 0; i < d(); ++i) {
    if ((*this)[i] > outer[i]) return false;
  }
  return true;
}

std::string YoungFrame::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out;
}

namespace {

void enumerate_rec(int d, int remaining, int max_part, std::vector<int>& prefix,
                   std::vector<YoungFrame>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix, d);
    return;
  }
  if (static_cast<int>(prefix.size()) == d) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_rec(d, remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<YoungFrame> enumerate_frames(int d, int n) {
  if (d < 1 || d > kMaxRowBudget) throw FrameError("row budget outside supported range");
  if (n < 0 || n > kMaxBoxes) throw FrameError("box count outside supported range");
  std::vector<YoungFrame> out;
  std::vector<int> prefix;
  enumerate_rec(d, n, n, prefix, out);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}

std::uint64_t dim_sym(const YoungFrame& frame) {
  const auto conj = frame.conjugate();
  std::uint64_t hooks = 1;
  for (int i = 0; i < frame.length(); ++i) {
    for (int j = 0; j < frame[i]; ++j) {
      hooks *= static_cast<std::uint64_t>(frame[i] - j + conj[j] - i - 1);
    }
  }
  return factorial(frame.n()) / hooks;
}

std::uint64_t dim_unitary(const YoungFrame& frame, int d) {
  if (d < 1) throw std::invalid_argument("dim_unitary: d must be positive");
  if (frame.length() > d) return 0;
  // Weyl: prod_{i<j} (l_i - l_j + j - i) / (j - i), kept reduced.
  unsigned __int128 num = 1;
  unsigned __int128 den = 1;
  auto gcd128 = [](unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      auto t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      num *= static_cast<unsigned>(frame[i] - frame[j] + j - i);
      den *= static_cast<unsigned>(j - i);
      const auto g = gcd128(num, den);
      num /= g;
      den /= g;
    }
  }
  return static_cast<std::uint64_t>(num / den);
}

ProbabilityPair::ProbabilityPair(double p0) : p0_(p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::domain_error("probability outside [0,1]");
}

double binary_entropy(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("binary_entropy: argument outside [0,1]");
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(t) + term(1.0 - t);
}

double rel_entropy(const ProbabilityPair& r, const ProbabilityPair& s) {
  double total = 0.0;
  for (int x = 0; x < 2; ++x) {
    if (r(x) == 0.0) continue;
    if (s(x) == 0.0) return std::numeric_limits<double>::infinity();
    total += r(x) * std::log2(r(x) / s(x));
  }
  return total;
}

double l1_distance(const ProbabilityPair& r, const ProbabilityPair& s) {
  return std::abs(r.p0() - s.p0()) + std::abs(r.p1() - s.p1());
}

double pinsker_lower_bound(const ProbabilityPair& r, const ProbabilityPair& s) {
  const double dist = l1_distance(r, s);
  return dist * dist / (2.0 * std::log(2.0));
}

double exp2_neg(double a, double divergence) {
  if (std::isinf(divergence) && a > 0.0) return 0.0;
  return std::exp2(-a * divergence);
}

double dimension_entropy_bound(const YoungFrame& two_row_frame) {
  if (two_row_frame.length() > 2) {
    throw std::invalid_argument("dimension_entropy_bound: frame has more than two rows");
  }
  const int k = two_row_frame.n();
  if (k == 0) return 1.0;
  return std::exp2(k * binary_entropy(static_cast<double>(two_row_frame[0]) / k));
}

}  // namespace depolar
