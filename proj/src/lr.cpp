#include "depolar/lr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace depolar {

SkewShape::SkewShape(const YoungFrame& outer_frame, const YoungFrame& inner_frame) {
  const int d = std::max(outer_frame.d(), inner_frame.d());
  outer = outer_frame.padded(std::max(d, outer_frame.length()));
  inner = inner_frame.padded(outer.d());
  if (!inner.fits_in(outer)) throw std::invalid_argument("skew shape: inner frame does not fit in outer");
}

std::vector<int> LRTableau::content() const {
  std::vector<int> counts;
  for (const auto& row : filling) {
    for (int v : row) {
      if (v > static_cast<int>(counts.size())) counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  }
  return counts;
}

bool LRTableau::is_valid() const {
  const int rows = skew.outer.d();
  if (static_cast<int>(filling.size()) != rows) return false;
  auto entry = [&](int i, int j) -> int {  // 0 for cells of the inner shape
    return j < skew.inner[i] ? 0 : filling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - skew.inner[i])];
  };
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(filling[static_cast<std::size_t>(i)].size()) != skew.outer[i] - skew.inner[i]) return false;
    for (int j = skew.inner[i]; j < skew.outer[i]; ++j) {
      const int v = entry(i, j);
      if (v < 1) return false;
      if (j > skew.inner[i] && entry(i, j - 1) > v) return false;
      if (i > 0 && j < skew.outer[i - 1] && j >= skew.inner[i - 1] && entry(i - 1, j) >= v) return false;
    }
  }
  // Reading word: right to left, top to bottom.
  std::vector<int> counts;
  for (const auto& row : filling) {
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const auto v = static_cast<std::size_t>(*it);
      if (v > counts.size()) counts.resize(v, 0);
      ++counts[v - 1];
      if (v > 1 && counts[v - 1] > counts[v - 2]) return false;
    }
  }
  return std::is_sorted(counts.rbegin(), counts.rend());
}

namespace {

// Backtracking over skew cells in row-major order, each row filled right to
// left so that the filling order is the reading word.
class LREnumerator {
 public:
  LREnumerator(const YoungFrame& lambda, const YoungFrame& mu, const YoungFrame& nu, bool keep)
      : keep_(keep) {
    rows_ = std::max({lambda.length(), mu.length(), 1});
    outer_.resize(static_cast<std::size_t>(rows_));
    inner_.resize(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      outer_[static_cast<std::size_t>(i)] = lambda[i];
      inner_[static_cast<std::size_t>(i)] = mu[i];
    }
    content_ = nu.trimmed();
    grid_.assign(static_cast<std::size_t>(rows_), std::vector<int>(static_cast<std::size_t>(lambda[0]), 0));
    used_.assign(content_.size(), 0);
    lambda_ = lambda;
    mu_ = mu;
  }

  std::uint64_t run() {
    count_ = 0;
    place(0, outer_[0] - 1);
    return count_;
  }

  std::vector<LRTableau>& tableaux() { return found_; }

 private:
  void place(int row, int col) {
    // Advance to the next skew cell.
    while (row < rows_ && col < inner_[static_cast<std::size_t>(row)]) {
      ++row;
      if (row < rows_) col = outer_[static_cast<std::size_t>(row)] - 1;
    }
    if (row == rows_) {
      ++count_;
      if (keep_) record();
      return;
    }
    const auto r = static_cast<std::size_t>(row);
    const auto c = static_cast<std::size_t>(col);
    // Row weakly increases left to right: value <= right neighbour.
    int upper = static_cast<int>(content_.size());
    if (col + 1 < outer_[r]) upper = std::min(upper, grid_[r][c + 1]);
    // Column strictly increases downward: value > cell above (0 if inner).
    int lower = 1;
    if (row > 0) lower = grid_[r - 1][c] + 1;
    // An entry in row i of an LR tableau is at most i+1.
    upper = std::min(upper, row + 1);
    for (int v = lower; v <= upper; ++v) {
      const auto vi = static_cast<std::size_t>(v - 1);
      if (used_[vi] >= content_[vi]) continue;
      if (v > 1 && used_[vi] + 1 > used_[vi - 1]) continue;
      ++used_[vi];
      grid_[r][c] = v;
      place(row, col - 1);
      grid_[r][c] = 0;
      --used_[vi];
    }
  }

  void record() {
    LRTableau t{SkewShape(lambda_, mu_), {}};
    for (int i = 0; i < t.skew.outer.d(); ++i) {
      std::vector<int> row;
      if (i < rows_) {
        for (int j = inner_[static_cast<std::size_t>(i)]; j < outer_[static_cast<std::size_t>(i)]; ++j) {
          row.push_back(grid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
      }
      t.filling.push_back(std::move(row));
    }
    found_.push_back(std::move(t));
  }

  bool keep_;
  int rows_ = 0;
  std::vector<int> outer_, inner_, content_, used_;
  std::vector<std::vector<int>> grid_;
  YoungFrame lambda_, mu_;
  std::uint64_t count_ = 0;
  std::vector<LRTableau> found_;
};

bool admissible(const YoungFrame& lambda, const YoungFrame& mu, const YoungFrame& nu) {
  if (lambda.n() != mu.n() + nu.n()) return false;
  for (int i = 0; i < std::max(lambda.d(), mu.d()); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  for (int i = 0; i < std::max(lambda.d(), nu.d()); ++i) {
    if (nu[i] > lambda[i]) return false;
  }
  return true;
}

using LRKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
std::mutex lr_mutex;
std::map<LRKey, std::uint64_t>& lr_cache() {
  static std::map<LRKey, std::uint64_t> cache;
  return cache;
}

}  // namespace

std::uint64_t lr_coefficient(const YoungFrame& lambda, const YoungFrame& mu, const YoungFrame& nu) {
  if (!admissible(lambda, mu, nu)) return 0;
  LRKey key{lambda.trimmed(), mu.trimmed(), nu.trimmed()};
  {
    std::lock_guard lock(lr_mutex);
    auto it = lr_cache().find(key);
    if (it != lr_cache().end()) return it->second;
  }
  LREnumerator enumerator(lambda, mu, nu, false);
  const auto value = enumerator.run();
  std::lock_guard lock(lr_mutex);
  lr_cache().emplace(std::move(key), value);
  return value;
}

std::vector<LRTableau> lr_tableaux(const YoungFrame& lambda, const YoungFrame& mu, const YoungFrame& nu) {
  if (!admissible(lambda, mu, nu)) return {};
  LREnumerator enumerator(lambda, mu, nu, true);
  enumerator.run();
  return std::move(enumerator.tableaux());
}

std::uint64_t lr_via_characters(const YoungFrame& lambda, const YoungFrame& mu, const YoungFrame& nu, int cap) {
  if (lambda.n() > cap) {
    throw CapExceeded("lr_via_characters: n=" + std::to_string(lambda.n()) + " exceeds cap " + std::to_string(cap));
  }
  if (lambda.n() != mu.n() + nu.n()) return 0;
  const int l = mu.n();
  const int k = nu.n();
  // sum over classes: |C_s| |C_t| chi_mu(s) chi_nu(t) chi_lambda(s u t), then / (l! k!)
  __int128 total = 0;
  for (const auto& s : conjugacy_classes(l)) {
    const auto chi_mu = character(mu, s);
    if (chi_mu == 0) continue;
    for (const auto& t : conjugacy_classes(k)) {
      const auto chi_nu = character(nu, t);
      if (chi_nu == 0) continue;
      auto joined = s.trimmed();
      const auto tail = t.trimmed();
      joined.insert(joined.end(), tail.begin(), tail.end());
      std::sort(joined.rbegin(), joined.rend());
      const auto chi_lambda = character(lambda, YoungFrame::from_rows(std::move(joined)));
      total += static_cast<__int128>(class_size(s)) * static_cast<__int128>(class_size(t)) * chi_mu * chi_nu *
               chi_lambda;
    }
  }
  const auto order = static_cast<__int128>(factorial(l)) * static_cast<__int128>(factorial(k));
  if (total < 0 || total % order != 0) {
    throw std::logic_error("lr_via_characters: character inner product is not a non-negative integer");
  }
  return static_cast<std::uint64_t>(total / order);
}

std::vector<std::pair<YoungFrame, YoungFrame>> lr_nonzero_pairs(const YoungFrame& lambda, int l, int k) {
  if (l < 0 || k < 0 || l + k != lambda.n()) throw std::invalid_argument("lr_nonzero_pairs: l + k must equal |lambda|");
  std::vector<std::pair<YoungFrame, YoungFrame>> out;
  const int d = lambda.d();
  const auto nus = enumerate_frames(d, k);
  for (const auto& mu : enumerate_frames(d, l)) {
    for (const auto& nu : nus) {
      if (lr_coefficient(lambda, mu, nu) != 0) out.emplace_back(mu, nu);
    }
  }
  return out;
}

}  // namespace depolar
