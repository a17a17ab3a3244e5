#include "depolar/permutations.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace depolar {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(std::max(n, 0))) {
  for (int i = 0; i < n; ++i) images_[static_cast<std::size_t>(i)] = i;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("images do not form a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
  std::vector<int> images;
  images.reserve(one_based.size());
  for (int v : one_based) images.push_back(v - 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(out));
}

CycleType cycle_type(const Permutation& perm) {
  const int n = perm.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> lengths;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = perm(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return YoungFrame::from_rows(std::move(lengths));
}

std::uint64_t class_size(const CycleType& c) {
  // z_c = prod_i i^{m_i} m_i!
  std::map<int, int> multiplicity;
  for (int part : c.trimmed()) ++multiplicity[part];
  std::uint64_t z = 1;
  for (auto [part, m] : multiplicity) {
    for (int j = 0; j < m; ++j) z *= static_cast<std::uint64_t>(part);
    z *= factorial(m);
  }
  return factorial(c.n()) / z;
}

SymmetricGroup::iterator& SymmetricGroup::iterator::operator++() {
  if (!current_.advance()) done_ = true;
  return *this;
}

SymmetricGroup::SymmetricGroup(int n, int cap) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative group degree");
  if (n > cap) {
    throw CapExceeded("S_" + std::to_string(n) + " exceeds the enumeration cap n <= " + std::to_string(cap));
  }
}

std::vector<CycleType> conjugacy_classes(int n) { return enumerate_frames(std::max(n, 1), n); }

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::mutex memo_mutex;
std::map<Key, std::int64_t>& memo() {
  static std::map<Key, std::int64_t> table;
  return table;
}

// Beta-set (first-column hook lengths) of a partition with `len` parts.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + len - 1 - i;
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

// `cycles` is weakly decreasing; the largest strip is removed first.
std::int64_t mn_rec(const std::vector<int>& parts, const std::vector<int>& cycles) {
  if (cycles.empty()) return parts.empty() ? 1 : 0;
  Key key{parts, cycles};
  {
    std::lock_guard lock(memo_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  const int r = cycles.front();
  const std::vector<int> rest(cycles.begin() + 1, cycles.end());
  const auto beta = beta_set(parts);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Height of the removed border strip = beads strictly between target and beta[i].
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++between;
    }
    auto next = beta;
    next[i] = target;
    const auto value = mn_rec(from_beta_set(std::move(next)), rest);
    total += (between % 2 == 0) ? value : -value;
  }
  std::lock_guard lock(memo_mutex);
  memo().emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t character(const YoungFrame& lambda, const CycleType& c) {
  if (lambda.n() != c.n()) {
    throw std::invalid_argument("character: frame has " + std::to_string(lambda.n()) +
                                " boxes but the class has " + std::to_string(c.n()));
  }
  return mn_rec(lambda.trimmed(), c.trimmed());
}

}  // namespace depolar
