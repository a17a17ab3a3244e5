#include "depolar/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace depolar {

namespace {

std::size_t checked_power(int d, int n, const OracleLimits& limits) {
  if (d < 1 || d > kMaxLocalDimension) {
    throw std::invalid_argument("local dimension d=" + std::to_string(d) + " outside [1," +
                                std::to_string(kMaxLocalDimension) + "]");
  }
  if (n < 0) throw std::invalid_argument("negative site count");
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(d);
    if (dim > limits.max_dimension) {
      throw CapExceeded("operator dimension " + std::to_string(d) + "^" + std::to_string(n) +
                        " exceeds the cap " + std::to_string(limits.max_dimension));
    }
  }
  return dim;
}

std::size_t power(int d, int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= static_cast<std::size_t>(d);
  return p;
}

// Large enough for every operator that passed checked_power once.
const OracleLimits kUnbounded{static_cast<std::size_t>(-1), kMaxBoxes};

// Place values of each site: site 0 is the most significant letter.
std::vector<std::size_t> place_values(int d, int n) {
  std::vector<std::size_t> pw(static_cast<std::size_t>(n));
  std::size_t p = 1;
  for (int i = n - 1; i >= 0; --i) {
    pw[static_cast<std::size_t>(i)] = p;
    p *= static_cast<std::size_t>(d);
  }
  return pw;
}

// Offsets of all words supported on `positions`, enumerated lexicographically.
std::vector<std::size_t> offsets_on(const std::vector<int>& positions, int d, int n) {
  const auto pw = place_values(d, n);
  std::vector<std::size_t> out{0};
  for (int pos : positions) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * static_cast<std::size_t>(d));
    for (std::size_t base : out) {
      for (int letter = 0; letter < d; ++letter) {
        next.push_back(base + static_cast<std::size_t>(letter) * pw[static_cast<std::size_t>(pos)]);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<int> complement(const std::vector<int>& positions, int n) {
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  for (int p : positions) {
    if (p < 0 || p >= n || taken[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("site set must hold distinct indices in [0, n)");
    }
    taken[static_cast<std::size_t>(p)] = true;
  }
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (!taken[static_cast<std::size_t>(i)]) rest.push_back(i);
  }
  return rest;
}

}  // namespace

std::size_t word_index(const std::vector<int>& letters, int d) {
  std::size_t idx = 0;
  for (int letter : letters) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(letter);
  return idx;
}

std::vector<int> word_letters(std::size_t index, int d, int n) {
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    letters[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
  return letters;
}

// ---------------------------------------------------------------------------
// TensorOperator

TensorOperator::TensorOperator(int d, int n, const OracleLimits& limits)
    : d_(d), n_(n), dim_(checked_power(d, n, limits)), num_(dim_ * dim_) {}

TensorOperator TensorOperator::identity(int d, int n, const OracleLimits& limits) {
  TensorOperator op(d, n, limits);
  for (std::size_t i = 0; i < op.dim_; ++i) op.num_[i * op.dim_ + i] = 1;
  return op;
}

TensorOperator TensorOperator::from_integers(int d, int n, std::vector<mpz_class> numerators,
                                             mpz_class denominator, const OracleLimits& limits) {
  TensorOperator op(d, n, limits);
  if (numerators.size() != op.num_.size()) throw std::invalid_argument("numerator count does not match d^n x d^n");
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  op.num_ = std::move(numerators);
  op.den_ = std::move(denominator);
  op.normalize();
  return op;
}

TensorOperator TensorOperator::from_scalars(int d, int n, const std::vector<ExactScalar>& entries,
                                            const OracleLimits& limits) {
  TensorOperator op(d, n, limits);
  if (entries.size() != op.num_.size()) throw std::invalid_argument("entry count does not match d^n x d^n");
  mpz_class common = 1;
  for (const auto& e : entries) {
    if (e != 0) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), e.get_den_mpz_t());
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] != 0) op.num_[i] = entries[i].get_num() * (common / entries[i].get_den());
  }
  op.den_ = common;
  op.normalize();
  return op;
}

void TensorOperator::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  mpz_class g = den_;
  bool any = false;
  for (const auto& v : num_) {
    if (v == 0) continue;
    any = true;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (!any) {
    den_ = 1;
    return;
  }
  if (g == 1) return;
  den_ /= g;
  for (auto& v : num_) {
    if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

void TensorOperator::check_shape(const TensorOperator& other) const {
  if (d_ != other.d_ || n_ != other.n_) throw std::invalid_argument("operators act on different spaces");
}

ExactScalar TensorOperator::at(std::size_t row, std::size_t col) const {
  ExactScalar v(num_.at(row * dim_ + col), den_);
  v.canonicalize();
  return v;
}

ExactScalar TensorOperator::trace() const {
  mpz_class total = 0;
  for (std::size_t i = 0; i < dim_; ++i) total += num_[i * dim_ + i];
  ExactScalar v(total, den_);
  v.canonicalize();
  return v;
}

bool TensorOperator::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& v) { return v == 0; });
}

bool TensorOperator::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (num_[i * dim_ + j] != num_[j * dim_ + i]) return false;
    }
  }
  return true;
}

std::size_t TensorOperator::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(num_.begin(), num_.end(), [](const mpz_class& v) { return v != 0; }));
}

TensorOperator TensorOperator::operator+(const TensorOperator& other) const {
  check_shape(other);
  mpz_class common;
  mpz_lcm(common.get_mpz_t(), den_.get_mpz_t(), other.den_.get_mpz_t());
  const mpz_class fa = common / den_;
  const mpz_class fb = common / other.den_;
  TensorOperator out(d_, n_, kUnbounded);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] != 0) out.num_[i] = num_[i] * fa;
    if (other.num_[i] != 0) out.num_[i] += other.num_[i] * fb;
  }
  out.den_ = common;
  out.normalize();
  return out;
}

TensorOperator TensorOperator::operator-(const TensorOperator& other) const { return *this + other.scaled(-1); }

TensorOperator TensorOperator::operator*(const TensorOperator& other) const {
  check_shape(other);
  // Row-wise nonzero lists of the right factor; operators here are sparse.
  std::vector<std::vector<std::size_t>> rows(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (other.num_[k * dim_ + j] != 0) rows[k].push_back(j);
    }
  }
  TensorOperator out(d_, n_, kUnbounded);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto& a = num_[i * dim_ + k];
      if (a == 0) continue;
      for (std::size_t j : rows[k]) out.num_[i * dim_ + j] += a * other.num_[k * dim_ + j];
    }
  }
  out.den_ = den_ * other.den_;
  out.normalize();
  return out;
}

TensorOperator TensorOperator::scaled(const ExactScalar& factor) const {
  TensorOperator out = *this;
  for (auto& v : out.num_) {
    if (v != 0) v *= factor.get_num();
  }
  out.den_ *= factor.get_den();
  out.normalize();
  return out;
}

bool operator==(const TensorOperator& a, const TensorOperator& b) {
  return a.d_ == b.d_ && a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
}

// ---------------------------------------------------------------------------
// Permutation operators and isotypical projectors

TensorOperator perm_operator(const Permutation& tau, int d, const OracleLimits& limits) {
  const int n = tau.size();
  TensorOperator::identity(d, n, limits);  // cap check
  const auto pw = place_values(d, n);
  const std::size_t dim = power(d, n);
  std::vector<mpz_class> num(dim * dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const auto letters = word_letters(x, d, n);
    std::size_t y = 0;
    for (int i = 0; i < n; ++i) {
      y += static_cast<std::size_t>(letters[static_cast<std::size_t>(i)]) * pw[static_cast<std::size_t>(tau(i))];
    }
    num[y * dim + x] = 1;
  }
  return TensorOperator::from_integers(d, n, std::move(num), 1, limits);
}

namespace {

// Packs cycle-length multiplicities; unique per cycle type for n <= 15.
std::uint64_t cycle_key(std::span<const int> counts, int n) {
  std::uint64_t key = 0;
  for (int len = n; len >= 1; --len) key = key * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(counts[static_cast<std::size_t>(len)]);
  return key;
}

void sorted_words(int d, int n, int min_letter, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  for (int a = min_letter; a < d; ++a) {
    prefix.push_back(a);
    sorted_words(d, n, a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TensorOperator isotypical_projector(const YoungFrame& lambda, int d, const OracleLimits& limits) {
  const int n = lambda.n();
  TensorOperator zero(d, n, limits);
  if (lambda.length() > d) return zero;
  if (n > limits.max_group_degree) {
    throw CapExceeded("isotypical projector needs S_" + std::to_string(n) + "; the group-degree cap is " +
                      std::to_string(limits.max_group_degree));
  }
  if (n > 15) throw CapExceeded("isotypical projector supports n <= 15");
  const std::size_t dim = zero.dim();
  const auto pw = place_values(d, n);

  std::unordered_map<std::uint64_t, std::int64_t> chi;
  for (const auto& c : conjugacy_classes(n)) {
    std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
    for (int part : c.trimmed()) ++counts[static_cast<std::size_t>(part)];
    chi[cycle_key(counts, n)] = character(lambda, c);
  }

  // One column per content class: R_r[y] = sum_tau chi(tau) [tau r = y].
  std::vector<std::vector<int>> reps;
  std::vector<int> prefix;
  sorted_words(d, n, 0, prefix, reps);
  std::unordered_map<std::size_t, std::size_t> rep_of_index;
  for (std::size_t r = 0; r < reps.size(); ++r) rep_of_index[word_index(reps[r], d)] = r;
  std::vector<std::vector<std::int64_t>> columns(reps.size(), std::vector<std::int64_t>(dim, 0));

  std::vector<int> counts(static_cast<std::size_t>(n) + 1);
  std::vector<bool> seen(static_cast<std::size_t>(n));
  for (const auto& tau : SymmetricGroup(n, limits.max_group_degree)) {
    std::fill(counts.begin(), counts.end(), 0);
    std::fill(seen.begin(), seen.end(), false);
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      int len = 0;
      for (int i = s; !seen[static_cast<std::size_t>(i)]; i = tau(i)) {
        seen[static_cast<std::size_t>(i)] = true;
        ++len;
      }
      ++counts[static_cast<std::size_t>(len)];
    }
    const auto value = chi.at(cycle_key(counts, n));
    if (value == 0) continue;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      std::size_t y = 0;
      for (int i = 0; i < n; ++i) {
        y += static_cast<std::size_t>(reps[r][static_cast<std::size_t>(i)]) * pw[static_cast<std::size_t>(tau(i))];
      }
      columns[r][y] += value;
    }
  }

  // Column x = R_r composed with sigma^{-1}, where sigma r = x.
  const auto dim_f = static_cast<std::int64_t>(dim_sym(lambda));
  std::vector<mpz_class> num(dim * dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const auto letters = word_letters(x, d, n);
    auto sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t r = rep_of_index.at(word_index(sorted, d));
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::vector<int> next_slot(static_cast<std::size_t>(d), 0);
    for (int a = 0, start = 0; a < d; ++a) {
      next_slot[static_cast<std::size_t>(a)] = start;
      start += static_cast<int>(std::count(sorted.begin(), sorted.end(), a));
    }
    for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(next_slot[static_cast<std::size_t>(letters[static_cast<std::size_t>(i)])]++)] = i;
    for (std::size_t z = 0; z < dim; ++z) {
      const auto value = columns[r][z];
      if (value == 0) continue;
      const auto zl = word_letters(z, d, n);
      std::size_t y = 0;
      for (int j = 0; j < n; ++j) y += static_cast<std::size_t>(zl[static_cast<std::size_t>(j)]) * pw[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])];
      num[y * dim + x] = value * dim_f;
    }
  }
  return TensorOperator::from_integers(d, n, std::move(num), mpz_class(std::to_string(factorial(n))), limits);
}

// ---------------------------------------------------------------------------
// Partial traces and tensor products

TensorOperator partial_trace(const TensorOperator& a, const std::vector<int>& traced) {
  const int d = a.local_dim();
  const int n = a.sites();
  const auto kept = complement(traced, n);
  const auto off_kept = offsets_on(kept, d, n);
  const auto off_traced = offsets_on(traced, d, n);
  const std::size_t full = a.dim();
  const std::size_t small = off_kept.size();
  std::vector<mpz_class> num(small * small);
  for (std::size_t rx = 0; rx < small; ++rx) {
    for (std::size_t ry = 0; ry < small; ++ry) {
      auto& acc = num[rx * small + ry];
      for (std::size_t z : off_traced) {
        const auto& v = a.numerators()[(off_kept[rx] + z) * full + off_kept[ry] + z];
        if (v != 0) acc += v;
      }
    }
  }
  return TensorOperator::from_integers(d, static_cast<int>(kept.size()), std::move(num), a.denominator(), kUnbounded);
}

namespace {

TensorOperator append_identity_sites(const TensorOperator& a, int k, const mpz_class& denominator,
                                     const OracleLimits& limits) {
  const int d = a.local_dim();
  TensorOperator shape(d, a.sites() + k, limits);
  const std::size_t block = power(d, k);
  const std::size_t small = a.dim();
  const std::size_t big = small * block;
  std::vector<mpz_class> num(big * big);
  for (std::size_t x = 0; x < small; ++x) {
    for (std::size_t y = 0; y < small; ++y) {
      const auto& v = a.numerators()[x * small + y];
      if (v == 0) continue;
      for (std::size_t u = 0; u < block; ++u) num[(x * block + u) * big + y * block + u] = v;
    }
  }
  return TensorOperator::from_integers(d, a.sites() + k, std::move(num), denominator, limits);
}

}  // namespace

TensorOperator tensor_with_maximally_mixed(const TensorOperator& a, int k) {
  if (k < 0) throw std::invalid_argument("negative site count");
  return append_identity_sites(a, k, a.denominator() * static_cast<unsigned long>(power(a.local_dim(), k)), {});
}

TensorOperator tensor_with_identity(const TensorOperator& a, int k) {
  if (k < 0) throw std::invalid_argument("negative site count");
  return append_identity_sites(a, k, a.denominator(), {});
}

TensorOperator kron(const TensorOperator& a, const TensorOperator& b) {
  if (a.local_dim() != b.local_dim()) throw std::invalid_argument("kron: local dimensions differ");
  const int d = a.local_dim();
  TensorOperator shape(d, a.sites() + b.sites());
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t big = na * nb;
  std::vector<mpz_class> num(big * big);
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < na; ++y) {
      const auto& va = a.numerators()[x * na + y];
      if (va == 0) continue;
      for (std::size_t u = 0; u < nb; ++u) {
        for (std::size_t v = 0; v < nb; ++v) {
          const auto& vb = b.numerators()[u * nb + v];
          if (vb != 0) num[(x * nb + u) * big + y * nb + v] = va * vb;
        }
      }
    }
  }
  return TensorOperator::from_integers(d, a.sites() + b.sites(), std::move(num), a.denominator() * b.denominator());
}

// ---------------------------------------------------------------------------
// Twirl

TensorOperator twirl(const TensorOperator& a) {
  const int d = a.local_dim();
  const int n = a.sites();
  const std::size_t dim = a.dim();
  std::vector<std::vector<int>> letters(dim);
  for (std::size_t x = 0; x < dim; ++x) letters[x] = word_letters(x, d, n);
  // Orbit of (x, y) = multiset of letter pairs (x_i, y_i).
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(d * d));
  std::uint64_t w = 1;
  for (auto& entry : weight) {
    entry = w;
    w *= static_cast<std::uint64_t>(n + 1);
  }
  std::unordered_map<std::uint64_t, std::uint32_t> orbit_of_key;
  std::vector<std::uint32_t> orbit(dim * dim);
  std::vector<mpz_class> sums;
  std::vector<std::uint64_t> sizes;
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      std::uint64_t key = 0;
      for (int i = 0; i < n; ++i) {
        key += weight[static_cast<std::size_t>(letters[x][static_cast<std::size_t>(i)] * d + letters[y][static_cast<std::size_t>(i)])];
      }
      auto [it, inserted] = orbit_of_key.try_emplace(key, static_cast<std::uint32_t>(sums.size()));
      if (inserted) {
        sums.emplace_back(0);
        sizes.push_back(0);
      }
      orbit[x * dim + y] = it->second;
      ++sizes[it->second];
      const auto& v = a.numerators()[x * dim + y];
      if (v != 0) sums[it->second] += v;
    }
  }
  // Average per orbit, brought to a common denominator.
  std::vector<ExactScalar> mean(sums.size());
  mpz_class common = 1;
  for (std::size_t o = 0; o < sums.size(); ++o) {
    mean[o] = ExactScalar(sums[o], a.denominator() * static_cast<unsigned long>(sizes[o]));
    mean[o].canonicalize();
    if (mean[o] != 0) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), mean[o].get_den_mpz_t());
  }
  std::vector<mpz_class> per_orbit(sums.size());
  for (std::size_t o = 0; o < sums.size(); ++o) per_orbit[o] = mean[o].get_num() * (common / mean[o].get_den());
  std::vector<mpz_class> num(dim * dim);
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = per_orbit[orbit[i]];
  return TensorOperator::from_integers(d, n, std::move(num), common, kUnbounded);
}

TensorOperator twirl_by_group_sum(const TensorOperator& a, const OracleLimits& limits) {
  const int d = a.local_dim();
  const int n = a.sites();
  const std::size_t dim = a.dim();
  const auto pw = place_values(d, n);
  std::vector<std::vector<int>> letters(dim);
  for (std::size_t x = 0; x < dim; ++x) letters[x] = word_letters(x, d, n);
  std::vector<std::pair<std::size_t, std::size_t>> support;
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      if (a.numerators()[x * dim + y] != 0) support.emplace_back(x, y);
    }
  }
  std::vector<mpz_class> num(dim * dim);
  std::vector<std::size_t> image(dim);
  for (const auto& tau : SymmetricGroup(n, limits.max_group_degree)) {
    for (std::size_t x = 0; x < dim; ++x) {
      std::size_t y = 0;
      for (int i = 0; i < n; ++i) y += static_cast<std::size_t>(letters[x][static_cast<std::size_t>(i)]) * pw[static_cast<std::size_t>(tau(i))];
      image[x] = y;
    }
    for (const auto& [x, y] : support) num[image[x] * dim + image[y]] += a.numerators()[x * dim + y];
  }
  return TensorOperator::from_integers(d, n, std::move(num),
                                       a.denominator() * mpz_class(std::to_string(factorial(n))), kUnbounded);
}

// ---------------------------------------------------------------------------
// Depolarising channel

namespace {

// Adds tr_B{A} (x) 1_B (numerators only) into `num`.
void accumulate_trace_and_replace(const TensorOperator& a, const std::vector<int>& traced, std::vector<mpz_class>& num) {
  const int d = a.local_dim();
  const int n = a.sites();
  const std::size_t dim = a.dim();
  const auto kept = complement(traced, n);
  const auto off_kept = offsets_on(kept, d, n);
  const auto off_sub = offsets_on(traced, d, n);
  const std::size_t small = off_kept.size();
  mpz_class reduced;
  for (std::size_t rx = 0; rx < small; ++rx) {
    for (std::size_t ry = 0; ry < small; ++ry) {
      reduced = 0;
      for (std::size_t z : off_sub) {
        const auto& v = a.numerators()[(off_kept[rx] + z) * dim + off_kept[ry] + z];
        if (v != 0) reduced += v;
      }
      if (reduced == 0) continue;
      for (std::size_t z : off_sub) num[(off_kept[rx] + z) * dim + off_kept[ry] + z] += reduced;
    }
  }
}

}  // namespace

TensorOperator trace_and_replace(const TensorOperator& a, const std::vector<int>& traced, bool normalized) {
  std::vector<mpz_class> num(a.dim() * a.dim());
  accumulate_trace_and_replace(a, traced, num);
  mpz_class den = a.denominator();
  if (normalized) den *= static_cast<unsigned long>(power(a.local_dim(), static_cast<int>(traced.size())));
  return TensorOperator::from_integers(a.local_dim(), a.sites(), std::move(num), den, kUnbounded);
}

TensorOperator depolarising_layer(const TensorOperator& a, int s) {
  const int d = a.local_dim();
  const int n = a.sites();
  if (s < 0 || s > n) throw std::invalid_argument("depolarising_layer: subset size outside [0, n]");
  const std::size_t dim = a.dim();
  std::vector<mpz_class> num(dim * dim);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != s) continue;
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(i);
    }
    accumulate_trace_and_replace(a, subset, num);
  }
  return TensorOperator::from_integers(d, n, std::move(num),
                                       a.denominator() * static_cast<unsigned long>(power(d, s)), kUnbounded);
}

TensorOperator depolarise_n(const TensorOperator& a, const ExactScalar& q) {
  if (q < 0 || q > 1) throw std::domain_error("depolarising weight must lie in [0,1]");
  const int n = a.sites();
  TensorOperator out(a.local_dim(), n, kUnbounded);
  const ExactScalar keep = 1 - q;
  for (int s = 0; s <= n; ++s) {
    ExactScalar w = 1;
    for (int i = 0; i < s; ++i) w *= q;
    for (int i = s; i < n; ++i) w *= keep;
    if (w == 0) continue;
    out = out + depolarising_layer(a, s).scaled(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Overlaps, positivity, text dump

ExactScalar trace_product(const TensorOperator& p, const TensorOperator& a) {
  if (p.local_dim() != a.local_dim() || p.sites() != a.sites()) {
    throw std::invalid_argument("trace_product: operators act on different spaces");
  }
  const std::size_t dim = p.dim();
  mpz_class total = 0;
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      const auto& v = p.numerators()[x * dim + y];
      if (v == 0) continue;
      const auto& w = a.numerators()[y * dim + x];
      if (w != 0) total += v * w;
    }
  }
  ExactScalar out(total, p.denominator() * a.denominator());
  out.canonicalize();
  return out;
}

ExactScalar overlap(const YoungFrame& lambda_prime, const TensorOperator& a, const OracleLimits& limits) {
  if (lambda_prime.n() != a.sites()) throw std::invalid_argument("overlap: frame size differs from site count");
  return trace_product(isotypical_projector(lambda_prime, a.local_dim(), limits), a);
}

bool is_positive_semidefinite(const TensorOperator& a) {
  if (!a.is_symmetric()) return false;
  const std::size_t dim = a.dim();
  // Numerators only: scaling by the positive denominator preserves the sign pattern.
  std::vector<ExactScalar> m(dim * dim);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.numerators()[i];
  for (std::size_t i = 0; i < dim; ++i) {
    const ExactScalar pivot = m[i * dim + i];
    if (pivot < 0) return false;
    if (pivot == 0) {
      for (std::size_t j = i + 1; j < dim; ++j) {
        if (m[i * dim + j] != 0) return false;
      }
      continue;
    }
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (m[j * dim + i] == 0) continue;
      const ExactScalar f = m[j * dim + i] / pivot;
      for (std::size_t k = i + 1; k < dim; ++k) {
        if (m[i * dim + k] != 0) m[j * dim + k] -= f * m[i * dim + k];
      }
      m[j * dim + i] = 0;
    }
  }
  return true;
}

void write_sparse_triplets(std::ostream& out, const TensorOperator& a) {
  out << "# tensor-operator d=" << a.local_dim() << " n=" << a.sites() << '\n';
  const std::size_t dim = a.dim();
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      if (a.numerators()[x * dim + y] == 0) continue;
      const auto v = a.at(x, y);
      out << x << ' ' << y << ' ' << v.get_num().get_str() << '/' << v.get_den().get_str() << '\n';
    }
  }
}

TensorOperator read_sparse_triplets(std::istream& in, const OracleLimits& limits) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("operator dump: missing header");
  int d = 0;
  int n = 0;
  if (std::sscanf(line.c_str(), "# tensor-operator d=%d n=%d", &d, &n) != 2) {
    throw std::runtime_error("operator dump: malformed header '" + line + "'");
  }
  TensorOperator shape(d, n, limits);
  std::vector<ExactScalar> entries(shape.dim() * shape.dim());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::size_t row = 0;
    std::size_t col = 0;
    std::string value;
    if (!(fields >> row >> col >> value) || row >= shape.dim() || col >= shape.dim()) {
      throw std::runtime_error("operator dump: bad entry on line " + std::to_string(line_no));
    }
    ExactScalar v;
    if (v.set_str(value, 10) != 0 || v.get_den() == 0) {
      throw std::runtime_error("operator dump: bad rational on line " + std::to_string(line_no));
    }
    v.canonicalize();
    entries[row * shape.dim() + col] = v;
  }
  return TensorOperator::from_scalars(d, n, entries, limits);
}

}  // namespace depolar
