#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <vector>

#include "depolar/frames.hpp"

namespace depolar {

/// Raised when a computation would exceed a configured size limit.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A bijection on {0,...,n-1}. Site i is sent to image(i).
class Permutation {
 public:
  explicit Permutation(int n = 0);  // identity
  /// From 0-based images; throws std::invalid_argument if not a bijection.
  explicit Permutation(std::vector<int> images);
  /// From 1-based one-line notation, e.g. {2,3,1,5,4}.
  static Permutation from_one_line(const std::vector<int>& one_based);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const noexcept { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  /// Steps to the lexicographically next permutation; false after the last.
  bool advance() { return std::next_permutation(images_.begin(), images_.end()); }
  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Cycle lengths of a permutation as a frame with n boxes.
using CycleType = YoungFrame;

CycleType cycle_type(const Permutation& perm);

/// Number of permutations with the given cycle type: n! / z_c.
std::uint64_t class_size(const CycleType& c);

/// Default limit for n!-sized enumerations.
inline constexpr int kDefaultGroupCap = 10;

/// All n! permutations of S_n in lexicographic order of one-line notation.
/// Iteration is lazy; only the current permutation is held.
class SymmetricGroup {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.done_ == b.done_; }

   private:
    friend class SymmetricGroup;
    explicit iterator(int n) : current_(n), done_(false) {}
    Permutation current_;
    bool done_ = true;
  };

  /// Throws CapExceeded when n > cap.
  explicit SymmetricGroup(int n, int cap = kDefaultGroupCap);
  int degree() const noexcept { return n_; }
  std::uint64_t order() const { return factorial(n_); }
  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

inline SymmetricGroup enumerate_group(int n, int cap = kDefaultGroupCap) { return SymmetricGroup(n, cap); }

/// Irreducible character chi_lambda on a conjugacy class, by the
/// Murnaghan-Nakayama rule. Memoized on (lambda, class); the memo table is
/// guarded by a mutex, so concurrent callers are safe.
std::int64_t character(const YoungFrame& lambda, const CycleType& c);

/// Cycle types of S_n (all partitions of n), decreasing lexicographic.
std::vector<CycleType> conjugacy_classes(int n);

}  // namespace depolar
