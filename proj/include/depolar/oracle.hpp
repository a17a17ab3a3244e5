#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

#include "depolar/frames.hpp"
#include "depolar/permutations.hpp"

namespace depolar {

/// Exact rational scalar, always in canonical reduced form.
using ExactScalar = mpq_class;

/// Size limits for the dense oracle.
struct OracleLimits {
  std::size_t max_dimension = 6561;  // d^n
  int max_group_degree = 8;          // n for n!-sized loops
};

/// Dense operator on (C^d)^{\otimes n}. The basis is words x in [d]^n in
/// lexicographic order, site 0 being the most significant letter.
///
/// Entries are held as integer numerators over one shared positive
/// denominator, reduced so that the gcd of all numerators and the
/// denominator is 1. Every operator has a unique representation, so
/// operator== is exact equality of rational matrices.
class TensorOperator {
 public:
  /// Zero operator. Throws CapExceeded if d^n exceeds the limit.
  TensorOperator(int d, int n, const OracleLimits& limits = {});

  static TensorOperator identity(int d, int n, const OracleLimits& limits = {});
  /// Row-major numerators over a common denominator.
  static TensorOperator from_integers(int d, int n, std::vector<mpz_class> numerators, mpz_class denominator,
                                      const OracleLimits& limits = {});
  static TensorOperator from_scalars(int d, int n, const std::vector<ExactScalar>& entries,
                                     const OracleLimits& limits = {});

  int local_dim() const noexcept { return d_; }
  int sites() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }

  ExactScalar at(std::size_t row, std::size_t col) const;
  const mpz_class& numerator(std::size_t row, std::size_t col) const { return num_[row * dim_ + col]; }
  const mpz_class& denominator() const noexcept { return den_; }
  const std::vector<mpz_class>& numerators() const noexcept { return num_; }

  ExactScalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  std::size_t nonzeros() const;

  TensorOperator operator+(const TensorOperator& other) const;
  TensorOperator operator-(const TensorOperator& other) const;
  TensorOperator operator*(const TensorOperator& other) const;
  TensorOperator scaled(const ExactScalar& factor) const;
  friend bool operator==(const TensorOperator& a, const TensorOperator& b);

 private:
  void check_shape(const TensorOperator& other) const;
  void normalize();

  int d_;
  int n_;
  std::size_t dim_;
  std::vector<mpz_class> num_;
  mpz_class den_{1};
};

/// Encodes letters (one per site) as a basis index.
std::size_t word_index(const std::vector<int>& letters, int d);
std::vector<int> word_letters(std::size_t index, int d, int n);

/// B(tau): sends |x> to the word whose letter at site tau(i) is x_i, so that
/// B(sigma) B(tau) = B(sigma tau).
TensorOperator perm_operator(const Permutation& tau, int d, const OracleLimits& limits = {});

/// P_lambda = (dim F_lambda / n!) sum_tau chi_lambda(tau) B(tau).
TensorOperator isotypical_projector(const YoungFrame& lambda, int d, const OracleLimits& limits = {});

/// tr_B A, leaving the remaining sites in increasing order. `traced` holds
/// 0-based site indices.
TensorOperator partial_trace(const TensorOperator& a, const std::vector<int>& traced);

/// tr_B{A} (x) pi_B with the replacement put back at the sites in B, so the
/// result acts on the same n sites. With `normalized == false` the identity
/// is put back instead of pi.
TensorOperator trace_and_replace(const TensorOperator& a, const std::vector<int>& traced, bool normalized = true);

/// A (x) pi^{(x)k}, the new sites appended after the existing ones.
TensorOperator tensor_with_maximally_mixed(const TensorOperator& a, int k);
/// A (x) 1^{(x)k}, the new sites appended after the existing ones.
TensorOperator tensor_with_identity(const TensorOperator& a, int k);
/// Kronecker product; b's sites follow a's.
TensorOperator kron(const TensorOperator& a, const TensorOperator& b);

/// S_n(A) = (1/n!) sum_tau B(tau) A B(tau)^{-1}. Evaluated as the average of
/// A over each orbit of index pairs (x, y) under simultaneous site
/// permutation, which equals the group average entry by entry.
TensorOperator twirl(const TensorOperator& a);
/// The same map by the literal n!-term sum; bounded by the group-degree cap.
TensorOperator twirl_by_group_sum(const TensorOperator& a, const OracleLimits& limits = {});

/// sum_{|S|=s} (tr_S A) (x) pi_S, with pi_S put back at the positions in S.
TensorOperator depolarising_layer(const TensorOperator& a, int s);

/// N_q^{(x)n}(A) with N_q = (1-q) Id + q T, T(a) = tr(a) pi. Throws
/// std::domain_error unless 0 <= q <= 1.
TensorOperator depolarise_n(const TensorOperator& a, const ExactScalar& q);

/// tr(P A) for an explicit operator P.
ExactScalar trace_product(const TensorOperator& p, const TensorOperator& a);
/// tr(P_{lambda'} A); builds the projector.
ExactScalar overlap(const YoungFrame& lambda_prime, const TensorOperator& a, const OracleLimits& limits = {});

/// Exact symmetric elimination. Non-symmetric input is not PSD.
bool is_positive_semidefinite(const TensorOperator& a);

/// Sparse text dump: header "# tensor-operator d=<d> n=<n>", then one
/// "row col numerator/denominator" line per nonzero entry, row-major.
void write_sparse_triplets(std::ostream& out, const TensorOperator& a);
TensorOperator read_sparse_triplets(std::istream& in, const OracleLimits& limits = {});

}  // namespace depolar
