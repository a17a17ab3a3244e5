#include <doctest.h>

#include <random>
#include <sstream>

#include "depolar/lr.hpp"
#include "depolar/oracle.hpp"

using namespace depolar;

namespace {

YoungFrame F(std::vector<int> rows, int d) { return YoungFrame(std::move(rows), d); }

TensorOperator random_operator(int d, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  const std::size_t dim = static_cast<std::size_t>(std::pow(d, n));
  std::vector<ExactScalar> entries(dim * dim);
  for (auto& e : entries) {
    e = ExactScalar(num(rng), den(rng));
    e.canonicalize();
  }
  return TensorOperator::from_scalars(d, n, entries);
}

TensorOperator basis_projector(int d, const std::vector<int>& letters) {
  TensorOperator a(d, static_cast<int>(letters.size()));
  std::vector<ExactScalar> e(a.dim() * a.dim());
  const auto i = word_index(letters, d);
  e[i * a.dim() + i] = 1;
  return TensorOperator::from_scalars(d, static_cast<int>(letters.size()), e);
}

}  // namespace

TEST_CASE("operator arithmetic") {
  const auto id = TensorOperator::identity(2, 2);
  CHECK(id.trace() == 4);
  CHECK((id - id).is_zero());
  CHECK((id + id) == id.scaled(2));
  CHECK(id * id == id);
  CHECK(id.nonzeros() == 4);
  const auto a = random_operator(2, 2, 3);
  CHECK(a * id == a);
  CHECK(TensorOperator::from_integers(2, 1, {2, 0, 0, 4}, 4) ==
        TensorOperator::from_scalars(2, 1, {ExactScalar(1, 2), 0, 0, 1}));
  CHECK(TensorOperator::from_integers(2, 1, {2, 0, 0, 4}, 4).denominator() == 2);
  CHECK_THROWS(id + TensorOperator::identity(2, 1));
  CHECK_THROWS_AS(TensorOperator(3, 9), CapExceeded);
  CHECK(word_letters(word_index({1, 0, 2}, 3), 3, 3) == std::vector<int>{1, 0, 2});
  CHECK(word_index({1, 0}, 2) == 2);
}

TEST_CASE("permutation operators") {
  CHECK(perm_operator(Permutation(3), 2) == TensorOperator::identity(2, 3));
  const auto swap = perm_operator(Permutation::from_one_line({2, 1}), 2);
  const std::vector<ExactScalar> expected{1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
  CHECK(swap == TensorOperator::from_scalars(2, 2, expected));
  const auto cyc = perm_operator(Permutation::from_one_line({2, 3, 1}), 2);
  CHECK(cyc * cyc * cyc == TensorOperator::identity(2, 3));
  CHECK_FALSE(cyc == TensorOperator::identity(2, 3));
  for (const auto& a : enumerate_group(3))
    for (const auto& b : enumerate_group(3)) CHECK(perm_operator(a, 3) * perm_operator(b, 3) == perm_operator(a * b, 3));
}

TEST_CASE("isotypical projectors") {
  const auto id = TensorOperator::identity(2, 2);
  const auto swap = perm_operator(Permutation::from_one_line({2, 1}), 2);
  const auto sym = isotypical_projector(F({2, 0}, 2), 2);
  CHECK(sym == (id + swap).scaled(ExactScalar(1, 2)));
  CHECK(sym.trace() == 3);
  CHECK(sym.at(1, 2) == ExactScalar(1, 2));
  const auto anti = isotypical_projector(F({1, 1}, 2), 2);
  CHECK(anti == (id - swap).scaled(ExactScalar(1, 2)));
  CHECK(anti.trace() == 1);

  CHECK(isotypical_projector(F({1, 1, 1}, 3), 2).is_zero());
  CHECK_THROWS_AS(isotypical_projector(F({9}, 1), 2), CapExceeded);

  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= (d == 2 ? 5 : 4); ++n) {
      TensorOperator sum(d, n);
      const auto frames = enumerate_frames(d, n);
      for (const auto& l : frames) {
        const auto p = isotypical_projector(l, d);
        CHECK(p * p == p);
        CHECK(p.is_symmetric());
        CHECK(p.trace() == ExactScalar(dim_sym(l) * dim_unitary(l, d)));
        CHECK(twirl(p) == p);
        for (const auto& m : frames)
          if (m != l) CHECK((p * isotypical_projector(m, d)).is_zero());
        sum = sum + p;
      }
      CHECK(sum == TensorOperator::identity(d, n));
    }
}

TEST_CASE("partial trace and replacement") {
  const auto a = random_operator(2, 3, 11);
  CHECK(partial_trace(a, {}) == a);
  const auto full = partial_trace(a, {0, 1, 2});
  CHECK(full.dim() == 1);
  CHECK(full.at(0, 0) == a.trace());
  const auto sym = isotypical_projector(F({2, 0}, 2), 2);
  CHECK(partial_trace(sym, {1}) == TensorOperator::identity(2, 1).scaled(ExactScalar(3, 2)));

  const auto one = TensorOperator::identity(2, 0);
  CHECK(tensor_with_maximally_mixed(one, 1) == TensorOperator::identity(2, 1).scaled(ExactScalar(1, 2)));
  CHECK(tensor_with_maximally_mixed(a, 0) == a);
  CHECK(tensor_with_maximally_mixed(a, 2).trace() == a.trace());
  CHECK(tensor_with_identity(a, 1) == kron(a, TensorOperator::identity(2, 1)));
  CHECK(trace_and_replace(a, {1}).trace() == a.trace());
  CHECK(trace_and_replace(a, {2}) == tensor_with_maximally_mixed(partial_trace(a, {2}), 1));
  CHECK_THROWS(partial_trace(a, {3}));
  CHECK_THROWS(partial_trace(a, {1, 1}));
}

TEST_CASE("twirl") {
  const auto t = twirl(basis_projector(2, {0, 1}));
  CHECK(t == (basis_projector(2, {0, 1}) + basis_projector(2, {1, 0})).scaled(ExactScalar(1, 2)));
  for (unsigned seed : {1u, 2u}) {
    const auto a = random_operator(2, 3, seed);
    CHECK(twirl(twirl(a)) == twirl(a));
    CHECK(twirl(a) == twirl_by_group_sum(a));
    CHECK(twirl(a).trace() == a.trace());
  }
  const auto b = random_operator(3, 2, 9);
  CHECK(twirl(b) == twirl_by_group_sum(b));
}

TEST_CASE("depolarising channel") {
  const auto zero = basis_projector(2, {0});
  CHECK(depolarise_n(zero, ExactScalar(1, 2)) ==
        TensorOperator::from_scalars(2, 1, {ExactScalar(3, 4), 0, 0, ExactScalar(1, 4)}));
  const auto a = random_operator(2, 3, 5);
  CHECK(depolarise_n(a, 0) == a);
  CHECK(depolarise_n(a, 1) == TensorOperator::identity(2, 3).scaled(a.trace() / 8));
  CHECK(depolarise_n(a, ExactScalar(1, 3)).trace() == a.trace());
  CHECK(depolarising_layer(a, 0) == a);
  CHECK_THROWS_AS(depolarise_n(a, ExactScalar(3, 2)), std::domain_error);
}

TEST_CASE("overlaps") {
  const auto l = F({4, 0}, 2);
  const auto p = isotypical_projector(l, 2);
  CHECK(overlap(l, p) == ExactScalar(dim_sym(l) * dim_unitary(l, 2)));
  CHECK(overlap(F({3, 1}, 2), p) == 0);
  const auto traced = trace_and_replace(p, {3}, false);
  CHECK(overlap(F({2, 2}, 2), traced) == 0);
  CHECK(overlap(F({3, 1}, 2), traced) > 0);
  CHECK(trace_product(p, p) == p.trace());
}

TEST_CASE("positive semidefinite test") {
  CHECK(is_positive_semidefinite(TensorOperator::identity(2, 2)));
  CHECK(is_positive_semidefinite(isotypical_projector(F({2, 1}, 2), 2)));
  CHECK_FALSE(is_positive_semidefinite(TensorOperator::identity(2, 1).scaled(-1)));
  CHECK_FALSE(is_positive_semidefinite(TensorOperator::from_scalars(2, 1, {1, 2, 2, 1})));
  CHECK(is_positive_semidefinite(TensorOperator::from_scalars(2, 1, {1, 1, 1, 1})));
  CHECK_FALSE(is_positive_semidefinite(TensorOperator::from_scalars(2, 1, {0, 1, 1, 0})));

  for (int n = 2; n <= 4; ++n)
    for (const auto& l : enumerate_frames(2, n))
      for (int k = 1; k < n; ++k) {
        TensorOperator sum(2, n);
        for (const auto& [m, v] : lr_nonzero_pairs(l, n - k, k))
          sum = sum + kron(isotypical_projector(m, 2), isotypical_projector(v, 2));
        CHECK(is_positive_semidefinite(sum - isotypical_projector(l, 2)));
      }
}

TEST_CASE("sparse triplet dump round trip") {
  const auto a = random_operator(2, 2, 17);
  std::stringstream ss;
  write_sparse_triplets(ss, a);
  CHECK(ss.str().rfind("# tensor-operator d=2 n=2\n", 0) == 0);
  CHECK(read_sparse_triplets(ss) == a);
  std::stringstream bad("# tensor-operator d=2 n=1\n0 5 1/2\n");
  CHECK_THROWS(read_sparse_triplets(bad));
}
