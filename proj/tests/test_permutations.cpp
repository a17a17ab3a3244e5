#include <doctest.h>

#include <set>

#include "depolar/permutations.hpp"

using namespace depolar;

TEST_CASE("permutation basics") {
  const auto p = Permutation::from_one_line({2, 3, 1});
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p * p.inverse() == Permutation(3));
  CHECK((p * p * p) == Permutation(3));
  const auto t = Permutation::from_one_line({2, 1, 3});
  CHECK((p * t)(0) == p(t(0)));
  CHECK_THROWS(Permutation(std::vector<int>{0, 0}));
  CHECK_THROWS(Permutation::from_one_line({1, 3}));
}

TEST_CASE("cycle types") {
  CHECK(cycle_type(Permutation(4)).trimmed() == std::vector<int>{1, 1, 1, 1});
  CHECK(cycle_type(Permutation::from_one_line({2, 1, 3})).trimmed() == std::vector<int>{2, 1});
  CHECK(cycle_type(Permutation::from_one_line({2, 3, 1, 5, 4})).trimmed() == std::vector<int>{3, 2});
  CHECK(class_size(YoungFrame::from_rows({2, 1, 1})) == 6);
  CHECK(class_size(YoungFrame::from_rows({4})) == 6);
}

TEST_CASE("group enumeration") {
  auto count = [](int n) {
    std::size_t c = 0;
    for (const auto& p : enumerate_group(n)) {
      (void)p;
      ++c;
    }
    return c;
  };
  CHECK(count(1) == 1);
  CHECK(count(3) == 6);
  CHECK(count(8) == 40320);
  std::set<std::vector<int>> seen;
  for (const auto& p : enumerate_group(4)) seen.insert({p.images().begin(), p.images().end()});
  CHECK(seen.size() == 24);
  CHECK_THROWS_AS(enumerate_group(11), CapExceeded);
  CHECK_NOTHROW(enumerate_group(11, 11));
}

TEST_CASE("class sizes partition the group") {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t total = 0;
    for (const auto& c : conjugacy_classes(n)) total += class_size(c);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("character values") {
  const auto c111 = YoungFrame::from_rows({1, 1, 1});
  const auto c3 = YoungFrame::from_rows({3});
  const auto c21 = YoungFrame::from_rows({2, 1});
  CHECK(character(c21, c111) == 2);
  CHECK(character(c21, c3) == -1);
  CHECK(character(c21, c21) == 0);
  CHECK(character(YoungFrame::from_rows({5}), YoungFrame::from_rows({3, 2})) == 1);
  for (const auto& c : conjugacy_classes(5)) {
    const int parity = (5 - c.length()) % 2;
    CHECK(character(YoungFrame::from_rows({1, 1, 1, 1, 1}), c) == (parity ? -1 : 1));
  }
  CHECK_THROWS(character(c21, YoungFrame::from_rows({2})));
}

TEST_CASE("character orthogonality and regular representation") {
  for (int n = 1; n <= 8; ++n) {
    const auto classes = conjugacy_classes(n);
    const auto frames = enumerate_frames(n, n);
    for (const auto& l : frames) {
      CHECK(character(l, YoungFrame::from_rows(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
            static_cast<std::int64_t>(dim_sym(l)));
      for (const auto& m : frames) {
        std::int64_t sum = 0;
        for (const auto& c : classes) sum += static_cast<std::int64_t>(class_size(c)) * character(l, c) * character(m, c);
        CHECK(sum == (l == m ? static_cast<std::int64_t>(factorial(n)) : 0));
      }
    }
    for (const auto& c : classes) {
      if (c.length() == n) continue;
      std::int64_t sum = 0;
      for (const auto& l : frames) sum += static_cast<std::int64_t>(dim_sym(l)) * character(l, c);
      CHECK(sum == 0);
    }
  }
}
