#include <doctest.h>

#include "depolar/horn.hpp"
#include "depolar/lr.hpp"

using namespace depolar;

namespace {
YoungFrame F(std::vector<int> rows, int d) { return YoungFrame(std::move(rows), d); }
}  // namespace

TEST_CASE("basic Horn inequalities") {
  CHECK(basic_horn_holds(HornTriple(F({2, 0}, 2), F({1, 0}, 2), F({1, 0}, 2))));
  CHECK_FALSE(basic_horn_holds(HornTriple(F({2, 2}, 2), F({2, 0}, 2), F({1, 1}, 2))));
  CHECK_FALSE(basic_horn_holds(HornTriple(F({3, 0}, 2), F({1, 0}, 2), F({1, 0}, 2))));
}

TEST_CASE("Horn feasibility") {
  CHECK(horn_feasible(HornTriple(F({2, 0}, 2), F({1, 0}, 2), F({1, 0}, 2))));
  CHECK_FALSE(horn_feasible(HornTriple(F({2, 2}, 2), F({2, 0}, 2), F({1, 1}, 2))));
  CHECK(horn_feasible(HornTriple(F({2, 1}, 2), F({1, 0}, 2), F({1, 1}, 2))));
  const HornTriple mixed(F({2, 1}, 2), F({1}, 1), F({1, 1}, 2));
  CHECK(mixed.d() == 2);
  CHECK(mixed.mu.d() == 2);
}

TEST_CASE("support window") {
  const auto lambda = F({4, 0}, 2);
  CHECK(support_window(lambda, 2, 0)(lambda));
  CHECK_FALSE(support_window(lambda, 2, 0)(F({3, 1}, 2)));
  CHECK(support_window(lambda, 2, 1)(F({3, 1}, 2)));
  CHECK_FALSE(support_window(lambda, 2, 1)(F({2, 2}, 2)));
  CHECK(support_window(F({6, 3, 0}, 3), 3, 1)(F({4, 4, 1}, 3)));
  CHECK(support_window(lambda, 2, 3).width() == 3);
}

TEST_CASE("chain check examples") {
  CHECK(theorem1_chain_check(F({4, 0}, 2), F({2, 2}, 2), 3, 1, 2));
  CHECK_FALSE(theorem1_chain_check(F({4, 0}, 2), F({3, 1}, 2), 3, 1, 2));
  for (const auto& l : enumerate_frames(3, 5))
    for (int k = 0; k <= 5; ++k) CHECK_FALSE(theorem1_chain_check(l, l, 5 - k, k, 3));
}

TEST_CASE("necessity and window implication at desk scale") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 6; ++n)
      for (const auto& l : enumerate_frames(d, n)) {
        for (int a = 0; a <= n; ++a)
          for (const auto& m : enumerate_frames(d, a))
            for (const auto& v : enumerate_frames(d, n - a)) {
              const HornTriple t(l, m, v);
              CHECK(horn_feasible(t) == (lr_coefficient(l, m, v) > 0));
              if (horn_feasible(t)) CHECK(basic_horn_holds(t));
            }
        for (const auto& lp : enumerate_frames(d, n))
          for (int k = 0; k <= n; ++k)
            if (!support_window(l, d, k)(lp)) CHECK(theorem1_chain_check(l, lp, n - k, k, d));
      }
}
