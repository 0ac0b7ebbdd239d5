#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "qhs/error.hpp"
#include "qhs/semigroup.hpp"

using namespace qhs;

namespace {
// Independent oracle: brute-force membership by nested loops (k ≤ 3).
bool brute_member(int d, const std::vector<int>& g) {
  if (d < 0) return false;
  for (int a = 0; a * g[0] <= d; ++a) {
    if (g.size() == 1) {
      if (a * g[0] == d) return true;
      continue;
    }
    for (int b = 0; a * g[0] + b * g[1] <= d; ++b) {
      int rest = d - a * g[0] - b * g[1];
      if (g.size() == 2) {
        if (rest == 0) return true;
      } else if (rest % g[2] == 0) {
        return true;
      }
    }
  }
  return false;
}
}  // namespace

TEST_CASE("weights validation") {
  CHECK_NOTHROW(Weights({3, 4, 5}));
  CHECK_THROWS_AS(Weights({4, 3}), InvalidWeights);
  CHECK_THROWS_AS(Weights({4, 6}), InvalidWeights);
  CHECK_THROWS_AS(Weights({3, 6, 7}), InvalidWeights);   // 6 = 2·3
  CHECK_THROWS_AS(Weights({3, 4, 7}), InvalidWeights);   // 7 = 3+4
  CHECK_THROWS_AS(Weights({0, 1}), InvalidWeights);
  CHECK_THROWS_AS(Weights({}), InvalidWeights);

  auto n = Weights::normalize({4, 6});
  CHECK(n.gcd == 2);
  CHECK(n.weights == Weights({2, 3}));
  CHECK(Weights({3, 7, 8}).top_sum(2) == 15);
  CHECK(Weights::parse_list("3, 5,7") == std::vector<int>{3, 5, 7});
  CHECK_THROWS_AS(Weights::parse_list("3,,5"), InvalidWeights);
}

TEST_CASE("membership and representations") {
  Weights w({3, 4, 5});
  CHECK(is_representable(0, w));
  CHECK_FALSE(is_representable(2, w));
  CHECK(is_representable(7, w));
  CHECK_FALSE(is_representable(-3, w));

  auto r12 = representations(12, w);
  std::set<Representation> got(r12.begin(), r12.end());
  CHECK(got == std::set<Representation>{{4, 0, 0}, {0, 3, 0}, {1, 1, 1}});
  CHECK(std::is_sorted(r12.begin(), r12.end()));
  CHECK(representations(1, w).empty());
  auto r8 = representations(8, w);
  CHECK(std::set<Representation>(r8.begin(), r8.end()) == std::set<Representation>{{1, 0, 1}, {0, 2, 0}});

  for (std::vector<int> g : {std::vector<int>{3, 4, 5}, {3, 5, 7}, {3, 7, 8}, {2, 3}, {5, 7}})
    for (int d = -2; d < 60; ++d) {
      CHECK(is_representable(d, g) == brute_member(d, g));
      CHECK(representations(std::max(d, 0), g).empty() == !brute_member(std::max(d, 0), g));
    }
}

TEST_CASE("frobenius numbers and gaps") {
  CHECK(frobenius_number(Weights({3, 4})) == 5);
  CHECK(sylvester_frobenius(3, 4) == 5);
  CHECK(frobenius_number(Weights({3, 4, 5})) == 2);
  CHECK(frobenius_number(Weights({3, 7, 8})) == 5);
  CHECK(gaps(Weights({3, 4})) == std::vector<int>{1, 2, 5});
  CHECK(gaps(Weights({3, 5, 7})) == std::vector<int>{1, 2, 4});
  CHECK(gaps(Weights({2, 3})) == std::vector<int>{1});
  CHECK(gaps(Weights({3, 7, 8})) == std::vector<int>{1, 2, 4, 5});
  std::vector<int> bad{4, 6};
  CHECK_THROWS_AS(frobenius_number(bad), InvalidWeights);
  CHECK_THROWS_AS(gaps(bad), InvalidWeights);

  for (int a = 2; a < 12; ++a)
    for (int b = a + 1; b < 15; ++b) {
      if (std::gcd(a, b) != 1) continue;
      auto g = gaps(Weights({a, b}));
      CHECK(static_cast<int>(g.size()) == sylvester_gap_count(a, b));
      CHECK(g.back() == sylvester_frobenius(a, b));
    }
}

TEST_CASE("semigroup closure") {
  Weights w({3, 7, 8});
  for (int a = 0; a < 40; ++a)
    for (int b = 0; b < 40; ++b)
      if (is_representable(a, w) && is_representable(b, w)) CHECK(is_representable(a + b, w));
  int g = frobenius_number(w);
  for (int d = g + 1; d < g + 50; ++d) CHECK(is_representable(d, w));
}
