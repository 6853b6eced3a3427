#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "dcrystal/cartan.hpp"

using namespace dcrystal;

TEST_CASE("rank validation") {
  REQUIRE_THROWS_AS(Rank(3), std::invalid_argument);
  REQUIRE_THROWS_AS(Rank(0), std::invalid_argument);
  REQUIRE(Rank(4).n == 4);
}

TEST_CASE("positive root enumeration") {
  for (int n = 4; n <= 7; ++n) {
    Rank rank(n);
    auto roots = positive_roots(rank);
    REQUIRE(static_cast<int>(roots.size()) == n * (n - 1));
    REQUIRE(std::is_sorted(roots.begin(), roots.end()));
    std::set<Root> uniq(roots.begin(), roots.end());
    REQUIRE(uniq.size() == roots.size());
    for (const Root& r : roots) REQUIRE(valid_root(r, rank));
  }
}

TEST_CASE("root constructors reject bad indices") {
  REQUIRE_THROWS_AS(beta(2, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(gamma(3, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(gamma(0, 2), std::invalid_argument);
  REQUIRE_FALSE(valid_root(beta(1, 4), Rank(4)));  // k <= n-1 only
  REQUIRE_FALSE(valid_root(gamma(1, 5), Rank(4)));
}

TEST_CASE("epsilon coordinates") {
  Rank r4(4);
  REQUIRE(epsilon_coords(beta(1, 1), r4) == WeightVector{1, -1, 0, 0});
  REQUIRE(epsilon_coords(beta(1, 3), r4) == WeightVector{1, 0, 0, -1});
  REQUIRE(epsilon_coords(gamma(3, 4), r4) == WeightVector{0, 0, 1, 1});
  REQUIRE(epsilon_coords(gamma(1, 4), r4) == WeightVector{1, 0, 0, 1});
  REQUIRE(epsilon_coords(gamma(1, 2), r4) == WeightVector{1, 1, 0, 0});
}

TEST_CASE("simple root coordinates") {
  Rank r4(4);
  REQUIRE(simple_coords(gamma(1, 2), r4) == std::vector<int>{1, 2, 1, 1});
  REQUIRE(simple_coords(beta(2, 3), r4) == std::vector<int>{0, 1, 1, 0});
  REQUIRE(simple_coords(gamma(3, 4), r4) == std::vector<int>{0, 0, 0, 1});
  REQUIRE(simple_coords(gamma(1, 4), r4) == std::vector<int>{1, 1, 0, 1});
  REQUIRE(simple_coords(gamma(2, 4), r4) == std::vector<int>{0, 1, 0, 1});
  REQUIRE(simple_coords(gamma(2, 3), r4) == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("simple coordinates agree with epsilon coordinates") {
  for (int n = 4; n <= 7; ++n) {
    Rank rank(n);
    for (const Root& r : positive_roots(rank)) {
      auto c = simple_coords(r, rank);
      WeightVector w(n, 0);
      for (int j = 1; j <= n; ++j) {
        auto a = simple_epsilon(j, rank);
        for (int t = 0; t < n; ++t) w[t] += c[j - 1] * a[t];
      }
      REQUIRE(w == epsilon_coords(r, rank));
    }
  }
}

TEST_CASE("simple roots") {
  Rank r4(4);
  REQUIRE(simple_root(1, r4) == beta(1, 1));
  REQUIRE(simple_root(3, r4) == beta(3, 3));
  REQUIRE(simple_root(4, r4) == gamma(3, 4));
  REQUIRE_THROWS_AS(simple_root(5, r4), std::invalid_argument);
  REQUIRE_THROWS_AS(simple_root(0, r4), std::invalid_argument);

  // gamma(3,4) is the unique positive root equal to alpha_4
  int hits = 0;
  for (const Root& r : positive_roots(r4))
    if (simple_coords(r, r4) == std::vector<int>{0, 0, 0, 1}) ++hits;
  REQUIRE(hits == 1);
}

TEST_CASE("add_simple / subtract_simple on known cases") {
  Rank r4(4);
  REQUIRE(add_simple(beta(1, 1), 2, r4) == beta(1, 2));
  REQUIRE(add_simple(beta(1, 2), 4, r4) == gamma(1, 4));
  REQUIRE(add_simple(gamma(1, 3), 2, r4) == gamma(1, 2));
  REQUIRE_FALSE(add_simple(beta(1, 1), 1, r4).has_value());

  auto d = subtract_simple(gamma(3, 4), 4, r4);
  REQUIRE(d.zero);
  REQUIRE_FALSE(d.root.has_value());
  d = subtract_simple(gamma(2, 3), 4, r4);
  REQUIRE_FALSE(d.zero);
  REQUIRE(d.root == beta(2, 3));
  d = subtract_simple(beta(1, 2), 1, r4);
  REQUIRE(d.root == beta(2, 2));
  d = subtract_simple(beta(1, 3), 2, r4);
  REQUIRE_FALSE(d.zero);
  REQUIRE_FALSE(d.root.has_value());
}

TEST_CASE("add_simple and subtract_simple are mutually inverse") {
  for (int n = 4; n <= 6; ++n) {
    Rank rank(n);
    for (const Root& r : positive_roots(rank)) {
      for (int i = 1; i <= n; ++i) {
        if (auto up = add_simple(r, i, rank)) {
          auto down = subtract_simple(*up, i, rank);
          REQUIRE(down.root == r);
        }
        auto down = subtract_simple(r, i, rank);
        if (down.root) REQUIRE(add_simple(*down.root, i, rank) == r);
        if (down.zero) REQUIRE(r == simple_root(i, rank));
      }
    }
  }
}

TEST_CASE("coroot pairing reproduces the Cartan matrix") {
  for (int n = 4; n <= 7; ++n) {
    Rank rank(n);
    auto expected = [n](int i, int j) {
      if (i == j) return 2;
      int a = std::min(i, j), b = std::max(i, j);
      if (b <= n - 1 && b - a == 1) return -1;  // the A_{n-1} chain
      if (a == n - 2 && b == n) return -1;      // fork edge
      return 0;
    };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        REQUIRE(coroot_pairing(i, simple_epsilon(j, rank), rank) == expected(i, j));
  }
}

TEST_CASE("coroot pairing spot values") {
  Rank r4(4);
  REQUIRE(coroot_pairing(1, simple_epsilon(1, r4), r4) == 2);
  REQUIRE(coroot_pairing(2, simple_epsilon(4, r4), r4) == -1);  // fork: alpha_{n-2} -- alpha_n
  REQUIRE(coroot_pairing(3, simple_epsilon(4, r4), r4) == 0);   // alpha_{n-1}, alpha_n not adjacent
  REQUIRE(coroot_pairing(4, simple_epsilon(1, r4), r4) == 0);
  REQUIRE(coroot_pairing(4, WeightVector{0, 0, 1, 1}, r4) == 2);
  Rank r5(5);
  REQUIRE(coroot_pairing(3, simple_epsilon(4, r5), r5) == -1);  // chain edge at n >= 5
}

TEST_CASE("simple decomposition round trips") {
  for (int n = 4; n <= 6; ++n) {
    Rank rank(n);
    for (const Root& r : positive_roots(rank)) {
      auto m = simple_decomposition(epsilon_coords(r, rank), rank);
      REQUIRE(m.has_value());
      REQUIRE(*m == simple_coords(r, rank));
    }
  }
  // epsilon_1 alone is a weight but not in the root lattice
  REQUIRE_FALSE(simple_decomposition(WeightVector{1, 0, 0, 0}, Rank(4)).has_value());
}

namespace {

/* Independent oracle: knapsack table over bounded lattice boxes. */
std::map<std::vector<int>, std::uint64_t> partition_table(Rank rank, const std::vector<int>& bound) {
  std::map<std::vector<int>, std::uint64_t> ways;
  ways[std::vector<int>(rank.n, 0)] = 1;
  for (const Root& r : positive_roots(rank)) {
    auto c = simple_coords(r, rank);
    auto next = ways;
    for (const auto& [v, w] : ways) {
      std::vector<int> cur = v;
      while (true) {
        bool ok = true;
        for (int t = 0; t < rank.n; ++t) {
          cur[t] += c[t];
          if (cur[t] > bound[t]) ok = false;
        }
        if (!ok) break;
        next[cur] += w;
      }
    }
    ways = std::move(next);
  }
  return ways;
}

}  // namespace

TEST_CASE("kostant partition count oracle") {
  Rank r4(4);
  REQUIRE(kostant_partition_count({0, 0, 0, 0}, r4) == 1);
  REQUIRE(kostant_partition_count({1, 0, 0, 0}, r4) == 1);
  REQUIRE(kostant_partition_count({1, 1, 0, 0}, r4) == 2);  // {a1,a2}, {a1+a2}
  REQUIRE(kostant_partition_count({0, 0, 1, 1}, r4) == 1);  // a3+a4 is not a root
  REQUIRE(kostant_partition_count({0, 1, 1, 0}, r4) == 2);
  REQUIRE(kostant_partition_count({-1, 0, 0, 0}, r4) == 0);

  std::vector<int> bound{2, 2, 2, 2};
  auto table = partition_table(r4, bound);
  std::vector<int> mu(4, 0);
  for (mu[0] = 0; mu[0] <= 2; ++mu[0])
    for (mu[1] = 0; mu[1] <= 2; ++mu[1])
      for (mu[2] = 0; mu[2] <= 2; ++mu[2])
        for (mu[3] = 0; mu[3] <= 2; ++mu[3]) {
          std::uint64_t expected = table.count(mu) ? table.at(mu) : 0;
          REQUIRE(kostant_partition_count(mu, r4) == expected);
        }
}
