#include <doctest.h>

#include "gridobs/fixtures.hpp"
#include "gridobs/visibility.hpp"

using namespace gridobs;

// Generators call verify() themselves, so constructing a fixture already
// is the master property check; the tests below pin counts and ranges.

TEST_CASE("path and complete need no obstacles") {
  for (int n : {1, 2, 3, 10}) {
    CHECK(fixture_path(n).rep.obstacle_count() == 0);
    CHECK(fixture_complete(n).rep.obstacle_count() == 0);
  }
  // side-n grid for K_n
  auto k6 = fixture_complete(6);
  for (auto& v : k6.rep.vertices) {
    CHECK(v.x >= 0);
    CHECK(v.x < 6);
    CHECK(v.y >= 0);
    CHECK(v.y < 6);
  }
}

TEST_CASE("empty graph uses exactly n-1 obstacles") {
  for (int n : {1, 2, 7, 12}) {
    auto f = fixture_empty(n);
    CHECK(f.graph == Graph::empty(n));
    CHECK(f.rep.obstacle_count() == n - 1);
  }
}

TEST_CASE("matching uses k-1 obstacles") {
  for (int k : {1, 2, 6}) {
    auto f = fixture_matching(k);
    CHECK(f.graph.n() == 2 * k);
    CHECK(f.graph.edge_count() == std::size_t(k));
    CHECK(f.rep.obstacle_count() == k - 1);
  }
}

TEST_CASE("cycle uses ceil(n/2)-2 obstacles") {
  for (int n : {7, 8, 9, 14, 26}) {
    auto f = fixture_cycle(n);
    CHECK(f.graph == Graph::cycle(n));
    CHECK(f.rep.obstacle_count() == (n + 1) / 2 - 2);
  }
  CHECK(fixture_cycle(26).rep.obstacle_count() <= 11);
  CHECK_THROWS_AS(fixture_cycle(6), invalid_input);
}

TEST_CASE("complete bipartite uses n+m-3 obstacles") {
  for (auto [n, m] : {std::pair{2, 2}, {2, 5}, {3, 3}, {5, 7}, {4, 8}}) {
    auto f = fixture_complete_bipartite(n, m);
    CHECK(f.graph == Graph::complete_bipartite(n, m));
    CHECK(f.rep.obstacle_count() == n + m - 3);
  }
  CHECK(fixture_complete_bipartite(5, 7).rep.obstacle_count() == 9);
  CHECK_THROWS_AS(fixture_complete_bipartite(1, 4), invalid_input);
  CHECK_THROWS_AS(fixture_complete_bipartite(3, 2), invalid_input);
}

TEST_CASE("complete minus matching") {
  // chain layout: k-1 obstacles for k <= 3
  for (auto [n, k] : {std::pair{3, 1}, {6, 1}, {4, 2}, {8, 2}, {6, 3}, {12, 3}}) {
    auto f = fixture_complete_minus_matching(n, k);
    CHECK(f.graph.edge_count() == std::size_t(n * (n - 1) / 2 - k));
    CHECK(f.rep.obstacle_count() == k - 1);
  }
  // fallback: one obstacle per pair
  for (auto [n, k] : {std::pair{8, 4}, {10, 5}, {2, 1}}) {
    auto f = fixture_complete_minus_matching(n, k);
    CHECK(f.graph.edge_count() == std::size_t(n * (n - 1) / 2 - k));
    CHECK(f.rep.obstacle_count() <= k);
  }
  CHECK_THROWS_AS(fixture_complete_minus_matching(3, 2), invalid_input);
}

TEST_CASE("two disjoint cliques behind a blocked column") {
  for (auto [n, m] : {std::pair{1, 1}, {2, 3}, {4, 4}, {3, 6}}) {
    auto f = fixture_empty_bipartite_complement(n, m);
    CHECK(f.graph.n() == n + m);
    CHECK(f.graph.edge_count() ==
          std::size_t(n * (n - 1) / 2 + m * (m - 1) / 2));
    CHECK(f.rep.obstacle_count() == std::max(n, m));
  }
}

TEST_CASE("binary tree fixture") {
  auto f = fixture_binary_tree(3);
  CHECK(f.graph.n() == 15);
  CHECK(f.graph.edge_count() == 14);
  REQUIRE(f.rep.bounds);
  Coord w = f.rep.bounds->hi.x - f.rep.bounds->lo.x + 1;
  Coord h = f.rep.bounds->hi.y - f.rep.bounds->lo.y + 1;
  CHECK(w == 15);  // O(2^h)
  CHECK(h == 7);   // O(h)
  for (int hh : {1, 2, 4}) {
    auto t = fixture_binary_tree(hh);
    CHECK(t.graph.n() == (1 << (hh + 1)) - 1);
  }
}

TEST_CASE("fixture dispatch") {
  CHECK(fixture("path", {5}).graph == Graph::path(5));
  CHECK(fixture("complete_bipartite", {2, 3}).graph == Graph::complete_bipartite(2, 3));
  CHECK_THROWS_AS(fixture("path", {1, 2}), invalid_input);
  CHECK_THROWS_AS(fixture("moebius", {5}), invalid_input);
}
