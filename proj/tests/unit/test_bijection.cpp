#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "adjointlab/bijection.hpp"
#include "adjointlab/spectra.hpp"
#include "helpers.hpp"

using namespace adjointlab;
using testing::complete;
using testing::example5;
using testing::path;

namespace {

Edge lab(int a, int b) { return Edge(a - 1, b - 1); }

CliqueCover cover(std::initializer_list<std::initializer_list<int>> parts) {
  std::vector<std::vector<int>> out;
  for (auto p : parts) {
    std::vector<int> part;
    for (int v : p) part.push_back(v - 1);
    out.push_back(part);
  }
  return CliqueCover::canonical(out);
}

}  // namespace

TEST_CASE("phi on the example graph") {
  const Graph g = example5();
  const VertexOrdering id = VertexOrdering::identity(5);
  const HatGraph hat = hat_of(g, id);

  const IndependentSet a = phi_forward(g, cover({{2, 4, 5}, {1, 3}}), id);
  CHECK(a == IndependentSet::canonical({lab(2, 5), lab(4, 5), lab(1, 3)}));
  CHECK(is_independent(hat, a));
  CHECK(phi_inverse(g, hat, a, id) == cover({{2, 4, 5}, {1, 3}}));

  const IndependentSet none = phi_forward(g, cover({{1}, {2}, {3}, {4}, {5}}), id);
  CHECK(none.members.empty());
  CHECK(phi_inverse(g, hat, none, id) == cover({{1}, {2}, {3}, {4}, {5}}));

  const IndependentSet one = phi_forward(g, cover({{1, 2}, {3}, {4}, {5}}), id);
  CHECK(one == IndependentSet::canonical({lab(1, 2)}));
  CHECK(phi_inverse(g, hat, one, id) == cover({{1, 2}, {3}, {4}, {5}}));
}

TEST_CASE("phi rejects invalid input") {
  const Graph g = example5();
  const VertexOrdering id = VertexOrdering::identity(5);
  const HatGraph hat = hat_of(g, id);
  // {1,4} is not a clique; {1,2},{2,3} overlap; {1,2} alone misses vertices.
  CHECK_THROWS(phi_forward(g, cover({{1, 4}, {2}, {3}, {5}}), id));
  CHECK_THROWS(phi_forward(g, CliqueCover{{{0, 1}, {1, 2}, {3}, {4}}}, id));
  CHECK_THROWS(phi_forward(g, cover({{1, 2}}), id));
  // (1,2) and (1,3) are adjacent in the hat graph.
  CHECK_THROWS(phi_inverse(g, hat, IndependentSet::canonical({lab(1, 2), lab(1, 3)}), id));
  CHECK_THROWS(phi_inverse(g, hat, IndependentSet::canonical({lab(1, 4)}), id));
}

TEST_CASE("brute-force enumerations") {
  CHECK(enumerate_clique_covers(path(3)).size() == 3);
  CHECK(enumerate_clique_covers(complete(3)).size() == 5);
  CHECK(enumerate_clique_covers(Graph(1)).size() == 1);
  const auto hk3 = hat_of(complete(3), VertexOrdering::identity(3));

  const auto count_sets = [](const Graph& g) {
    int c = 0;
    for_each_independent_set(g, [&](VertexMask) { ++c; });
    return c;
  };
  CHECK(count_sets(complete(3)) == 4);
  CHECK(count_sets(path(3)) == 5);
  CHECK(enumerate_independent_sets(hat_of(example5(), VertexOrdering::identity(5))).size() == 20);
  // hat(K3) is a path, with as many independent sets as K3 has covers.
  CHECK(enumerate_independent_sets(hk3).size() == 5);
}

TEST_CASE("enumerated covers are distinct valid partitions") {
  testing::Gen gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = gen.graph(1, 7);
    const auto covers = enumerate_clique_covers(g);
    for (const auto& q : covers) CHECK_NOTHROW(validate_cover(g, q));
    auto sorted = covers;
    std::sort(sorted.begin(), sorted.end(), [](const CliqueCover& a, const CliqueCover& b) { return a.parts < b.parts; });
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    BigInt total = 0;
    for (const auto& c : clique_cover_spectrum(g).counts) total += c;
    CHECK(total == covers.size());
  }
}

TEST_CASE("bijection reports") {
  const BijectionReport fig = verify_bijection(example5(), VertexOrdering::identity(5));
  CHECK(fig.passed());
  CHECK(fig.covers == 20);
  CHECK(fig.independent_sets == 20);

  std::vector<int> perm{0, 1, 2};
  do {
    CHECK(verify_bijection(complete(3), VertexOrdering(perm)).passed());
  } while (std::next_permutation(perm.begin(), perm.end()));

  const Graph two_k2 = testing::make(4, {{1, 2}, {3, 4}});
  CHECK(verify_bijection(two_k2, VertexOrdering::identity(4)).passed());
  CHECK(verify_bijection(Graph(3), VertexOrdering::identity(3)).passed());
}

TEST_CASE("a broken hat rule is caught") {
  const BijectionReport r = verify_bijection(complete(3), VertexOrdering::identity(3), HatRule::sabotaged);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("phi round trips on random graphs and orderings") {
  testing::Gen gen(32);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = gen.graph(1, 7);
    const VertexOrdering ord = gen.ordering(g.order());
    const BijectionReport r = verify_bijection(g, ord);
    CHECK(r.passed());
    CHECK(r.covers == r.independent_sets);
  }
}

TEST_CASE("hat independence spectrum does not depend on the ordering") {
  testing::Gen gen(33);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = gen.graph(2, 9);
    if (g.edge_count() == 0) continue;
    const auto ref = independence_spectrum(hat_of(g, VertexOrdering::identity(g.order())).graph);
    for (int k = 0; k < 3; ++k) {
      CHECK(independence_spectrum(hat_of(g, gen.ordering(g.order())).graph) == ref);
    }
  }
}

TEST_CASE("bijection holds for every graph on at most 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, false, [&](const Graph& g) {
      REQUIRE(verify_bijection(g, VertexOrdering::identity(n)).passed());
    });
  }
}

TEST_CASE("json forms") {
  CHECK(to_json(cover({{2, 4, 5}, {1, 3}})) == nlohmann::json::parse("[[1,3],[2,4,5]]"));
  CHECK(to_json(IndependentSet::canonical({lab(4, 5), lab(1, 3)})) == nlohmann::json::parse("[[1,3],[4,5]]"));
}
