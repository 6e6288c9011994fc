#include <random>

#include "doctest.h"
#include "gstone/errors.hpp"
#include "gstone/order_core.hpp"
#include "helpers.hpp"

using namespace gstone;

namespace {

// 0 < a < b
FinitePoset chain3() {
  return FinitePoset({"0", "a", "b"},
                     {1, 1, 1,
                      0, 1, 1,
                      0, 0, 1},
                     "0");
}

// the Boolean algebra {0, p, q, 1} on two atoms
FinitePoset b2() {
  return FinitePoset({"0", "1", "p", "q"},
                     {1, 1, 1, 1,
                      0, 1, 0, 0,
                      0, 1, 1, 0,
                      0, 1, 0, 1},
                     "0");
}

// the diamond M3: three incomparable atoms under a top
FinitePoset m3() {
  return FinitePoset({"0", "1", "x", "y", "z"},
                     {1, 1, 1, 1, 1,
                      0, 1, 0, 0, 0,
                      0, 1, 1, 0, 0,
                      0, 1, 0, 1, 0,
                      0, 1, 0, 0, 1},
                     "0");
}

std::vector<int> names_to_indices(const FinitePoset& p,
                                  const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(p.index_of(n));
  return out;
}

std::vector<std::string> indices_to_names(const FinitePoset& p,
                                          const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(p.name(i));
  return out;
}

}  // namespace

TEST_SUITE("order-core") {

TEST_CASE("upward closure on a chain, the empty set, and B2") {
  const FinitePoset c = chain3();
  CHECK(indices_to_names(c, c.upward_closure(names_to_indices(c, {"a"}))) ==
        std::vector<std::string>{"a", "b"});
  CHECK(c.upward_closure({}).empty());

  const FinitePoset p = b2();
  // oracle: scan every element against the table by the definition
  std::vector<std::string> expected;
  for (int x = 0; x < p.size(); ++x) {
    if (p.leq(p.index_of("p"), x)) expected.push_back(p.name(x));
  }
  CHECK(expected == std::vector<std::string>{"1", "p"});
  CHECK(indices_to_names(p, p.upward_closure(names_to_indices(p, {"p"}))) ==
        expected);
}

TEST_CASE("upward closure is idempotent on random subsets") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const FinitePoset p = testing::random_poset(rng, n);
    std::vector<int> subset;
    for (int x = 0; x < n; ++x) {
      if (rng() % 2) subset.push_back(x);
    }
    const auto once = p.upward_closure(subset);
    CHECK(p.upward_closure(once) == once);
    // and it contains the subset
    for (int x : subset) {
      CHECK(std::binary_search(once.begin(), once.end(), x));
    }
  }
}

TEST_CASE("filter recognition on B2") {
  const FinitePoset p = b2();
  CHECK(p.is_filter(names_to_indices(p, {"p", "1"})));
  CHECK(!p.is_filter(names_to_indices(p, {"p", "q", "1"})));
  CHECK(!p.is_filter(names_to_indices(p, {"0", "1"})));
  CHECK(!p.is_filter({}));
}

TEST_CASE("ultrafilters on B2, a chain, and the zero poset") {
  const FinitePoset p = b2();
  const auto ultra = p.ultrafilters();
  REQUIRE(ultra.size() == 2);
  CHECK(indices_to_names(p, ultra[0].members) ==
        std::vector<std::string>{"1", "p"});
  CHECK(indices_to_names(p, ultra[1].members) ==
        std::vector<std::string>{"1", "q"});

  const FinitePoset two = FinitePoset({"0", "a"}, {1, 1, 0, 1}, "0");
  const auto u2 = two.ultrafilters();
  REQUIRE(u2.size() == 1);
  CHECK(indices_to_names(two, u2[0].members) == std::vector<std::string>{"a"});

  const FinitePoset zero = FinitePoset({"0"}, {1}, "0");
  CHECK(zero.ultrafilters().empty());
}

TEST_CASE("every ultrafilter is the up-set of its minimum") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const FinitePoset p =
        testing::random_poset(rng, 2 + static_cast<int>(rng() % 11));
    for (const Filter& f : p.ultrafilters()) {
      const int single[1] = {f.minimum};
      CHECK(p.upward_closure(single) == f.members);
      CHECK(p.is_filter(f.members));
    }
  }
}

TEST_CASE("ultrafilter oracle: principal filters at minimal nonzero elements") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const FinitePoset p =
        testing::random_poset(rng, 2 + static_cast<int>(rng() % 11));
    // oracle computed straight from the relation table
    std::vector<std::vector<int>> expected;
    for (int m = 0; m < p.size(); ++m) {
      if (m == p.bottom()) continue;
      bool minimal = true;
      for (int x = 0; x < p.size(); ++x) {
        if (x != m && x != p.bottom() && p.leq(x, m)) minimal = false;
      }
      if (!minimal) continue;
      std::vector<int> up;
      for (int x = 0; x < p.size(); ++x) {
        if (p.leq(m, x)) up.push_back(x);
      }
      expected.push_back(up);
    }
    std::vector<std::vector<int>> actual;
    for (const Filter& f : p.ultrafilters()) actual.push_back(f.members);
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    CHECK(expected == actual);
  }
}

TEST_CASE("Boolean algebra recognition") {
  CHECK(testing::boolean_algebra_poset(2).is_boolean_algebra());
  CHECK(b2().is_boolean_algebra());

  // 0 < a < 1: exhaust every candidate complement of a
  const FinitePoset c = chain3();
  const int a = c.index_of("a");
  const int top = c.index_of("b");
  bool complement_found = false;
  for (int y = 0; y < c.size(); ++y) {
    if (c.meet(a, y) == c.bottom() && c.join(a, y) == top) {
      complement_found = true;
    }
  }
  CHECK(!complement_found);
  CHECK(!c.is_boolean_algebra());

  // M3: meets and joins exist but distributivity fails on the atoms
  const FinitePoset d = m3();
  const LatticeReport rep = d.lattice_report();
  CHECK(rep.is_lattice());
  const int x = d.index_of("x"), y = d.index_of("y"), z = d.index_of("z");
  CHECK(d.meet(x, *d.join(y, z)) !=
        d.join(*d.meet(x, y), *d.meet(x, z)));
  CHECK(!rep.distributive);
  CHECK(!d.is_boolean_algebra());
}

TEST_CASE("complements inside principal ideals") {
  const FinitePoset p = testing::boolean_algebra_poset(3);
  // complement of {0} inside the ideal of {0,1}: should be {1}
  const int x = p.index_of("s001");
  const int top = p.index_of("s003");
  const auto e = p.complement_in_ideal(x, top);
  REQUIRE(e.has_value());
  CHECK(p.name(*e) == "s002");
  // inside the chain ideal of a chain poset there is no complement
  const FinitePoset c = chain3();
  CHECK(!c.complement_in_ideal(c.index_of("a"), c.index_of("b")).has_value());
}

TEST_CASE("json round trip and rejection of broken relations") {
  const FinitePoset p = b2();
  const FinitePoset q = FinitePoset::from_json(p.to_json());
  CHECK(q.elements() == p.elements());
  CHECK(q.leq_table() == p.leq_table());
  CHECK(q.to_json() == p.to_json());

  nlohmann::json missing_reflexive = {
      {"elements", {"0", "a"}}, {"bottom", "0"},
      {"leq", {{"0", "0"}, {"0", "a"}}}};
  CHECK_THROWS_AS(FinitePoset::from_json(missing_reflexive), InputError);

  nlohmann::json antisym = {
      {"elements", {"0", "a", "b"}}, {"bottom", "0"},
      {"leq", {{"0", "0"}, {"a", "a"}, {"b", "b"}, {"0", "a"}, {"0", "b"},
               {"a", "b"}, {"b", "a"}}}};
  CHECK_THROWS_AS(FinitePoset::from_json(antisym), InputError);

  nlohmann::json not_transitive = {
      {"elements", {"0", "a", "b"}}, {"bottom", "0"},
      {"leq", {{"0", "0"}, {"a", "a"}, {"b", "b"}, {"0", "a"}, {"a", "b"}}}};
  CHECK_THROWS_AS(FinitePoset::from_json(not_transitive), InputError);

  nlohmann::json unknown = {
      {"elements", {"0"}}, {"bottom", "0"}, {"leq", {{"0", "w"}}}};
  CHECK_THROWS_AS(FinitePoset::from_json(unknown), InputError);
}

TEST_CASE("restriction to a principal ideal") {
  const FinitePoset p = testing::boolean_algebra_poset(3);
  const int top = p.index_of("s003");  // the ideal {0, s001, s002, s003}
  const int single[1] = {top};
  const auto ideal = p.downward_closure(single);
  const FinitePoset sub = p.restrict(ideal, p.bottom());
  CHECK(sub.size() == 4);
  CHECK(sub.is_boolean_algebra());
}

}  // TEST_SUITE
