#ifndef GSTONE_TESTS_HELPERS_HPP_
#define GSTONE_TESTS_HELPERS_HPP_

#include <cstdio>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gstone/constructions.hpp"
#include "gstone/grading.hpp"
#include "gstone/groupoid.hpp"
#include "gstone/invsemi.hpp"
#include "gstone/kernels.hpp"
#include "gstone/order_core.hpp"

namespace gstone::testing {

inline std::shared_ptr<const TableGroup> z2_group() {
  return std::make_shared<TableGroup>(
      std::vector<std::string>{"e", "g"},
      std::vector<std::vector<int>>{{0, 1}, {1, 0}}, "e");
}

inline GradedSet int_graded_set(
    std::vector<std::pair<std::string, long long>> pts) {
  auto group = std::make_shared<IntVectorGroup>(1);
  std::vector<std::pair<std::string, GroupElem>> out;
  for (auto& [name, deg] : pts) {
    out.emplace_back(name, GroupElem::vec({deg}));
  }
  return GradedSet::make(group, std::move(out));
}

// the zero semigroup {0}
inline std::shared_ptr<const GradedInverseSemigroup> zero_semigroup() {
  auto group = std::make_shared<IntVectorGroup>(1);
  return std::make_shared<GradedInverseSemigroup>(
      std::vector<std::string>{"0"}, "0",
      std::vector<std::vector<int>>{{0}}, std::vector<int>{0}, group,
      std::vector<GroupElem>{group->identity()});
}

// {0, e} with e idempotent, trivially graded
inline std::shared_ptr<const GradedInverseSemigroup> zero_plus_idempotent() {
  auto group = std::make_shared<IntVectorGroup>(1);
  return std::make_shared<GradedInverseSemigroup>(
      std::vector<std::string>{"0", "e"}, "0",
      std::vector<std::vector<int>>{{0, 0}, {0, 1}}, std::vector<int>{0, 1},
      group,
      std::vector<GroupElem>(2, group->identity()));
}

// chain of idempotents 0 < e < f (meet semilattice, ef = e)
inline std::shared_ptr<const GradedInverseSemigroup> idempotent_chain3() {
  auto group = std::make_shared<IntVectorGroup>(1);
  return std::make_shared<GradedInverseSemigroup>(
      std::vector<std::string>{"0", "e", "f"}, "0",
      std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},
      std::vector<int>{0, 1, 2}, group,
      std::vector<GroupElem>(3, group->identity()));
}

// Z/2 with a zero adjoined, graded by itself (no zero divisors)
inline std::shared_ptr<const GradedInverseSemigroup> z2_with_zero() {
  auto group = z2_group();
  return std::make_shared<GradedInverseSemigroup>(
      std::vector<std::string>{"0", "e", "g"}, "0",
      std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}},
      std::vector<int>{0, 1, 2}, group,
      std::vector<GroupElem>{group->identity(), group->identity(),
                             GroupElem::table(1)});
}

// one-object groupoid of the Klein four-group, graded by the identity map
inline std::shared_ptr<const FiniteGradedGroupoid> klein_one_object_groupoid() {
  auto group = std::make_shared<TableGroup>(
      std::vector<std::string>{"e", "a", "b", "c"},
      std::vector<std::vector<int>>{
          {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
      "e");
  std::vector<std::string> names{"e", "a", "b", "c"};
  std::vector<int> inv{0, 1, 2, 3};
  std::vector<std::vector<int>> comp;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      comp.push_back(
          {x, y, group->product(GroupElem::table(x), GroupElem::table(y))
                     .table_index()});
    }
  }
  std::vector<GroupElem> degrees;
  for (int x = 0; x < 4; ++x) degrees.push_back(GroupElem::table(x));
  return std::make_shared<FiniteGradedGroupoid>(
      names, std::vector<int>{0}, std::vector<int>{0, 0, 0, 0},
      std::vector<int>{0, 0, 0, 0}, comp, inv, group, degrees);
}

// one-object groupoid of the group Z/2, graded by the identity map
inline std::shared_ptr<const FiniteGradedGroupoid> z2_one_object_groupoid(
    bool trivially_graded = false) {
  auto group = z2_group();
  std::vector<GroupElem> degrees{group->identity(),
                                 trivially_graded ? group->identity()
                                                  : GroupElem::table(1)};
  return std::make_shared<FiniteGradedGroupoid>(
      std::vector<std::string>{"e", "g"}, std::vector<int>{0},
      std::vector<int>{0, 0}, std::vector<int>{0, 0},
      std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
      std::vector<int>{0, 1}, group, degrees);
}

// disjoint union G # H with morphism names suffixed
inline std::shared_ptr<const FiniteGradedGroupoid> disjoint_union(
    const FiniteGradedGroupoid& g, const FiniteGradedGroupoid& h) {
  std::vector<std::string> names;
  std::vector<int> objects, d, r, inv;
  std::vector<GroupElem> deg;
  std::vector<std::vector<int>> comp;
  const int off = g.size();
  for (int x = 0; x < g.size(); ++x) {
    names.push_back(g.name(x) + "#1");
    d.push_back(g.dmap(x));
    r.push_back(g.rmap(x));
    inv.push_back(g.inv(x));
    deg.push_back(g.degree(x));
  }
  for (int x = 0; x < h.size(); ++x) {
    names.push_back(h.name(x) + "#2");
    d.push_back(off + h.dmap(x));
    r.push_back(off + h.rmap(x));
    inv.push_back(off + h.inv(x));
    deg.push_back(h.degree(x));
  }
  for (int o : g.objects()) objects.push_back(o);
  for (int o : h.objects()) objects.push_back(off + o);
  for (int x = 0; x < g.size(); ++x) {
    for (int y = 0; y < g.size(); ++y) {
      if (g.comp(x, y) >= 0) comp.push_back({x, y, g.comp(x, y)});
    }
  }
  for (int x = 0; x < h.size(); ++x) {
    for (int y = 0; y < h.size(); ++y) {
      if (h.comp(x, y) >= 0) {
        comp.push_back({off + x, off + y, off + h.comp(x, y)});
      }
    }
  }
  return std::make_shared<FiniteGradedGroupoid>(
      names, objects, d, r, comp, inv, g.group(), deg);
}

// inclusion of G into G # G as the first summand
inline GrGpMorphism union_inclusion(
    std::shared_ptr<const FiniteGradedGroupoid> g,
    std::shared_ptr<const FiniteGradedGroupoid> gg) {
  GrGpMorphism f;
  f.source = std::move(g);
  f.target = gg;
  for (int x = 0; x < f.source->size(); ++x) {
    f.map.push_back(gg->index_of(f.source->name(x) + "#1"));
  }
  return f;
}

// fold G # G -> G
inline GrGpMorphism union_fold(std::shared_ptr<const FiniteGradedGroupoid> gg,
                               std::shared_ptr<const FiniteGradedGroupoid> g) {
  GrGpMorphism f;
  f.source = gg;
  f.target = std::move(g);
  for (int x = 0; x < gg->size(); ++x) {
    std::string base = gg->name(x);
    base.resize(base.size() - 2);  // strip the #k suffix
    f.map.push_back(f.target->index_of(base));
  }
  return f;
}

// conjugation automorphism of a symmetric inverse monoid by a
// degree-preserving permutation of the points (given by point indices)
inline GrISMorphism conjugation_automorphism(const SymmetricInverseMonoid& sim,
                                             const std::vector<int>& perm) {
  GrISMorphism f;
  f.source = sim.semigroup;
  f.target = sim.semigroup;
  std::map<std::vector<std::pair<int, int>>, int> index;
  for (int i = 0; i < sim.semigroup->size(); ++i) index[sim.maps[i]] = i;
  for (int i = 0; i < sim.semigroup->size(); ++i) {
    std::vector<std::pair<int, int>> image;
    for (const auto& [x, y] : sim.maps[i]) {
      image.emplace_back(perm[x], perm[y]);
    }
    std::sort(image.begin(), image.end());
    f.map.push_back(index.at(image));
  }
  return f;
}

// random poset via the reachability closure of a random DAG on sorted names,
// with element 0 forced to be the bottom
inline FinitePoset random_poset(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 3);
  kernels::LeqTable leq(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int a, int b) -> kernels::LeqTable::reference {
    return leq[static_cast<std::size_t>(a) * n + b];
  };
  for (int a = 0; a < n; ++a) at(a, a) = 1;
  for (int a = 1; a < n; ++a) {
    at(0, a) = 1;
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng) == 0) at(a, b) = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      if (!at(a, k)) continue;
      for (int b = 0; b < n; ++b) {
        if (at(k, b)) at(a, b) = 1;
      }
    }
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%03d", i);
    names.push_back(buf);
  }
  return FinitePoset(names, leq, names[0]);
}

// n-chain e000 < e001 < ... with e000 the bottom
inline FinitePoset chain_poset(int n) {
  kernels::LeqTable leq(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) leq[static_cast<std::size_t>(a) * n + b] = 1;
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%03d", i);
    names.push_back(buf);
  }
  return FinitePoset(names, leq, names[0]);
}

// Boolean algebra 2^k as subsets of {0..k-1} ordered by inclusion
inline FinitePoset boolean_algebra_poset(int k) {
  const int n = 1 << k;
  kernels::LeqTable leq(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((a & b) == a) leq[static_cast<std::size_t>(a) * n + b] = 1;
    }
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "s%03d", i);
    names.push_back(buf);
  }
  return FinitePoset(names, leq, names[0]);
}

// |I(n)| by the combinatorial formula, the empty map included
inline long long symmetric_inverse_monoid_size_oracle(int n) {
  auto binom = [](int a, int b) {
    long long out = 1;
    for (int i = 0; i < b; ++i) out = out * (a - i) / (i + 1);
    return out;
  };
  long long total = 0;
  long long factorial = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    total += binom(n, k) * binom(n, k) * factorial;
  }
  return total;
}

// integer matrix rank by fraction-free (Bareiss) elimination; an
// independent route for relator-rank oracles
inline int bareiss_rank(std::vector<std::vector<long long>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace gstone::testing

#endif  // GSTONE_TESTS_HELPERS_HPP_
