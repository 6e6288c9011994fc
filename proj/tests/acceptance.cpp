// Acceptance suite: one pass/fail line per criterion, exit code equal to
// the number of failures. Each criterion is exhaustive at the stated sizes
// and uses exact comparisons throughout.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gstone/constructions.hpp"
#include "gstone/duality.hpp"
#include "gstone/field.hpp"
#include "gstone/invsemi.hpp"
#include "gstone/ring.hpp"
#include "helpers.hpp"

using namespace gstone;
using gstone::testing::int_graded_set;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<void(std::ostringstream&)>& body) {
  std::ostringstream log;
  bool pass = true;
  try {
    body(log);
  } catch (const std::exception& e) {
    log << "exception: " << e.what() << "; ";
    pass = false;
  }
  if (!log.str().empty()) pass = false;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
            << title;
  if (!pass) {
    ++failures;
    std::cout << " [" << log.str() << "]";
  }
  std::cout << "\n";
}

#define REQUIRE_OR_LOG(cond)                                    \
  do {                                                          \
    if (!(cond)) log << "failed: " << #cond << "; ";            \
  } while (0)

struct NamedSemigroup {
  std::string name;
  std::shared_ptr<const GradedInverseSemigroup> semigroup;
};

struct NamedGroupoid {
  std::string name;
  std::shared_ptr<const FiniteGradedGroupoid> groupoid;
};

FiniteGraph one_edge_graph() {
  FiniteGraph g;
  g.vertices = {"v", "w"};
  g.edges = {{"e", "v", "w"}};
  return g;
}

FiniteGraph path_graph() {
  FiniteGraph g;
  g.vertices = {"a", "b", "c"};
  g.edges = {{"e", "a", "b"}, {"f", "b", "c"}};
  return g;
}

FiniteGraph two_in_graph() {
  FiniteGraph g;
  g.vertices = {"u", "v", "w"};
  g.edges = {{"e", "u", "w"}, {"f", "v", "w"}};
  return g;
}

FiniteGraph three_in_star_graph() {
  FiniteGraph g;
  g.vertices = {"u", "v", "w", "z"};
  g.edges = {{"e", "u", "z"}, {"f", "v", "z"}, {"g", "w", "z"}};
  return g;
}

// the battery: semigroup instances for criteria 2, 4 and 5
std::vector<NamedSemigroup> semigroup_battery() {
  std::vector<NamedSemigroup> out;
  out.push_back({"igr-1pt",
                 graded_symmetric_inverse_monoid(int_graded_set({{"a", 5}}))
                     .semigroup});
  out.push_back({"igr-2pt",
                 graded_symmetric_inverse_monoid(
                     int_graded_set({{"a", 0}, {"b", 1}}))
                     .semigroup});
  out.push_back({"igr-3pt",
                 graded_symmetric_inverse_monoid(
                     int_graded_set({{"a", 0}, {"b", 1}, {"c", 1}}))
                     .semigroup});
  out.push_back({"igr-3pt-distinct",
                 graded_symmetric_inverse_monoid(
                     int_graded_set({{"a", 0}, {"b", 1}, {"c", 2}}))
                     .semigroup});
  out.push_back({"i2-trivial",
                 symmetric_inverse_monoid({"a", "b"}).semigroup});
  out.push_back({"i3-trivial",
                 symmetric_inverse_monoid({"a", "b", "c"}).semigroup});
  out.push_back({"igr-3pt-epsilon",
                 graded_symmetric_inverse_monoid(
                     int_graded_set({{"a", 0}, {"b", 1}, {"c", 1}}))
                     .semigroup->restrict_epsilon()
                     .semigroup});
  out.push_back(
      {"dgr-one-edge",
       distributive_completion(graph_inverse_semigroup(one_edge_graph()), true)
           .completion});
  out.push_back(
      {"dgr-path",
       distributive_completion(graph_inverse_semigroup(path_graph()), true)
           .completion});
  out.push_back(
      {"dgr-two-in",
       distributive_completion(graph_inverse_semigroup(two_in_graph()), true)
           .completion});
  out.push_back({"dgr-three-in-star",
                 distributive_completion(
                     graph_inverse_semigroup(three_in_star_graph()), true)
                     .completion});
  out.push_back({"z2-with-zero", testing::z2_with_zero()});
  out.push_back(
      {"slices-of-z2-groupoid",
       slice_semigroup(testing::z2_one_object_groupoid(), true).semigroup});
  return out;
}

std::vector<NamedGroupoid> groupoid_battery() {
  std::vector<NamedGroupoid> out;
  out.push_back({"pair-2pt-graded",
                 pair_groupoid(int_graded_set({{"a", 0}, {"b", 1}})).groupoid});
  out.push_back({"pair-2pt-trivial",
                 pair_groupoid(int_graded_set({{"a", 0}, {"b", 0}})).groupoid});
  out.push_back({"z2-one-object", testing::z2_one_object_groupoid()});
  out.push_back({"z2-one-object-trivial",
                 testing::z2_one_object_groupoid(true)});
  out.push_back({"klein-one-object", testing::klein_one_object_groupoid()});
  auto pg = pair_groupoid(int_graded_set({{"a", 0}, {"b", 1}})).groupoid;
  out.push_back({"pair-2pt-disjoint-double",
                 testing::disjoint_union(*pg, *pg)});
  return out;
}

}  // namespace

int main() {
  criterion(1, "canonical identification S^gr(X x X) = I^gr(X), |X| <= 3",
            [](std::ostringstream& log) {
    const std::vector<std::vector<std::pair<std::string, long long>>> sets = {
        {{"a", 5}},
        {{"a", 0}, {"b", 1}},
        {{"a", 3}, {"b", 3}},
        {{"a", 0}, {"b", 1}, {"c", 1}},
        {{"a", 0}, {"b", 1}, {"c", 2}},
    };
    for (const auto& pts : sets) {
      const GradedSet set = int_graded_set(pts);
      const auto sim = graded_symmetric_inverse_monoid(set);
      const auto pg = pair_groupoid(set);
      const SliceSemigroup sg = slice_semigroup(pg.groupoid, true);
      if (sg.semigroup->size() != sim.semigroup->size()) {
        log << "size mismatch on a " << pts.size() << "-point set; ";
        continue;
      }
      // the canonical map: slice member m contributes d(m) -> r(m)
      std::map<std::vector<std::pair<int, int>>, int> by_map;
      for (int i = 0; i < sim.semigroup->size(); ++i) {
        by_map[sim.maps[i]] = i;
      }
      std::vector<int> theta(sg.semigroup->size(), -1);
      bool total = true;
      for (int x = 0; x < sg.semigroup->size(); ++x) {
        std::vector<std::pair<int, int>> map;
        for (int m : sg.slice_of[x].members) {
          const auto [rx, dy] = pg.pair_of[m];
          map.emplace_back(dy, rx);
        }
        std::sort(map.begin(), map.end());
        auto it = by_map.find(map);
        if (it == by_map.end()) {
          total = false;
          break;
        }
        theta[x] = it->second;
      }
      REQUIRE_OR_LOG(total);
      if (!total) continue;
      std::set<int> image(theta.begin(), theta.end());
      REQUIRE_OR_LOG(static_cast<int>(image.size()) == sim.semigroup->size());
      REQUIRE_OR_LOG(theta[sg.semigroup->zero()] == sim.semigroup->zero());
      bool tables_equal = true;
      bool degrees_equal = true;
      for (int x = 0; x < sg.semigroup->size(); ++x) {
        if (x != sg.semigroup->zero() &&
            sg.semigroup->degree(x) != sim.semigroup->degree(theta[x])) {
          degrees_equal = false;
        }
        for (int y = 0; y < sg.semigroup->size(); ++y) {
          if (theta[sg.semigroup->mul(x, y)] !=
              sim.semigroup->mul(theta[x], theta[y])) {
            tables_equal = false;
          }
        }
      }
      REQUIRE_OR_LOG(tables_equal);
      REQUIRE_OR_LOG(degrees_equal);
    }
  });

  criterion(2, "duality roundtrips and functoriality on the battery",
            [](std::ostringstream& log) {
    int instances = 0;
    for (const auto& [name, s] : semigroup_battery()) {
      const RoundtripReport rep = check_roundtrip_sg(s);
      if (!rep.iso) log << name << ": " << rep.details.summary() << "; ";
      ++instances;
    }
    for (const auto& [name, g] : groupoid_battery()) {
      const RoundtripReport rep = check_roundtrip_gp(g);
      if (!rep.iso) log << name << ": " << rep.details.summary() << "; ";
      ++instances;
    }
    REQUIRE_OR_LOG(instances >= 10);

    // contravariant functoriality on composable pairs, both directions
    const auto sim = symmetric_inverse_monoid({"a", "b", "c"});
    const GrISMorphism f = testing::conjugation_automorphism(sim, {1, 0, 2});
    const GrISMorphism g = testing::conjugation_automorphism(sim, {0, 2, 1});
    const UltraGroupoid ug = ultrafilter_groupoid(sim.semigroup);
    REQUIRE_OR_LOG(dualize_sg_morphism(compose(g, f), ug, ug).map ==
                   compose(dualize_sg_morphism(f, ug, ug),
                           dualize_sg_morphism(g, ug, ug))
                       .map);
    auto pg = pair_groupoid(int_graded_set({{"a", 0}, {"b", 1}})).groupoid;
    auto gg = testing::disjoint_union(*pg, *pg);
    const GrGpMorphism incl = testing::union_inclusion(pg, gg);
    const GrGpMorphism fold = testing::union_fold(gg, pg);
    const SliceSemigroup sg_p = slice_semigroup(pg, true);
    const SliceSemigroup sg_gg = slice_semigroup(gg, true);
    REQUIRE_OR_LOG(dualize_gp_morphism(compose(fold, incl), sg_p, sg_p).map ==
                   compose(dualize_gp_morphism(incl, sg_p, sg_gg),
                           dualize_gp_morphism(fold, sg_gg, sg_p))
                       .map);

    // both naturality squares
    REQUIRE_OR_LOG(check_naturality_sg(f).ok());
    REQUIRE_OR_LOG(
        check_naturality_sg(dualize_gp_morphism(incl, sg_p, sg_gg)).ok());
    REQUIRE_OR_LOG(check_naturality_gp(fold).ok());
    REQUIRE_OR_LOG(check_naturality_gp(incl).ok());
  });

  criterion(3, "graded/non-graded Boolean dichotomy for I^gr on 3 points",
            [](std::ostringstream& log) {
    const auto graded = graded_symmetric_inverse_monoid(
        int_graded_set({{"a", 0}, {"b", 1}, {"c", 1}}));
    const auto& rep = graded.semigroup->graded_boolean_report();
    REQUIRE_OR_LOG(rep.graded == true);
    REQUIRE_OR_LOG(rep.nongraded == false);
    const auto trivial = symmetric_inverse_monoid({"a", "b", "c"});
    const auto& rep_t = trivial.semigroup->graded_boolean_report();
    REQUIRE_OR_LOG(rep_t.graded == true);
    REQUIRE_OR_LOG(rep_t.nongraded == true);
  });

  criterion(4, "lemma suite holds exhaustively on every battery instance",
            [](std::ostringstream& log) {
    for (const auto& [name, s] : semigroup_battery()) {
      const ValidationReport rep = run_lemma_suite(s);
      if (!rep.ok()) log << name << ": " << rep.summary() << "; ";
    }
    for (const auto& [name, g] : groupoid_battery()) {
      const ValidationReport rep =
          run_lemma_suite(slice_semigroup(g, true).semigroup);
      if (!rep.ok()) log << name << ": " << rep.summary() << "; ";
    }
  });

  criterion(5, "separativity of graded-Boolean instances and all quotients",
            [](std::ostringstream& log) {
    for (const auto& [name, s] : semigroup_battery()) {
      if (s->graded_boolean_report().graded && !s->is_separative()) {
        log << name << " is graded-Boolean but not separative; ";
      }
      if (!s->quotient_by_biarrow().semigroup->is_separative()) {
        log << name << " has a non-separative quotient; ";
      }
    }
    // valid but non-separative / non-graded-Boolean instances
    for (const auto& s :
         {graph_inverse_semigroup(one_edge_graph()),
          graph_inverse_semigroup(path_graph()),
          graph_inverse_semigroup(two_in_graph())}) {
      if (!s->quotient_by_biarrow().semigroup->is_separative()) {
        log << "a graph inverse semigroup has a non-separative quotient; ";
      }
    }
    if (!testing::idempotent_chain3()
             ->quotient_by_biarrow()
             .semigroup->is_separative()) {
      log << "the idempotent chain has a non-separative quotient; ";
    }
  });

  criterion(6, "ultrafilters equal principal filters at minimal elements",
            [](std::ostringstream& log) {
    std::vector<FinitePoset> posets;
    for (const auto& [name, s] : semigroup_battery()) {
      posets.push_back(s->natural_order());
    }
    posets.push_back(testing::chain_poset(200));
    posets.push_back(testing::boolean_algebra_poset(7));  // 128 elements
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 8; ++trial) {
      posets.push_back(
          testing::random_poset(rng, 20 + static_cast<int>(rng() % 181)));
    }
    for (const FinitePoset& p : posets) {
      if (p.size() > 200) {
        log << "poset over the stated bound; ";
        continue;
      }
      // oracle: principal up-sets at minimal nonzero elements, computed
      // from the relation table only
      std::set<std::vector<int>> expected;
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
        expected.insert(up);
      }
      std::set<std::vector<int>> actual;
      for (const Filter& f : p.ultrafilters()) actual.insert(f.members);
      if (actual != expected) {
        log << "ultrafilter mismatch on a poset of size " << p.size() << "; ";
      }
    }
  });

  criterion(7, "enveloping ring isomorphism over Q and F_2",
            [](std::ostringstream& log) {
    const std::vector<NamedGroupoid> instances = {
        {"pair-2pt-graded",
         pair_groupoid(int_graded_set({{"a", 0}, {"b", 1}})).groupoid},
        {"pair-3pt-graded",
         pair_groupoid(int_graded_set({{"a", 0}, {"b", 0}, {"c", 1}}))
             .groupoid},
        {"z2-one-object", testing::z2_one_object_groupoid()},
    };
    for (const Field& field : {Field::rationals(), Field::gf(2)}) {
      for (const auto& [name, g] : instances) {
        const PhiPsiReport rep = phi_psi_iso_check(field, g);
        if (!rep.iso) {
          log << name << " over " << field.name() << ": "
              << rep.details.summary() << "; ";
        }
        if (rep.dim_graded != rep.dim_nongraded) {
          log << name << " over " << field.name() << ": dims "
              << rep.dim_graded << " vs " << rep.dim_nongraded << "; ";
        }
      }
    }
    // dimension 4 for the trivially graded two-point pair groupoid, with
    // the independent saturated-relator rank
    const auto triv = pair_groupoid(int_graded_set({{"a", 0}, {"b", 0}}));
    const SliceSemigroup sg = slice_semigroup(triv.groupoid, false);
    EnvelopingRing r(sg.semigroup, Field::rationals(), false);
    REQUIRE_OR_LOG(r.dimension() == 4);
    REQUIRE_OR_LOG(r.algebra().dim() - r.relator_rank() == 4);
    {
      const auto& s = *sg.semigroup;
      const FinitePoset& p = s.natural_order();
      std::vector<int> basis;
      for (int x = 0; x < s.size(); ++x) {
        if (x != s.zero()) basis.push_back(x);
      }
      auto bidx = [&](int el) {
        return static_cast<int>(std::find(basis.begin(), basis.end(), el) -
                                basis.begin());
      };
      std::set<std::vector<long long>> seen;
      std::vector<std::vector<long long>> queue;
      for (int u : basis) {
        for (int v : basis) {
          if (u >= v || s.compatibility(u, v) != Compat::kOrthogonal) continue;
          const auto join = p.join(u, v);
          if (!join) continue;
          std::vector<long long> row(basis.size(), 0);
          row[bidx(u)] += 1;
          row[bidx(v)] += 1;
          if (*join != s.zero()) row[bidx(*join)] -= 1;
          if (seen.insert(row).second) queue.push_back(row);
        }
      }
      while (!queue.empty()) {
        const auto row = queue.back();
        queue.pop_back();
        for (int b : basis) {
          std::vector<long long> left(basis.size(), 0),
              right(basis.size(), 0);
          for (std::size_t i = 0; i < basis.size(); ++i) {
            if (row[i] == 0) continue;
            const int lb = s.mul(b, basis[i]);
            if (lb != s.zero()) left[bidx(lb)] += row[i];
            const int rb = s.mul(basis[i], b);
            if (rb != s.zero()) right[bidx(rb)] += row[i];
          }
          for (const auto& v : {left, right}) {
            if (seen.insert(v).second) queue.push_back(v);
          }
        }
      }
      std::vector<std::vector<long long>> rows(seen.begin(), seen.end());
      REQUIRE_OR_LOG(testing::bareiss_rank(rows) == 2);
      REQUIRE_OR_LOG(6 - testing::bareiss_rank(rows) == r.dimension());
    }
  });

  criterion(8, "counting cross-checks for I(X) and G(I^gr(X))",
            [](std::ostringstream& log) {
    std::vector<std::string> points;
    for (int n = 1; n <= 4; ++n) {
      points.push_back(std::string(1, static_cast<char>('a' + n - 1)));
      const auto sim = symmetric_inverse_monoid(points);
      if (static_cast<long long>(sim.semigroup->size()) !=
          testing::symmetric_inverse_monoid_size_oracle(n)) {
        log << "|I(" << n << ")| mismatch; ";
      }
    }
    const std::vector<std::vector<std::pair<std::string, long long>>> sets = {
        {{"a", 2}},
        {{"a", 0}, {"b", 1}},
        {{"a", 0}, {"b", 1}, {"c", 1}},
    };
    for (const auto& pts : sets) {
      const auto sim = graded_symmetric_inverse_monoid(int_graded_set(pts));
      const UltraGroupoid ug = ultrafilter_groupoid(sim.semigroup);
      if (ug.groupoid->size() != static_cast<int>(pts.size() * pts.size())) {
        log << "|G(I^gr)| mismatch on " << pts.size() << " points; ";
      }
    }
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures;
}
