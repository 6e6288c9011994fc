#ifndef GSTONE_CONSTRUCTIONS_HPP_
#define GSTONE_CONSTRUCTIONS_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gstone/grading.hpp"
#include "gstone/groupoid.hpp"
#include "gstone/invsemi.hpp"
#include "json.hpp"

namespace gstone {

// A finite set with a degree map into the grading group.
struct GradedSet {
  std::shared_ptr<const GradedGroup> group;
  std::vector<std::string> points;  // sorted
  std::vector<GroupElem> degree;    // aligned with points

  static GradedSet make(std::shared_ptr<const GradedGroup> group,
                        std::vector<std::pair<std::string, GroupElem>> pts);
  static GradedSet from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  bool trivial_grading() const;
};

struct FiniteGraph {
  struct Edge {
    std::string name, src, rng;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  static FiniteGraph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// I(X) / I^gr(X): all (homogeneous) partial bijections of the point set,
// with the empty map as zero. `maps` retains the underlying partial
// bijection of each element, sorted by domain point.
struct SymmetricInverseMonoid {
  std::shared_ptr<const GradedInverseSemigroup> semigroup;
  GradedSet set;
  std::vector<std::vector<std::pair<int, int>>> maps;
};

SymmetricInverseMonoid symmetric_inverse_monoid(
    std::vector<std::string> points, std::size_t max_points = 5);
SymmetricInverseMonoid graded_symmetric_inverse_monoid(
    const GradedSet& set, std::size_t max_points = 5);

// The pair groupoid X x X with d((x,y)) = y, r((x,y)) = x,
// (x,y)(y,z) = (x,z) and degree (x,y) -> deg(x)^-1 deg(y).
struct PairGroupoid {
  std::shared_ptr<const FiniteGradedGroupoid> groupoid;
  GradedSet set;
  std::vector<std::pair<int, int>> pair_of;  // morphism -> (x, y)
};

PairGroupoid pair_groupoid(const GradedSet& set);

// The graph inverse semigroup of an acyclic graph: elements p q* over paths
// with a common range vertex, Z-graded by deg(p q*) = |p| - |q|.
std::shared_ptr<const GradedInverseSemigroup> graph_inverse_semigroup(
    const FiniteGraph& graph,
    std::size_t max_elements = GradedInverseSemigroup::kDefaultMaxElements);

// FC^gr(S): homogeneous finitely generated compatible order ideals of S
// under subset multiplication. In the finite case every ideal is finitely
// generated, by its maximal elements.
struct IdealSemigroup {
  std::shared_ptr<const GradedInverseSemigroup> semigroup;
  std::shared_ptr<const GradedInverseSemigroup> base;
  std::vector<std::vector<int>> members_of;  // element -> base element set
};

IdealSemigroup fc_gr(std::shared_ptr<const GradedInverseSemigroup> s,
                     std::size_t guard = 20000);

// D^gr(S) = FC^gr(S/<->)/== (or D(S) with graded=false). The == relation is
// computed from ideal membership, so it does not depend on chosen
// generating sets. pre_boolean records whether D(S) passed the non-graded
// Boolean check.
struct CompletionResult {
  std::shared_ptr<const GradedInverseSemigroup> completion;
  std::shared_ptr<const GradedInverseSemigroup> separative_quotient;
  std::vector<int> quotient_class_of;  // S element -> quotient element
  std::vector<std::vector<int>> representative_ideal;  // over the quotient
  bool pre_boolean = false;
};

CompletionResult distributive_completion(
    std::shared_ptr<const GradedInverseSemigroup> s, bool graded,
    std::size_t guard = 20000);

}  // namespace gstone

#endif  // GSTONE_CONSTRUCTIONS_HPP_
