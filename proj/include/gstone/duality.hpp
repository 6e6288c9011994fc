#ifndef GSTONE_DUALITY_HPP_
#define GSTONE_DUALITY_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gstone/constructions.hpp"
#include "gstone/groupoid.hpp"
#include "gstone/invsemi.hpp"
#include "gstone/validation.hpp"
#include "json.hpp"

namespace gstone {

// G(S): the groupoid of ultrafilters of the natural partial order, with
// X * Y = (XY)^up defined when X^-1 X = Y Y^-1. Ultrafilters are named by
// their minimum element; the full member sets are retained for the
// lemma-level tests.
struct UltraGroupoid {
  std::shared_ptr<const GradedInverseSemigroup> semigroup;
  std::shared_ptr<const FiniteGradedGroupoid> groupoid;
  std::vector<std::vector<int>> members;  // morphism -> sorted element set
  std::vector<int> minimum;               // morphism -> least member
  std::map<std::vector<int>, int> index_of_members;
  ValidationReport report;  // warnings and construction self-checks
};

UltraGroupoid ultrafilter_groupoid(
    std::shared_ptr<const GradedInverseSemigroup> s);

// Y_s: the set of ultrafilters containing s, as a slice of G(S).
Slice y_slice(const UltraGroupoid& ug, int s);

// S^gr(G) (or S(G) with graded=false, carrying the trivial grading): the
// slice semigroup under slice product, with the empty slice as zero.
struct SliceSemigroup {
  std::shared_ptr<const FiniteGradedGroupoid> groupoid;
  std::shared_ptr<const GradedInverseSemigroup> semigroup;
  bool graded = true;
  std::vector<Slice> slice_of;                 // element -> slice
  std::map<std::vector<int>, int> element_of;  // slice members -> element
};

SliceSemigroup slice_semigroup(
    std::shared_ptr<const FiniteGradedGroupoid> g, bool graded,
    std::size_t guard = FiniteGradedGroupoid::kDefaultSliceGuard);

// Action of the functors on morphisms: full preimages.
GrGpMorphism dualize_sg_morphism(const GrISMorphism& f,
                                 const UltraGroupoid& dual_source,
                                 const UltraGroupoid& dual_target);
GrISMorphism dualize_gp_morphism(const GrGpMorphism& f,
                                 const SliceSemigroup& dual_source,
                                 const SliceSemigroup& dual_target);

// The natural isomorphisms: mu_G : G -> G(S^gr(G)), x -> X_x, and
// nu_S : S -> S^gr(G(S)), s -> Y_s.
GrGpMorphism mu(const SliceSemigroup& sg, const UltraGroupoid& gsg);
GrISMorphism nu(const UltraGroupoid& ug, const SliceSemigroup& ssg);

struct RoundtripReport {
  std::string direction;
  bool iso = false;
  ValidationReport details;
  nlohmann::json witness;

  nlohmann::json to_json(const std::string& instance) const {
    return {{"instance", instance},
            {"direction", direction},
            {"iso", iso},
            {"witness", witness}};
  }
};

RoundtripReport check_roundtrip_sg(
    std::shared_ptr<const GradedInverseSemigroup> s,
    std::size_t guard = FiniteGradedGroupoid::kDefaultSliceGuard);
RoundtripReport check_roundtrip_gp(
    std::shared_ptr<const FiniteGradedGroupoid> g,
    std::size_t guard = FiniteGradedGroupoid::kDefaultSliceGuard);

// Naturality squares nu_T . f = S^gr(G(f)) . nu_S and
// mu_H . f = G(S^gr(f)) . mu_G for supplied morphisms.
ValidationReport check_naturality_sg(
    const GrISMorphism& f,
    std::size_t guard = FiniteGradedGroupoid::kDefaultSliceGuard);
ValidationReport check_naturality_gp(
    const GrGpMorphism& f,
    std::size_t guard = FiniteGradedGroupoid::kDefaultSliceGuard);

// Exhaustive check of the quantified lemma-level properties on one
// instance: filter degree constancy, relative complements, ultrafilter
// primality, the (sX)^up translation lemma, the Y_s slice identities, the
// homogeneous-slice decomposition, and the identity-component groupoid
// comparison. Graded-Boolean-only items are skipped (with a note) when the
// instance is not graded-Boolean.
ValidationReport run_lemma_suite(
    std::shared_ptr<const GradedInverseSemigroup> s,
    std::size_t guard = FiniteGradedGroupoid::kDefaultSliceGuard);

}  // namespace gstone

#endif  // GSTONE_DUALITY_HPP_
