#ifndef GSTONE_INVSEMI_HPP_
#define GSTONE_INVSEMI_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gstone/grading.hpp"
#include "gstone/order_core.hpp"
#include "gstone/validation.hpp"
#include "json.hpp"

namespace gstone {

enum class Compat {
  kIncompatible,
  kCompatible,  // both s^-1 t and s t^-1 idempotent, not both zero
  kOrthogonal,  // s^-1 t = 0 = s t^-1; orthogonal pairs are compatible
};

inline bool is_compatible(Compat c) { return c != Compat::kIncompatible; }

struct GradedBooleanReport {
  bool meets_ok = false;   // every pair has a meet
  bool graded = false;     // graded-Boolean verdict
  bool nongraded = false;  // Boolean verdict (all compatible subsets)
  ValidationReport details;
};

class GradedInverseSemigroup;

struct QuotientResult {
  std::shared_ptr<const GradedInverseSemigroup> semigroup;
  std::vector<int> class_of;  // parent element -> quotient element
};

struct SubsemigroupResult {
  std::shared_ptr<const GradedInverseSemigroup> semigroup;
  std::vector<int> parent_of;  // sub element -> parent element
};

// A finite graded inverse semigroup with zero, stored by total Cayley
// table. Elements are renamed to canonical sorted order on construction;
// the axioms themselves are checked by validate(), not the constructor, so
// that broken tables can be loaded and reported on.
class GradedInverseSemigroup {
 public:
  GradedInverseSemigroup(std::vector<std::string> names,
                         const std::string& zero,
                         const std::vector<std::vector<int>>& mul,
                         const std::vector<int>& inv,
                         std::shared_ptr<const GradedGroup> group,
                         const std::vector<GroupElem>& degrees);

  static std::shared_ptr<const GradedInverseSemigroup> from_json(
      const nlohmann::json& j, std::size_t max_elements = kDefaultMaxElements);
  nlohmann::json to_json() const;

  static constexpr std::size_t kDefaultMaxElements = 512;

  int size() const { return n_; }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index_of(const std::string& name) const;
  int zero() const { return zero_; }
  int mul(int a, int b) const {
    return mul_[static_cast<std::size_t>(a) * n_ + b];
  }
  int inv(int a) const { return inv_.at(a); }
  const std::shared_ptr<const GradedGroup>& group() const { return group_; }
  // Degree of a nonzero element; the zero carries none.
  const GroupElem& degree(int a) const;
  std::string degree_name(int a) const { return group_->render(degree(a)); }
  bool is_idempotent(int a) const { return mul(a, a) == a; }
  const std::vector<int>& idempotents() const { return idempotents_; }
  bool trivially_graded() const;

  // Full axiom scan: associativity, absorbing zero, existence/uniqueness of
  // inverses, commuting idempotents, the grading laws.
  ValidationReport validate(std::size_t max_witnesses = 64) const;

  // Natural partial order s <= t iff s = t u, u idempotent, as a poset with
  // the zero as bottom. Cached; throws InputError if the table does not
  // induce a poset (i.e. the input was not a valid inverse semigroup).
  const FinitePoset& natural_order() const;

  Compat compatibility(int s, int t) const;
  std::optional<int> meet(int s, int t) const;

  // Least upper bound of a nonempty pairwise-compatible set whose nonzero
  // members share one degree; PreconditionError if the set is not of that
  // shape, nullopt if the join does not exist.
  std::optional<int> join_compatible(std::span<const int> subset) const;

  // Both Boolean verdicts. Join existence and distributivity are scanned
  // over compatible subsets of size <= 3; pairwise joins are folded to
  // cover larger sets.
  const GradedBooleanReport& graded_boolean_report() const;

  // t \ s for s <= t in a graded-Boolean semigroup: the complement e of
  // s^-1 s inside the ideal of t^-1 t in E(S), times t.
  int relative_complement(int s, int t) const;

  bool arrow(int s, int t) const;  // s -> t
  bool is_separative() const;

  QuotientResult quotient_by_biarrow() const;
  SubsemigroupResult restrict_epsilon() const;

  // Poset of idempotents with zero as bottom (sub-poset of natural_order).
  const FinitePoset& idempotent_order() const;
  int idempotent_poset_index(int element) const;  // element -> E-poset index

 private:
  const std::vector<std::uint8_t>& arrow_table() const;

  int n_;
  std::vector<std::string> names_;
  int zero_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::shared_ptr<const GradedGroup> group_;
  std::vector<GroupElem> deg_;
  std::vector<int> idempotents_;

  mutable std::once_flag order_once_, eorder_once_, arrow_once_, bool_once_;
  mutable std::unique_ptr<FinitePoset> order_;
  mutable std::unique_ptr<FinitePoset> eorder_;
  mutable std::vector<int> eorder_index_;
  mutable std::vector<std::uint8_t> arrow_;
  mutable std::unique_ptr<GradedBooleanReport> bool_report_;
};

struct GrISMorphism {
  std::shared_ptr<const GradedInverseSemigroup> source;
  std::shared_ptr<const GradedInverseSemigroup> target;
  std::vector<int> map;  // source index -> target index
};

GrISMorphism identity_gris_morphism(
    std::shared_ptr<const GradedInverseSemigroup> s);
// g after f (f first).
GrISMorphism compose(const GrISMorphism& g, const GrISMorphism& f);

// Checks the morphism conditions: multiplicative, zero- and
// degree-preserving, meet-preserving, proper (ultrafilter preimages are
// ultrafilters), lattice homomorphism on idempotents preserving complements
// in principal order ideals. Join preservation is reported as a note only.
ValidationReport validate_gris_morphism(const GrISMorphism& f);

}  // namespace gstone

#endif  // GSTONE_INVSEMI_HPP_
