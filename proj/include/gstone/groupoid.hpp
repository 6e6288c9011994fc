#ifndef GSTONE_GROUPOID_HPP_
#define GSTONE_GROUPOID_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gstone/grading.hpp"
#include "gstone/validation.hpp"
#include "json.hpp"

namespace gstone {

// A subset of groupoid morphisms on which the domain and range maps are
// injective. Homogeneous when all member degrees agree; the empty slice is
// homogeneous by convention with no degree.
struct Slice {
  std::vector<int> members;  // sorted morphism indices
  std::optional<GroupElem> homogeneous_degree;

  friend bool operator==(const Slice& a, const Slice& b) {
    return a.members == b.members;
  }
  friend auto operator<=>(const Slice& a, const Slice& b) {
    return a.members <=> b.members;
  }
};

// A finite graded groupoid with discrete topology, given by explicit
// domain/range/composition/inverse tables. As with semigroups, construction
// only checks well-formedness; validate() scans the axioms.
class FiniteGradedGroupoid {
 public:
  FiniteGradedGroupoid(std::vector<std::string> names,
                       std::vector<int> objects,
                       std::vector<int> dmap, std::vector<int> rmap,
                       const std::vector<std::vector<int>>& comp_triples,
                       std::vector<int> inv,
                       std::shared_ptr<const GradedGroup> group,
                       std::vector<GroupElem> degrees);

  static std::shared_ptr<const FiniteGradedGroupoid> from_json(
      const nlohmann::json& j);
  nlohmann::json to_json() const;
  std::string to_dot() const;

  static constexpr std::size_t kDefaultSliceGuard = 20000;

  int size() const { return n_; }
  const std::vector<std::string>& morphisms() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index_of(const std::string& name) const;
  const std::vector<int>& objects() const { return objects_; }
  bool is_object(int x) const { return is_object_.at(x) != 0; }
  int dmap(int x) const { return d_.at(x); }
  int rmap(int x) const { return r_.at(x); }
  // Composite x*y, or -1 when d(x) != r(y).
  int comp(int x, int y) const {
    return comp_[static_cast<std::size_t>(x) * n_ + y];
  }
  int inv(int x) const { return inv_.at(x); }
  const std::shared_ptr<const GradedGroup>& group() const { return group_; }
  const GroupElem& degree(int x) const { return deg_.at(x); }

  ValidationReport validate() const;

  bool is_slice(std::span<const int> subset) const;
  // Degree when all member degrees agree; nullopt for the empty slice and
  // for inhomogeneous subsets (distinguish with is_homogeneous).
  std::optional<GroupElem> homogeneous_degree_of(
      std::span<const int> subset) const;
  bool is_homogeneous(std::span<const int> subset) const;

  Slice make_slice(std::vector<int> members) const;  // PreconditionError
  Slice slice_product(const Slice& x, const Slice& y) const;
  Slice slice_inverse(const Slice& x) const;

  // All slices (homogeneous ones only, if requested), canonically ordered
  // by member vector. ResourceError once the count would exceed `guard`.
  std::vector<Slice> enumerate_slices(bool homogeneous_only,
                                      std::size_t guard = kDefaultSliceGuard)
      const;

 private:
  int n_;
  std::vector<std::string> names_;
  std::vector<int> objects_;
  std::vector<std::uint8_t> is_object_;
  std::vector<int> d_, r_;
  std::vector<int> comp_;
  std::vector<int> inv_;
  std::shared_ptr<const GradedGroup> group_;
  std::vector<GroupElem> deg_;
};

struct GrGpMorphism {
  std::shared_ptr<const FiniteGradedGroupoid> source;
  std::shared_ptr<const FiniteGradedGroupoid> target;
  std::vector<int> map;  // morphism index -> morphism index
};

GrGpMorphism identity_grgp_morphism(
    std::shared_ptr<const FiniteGradedGroupoid> g);
GrGpMorphism compose(const GrGpMorphism& g, const GrGpMorphism& f);

// Functoriality, degree preservation, star-injectivity and
// star-surjectivity. Continuity and properness hold automatically for
// finite discrete groupoids and are recorded as notes.
ValidationReport validate_grgp_morphism(const GrGpMorphism& f);

}  // namespace gstone

#endif  // GSTONE_GROUPOID_HPP_
