#ifndef GSTONE_RING_HPP_
#define GSTONE_RING_HPP_

#include <memory>
#include <string>
#include <vector>

#include "gstone/duality.hpp"
#include "gstone/field.hpp"
#include "gstone/invsemi.hpp"
#include "gstone/validation.hpp"
#include "json.hpp"

namespace gstone {

// The contracted semigroup algebra F[S]: basis indexed by the nonzero
// elements, multiplication lifted bilinearly from the Cayley table with the
// semigroup zero identified with the algebra zero.
class SemigroupAlgebra {
 public:
  SemigroupAlgebra(std::shared_ptr<const GradedInverseSemigroup> s,
                   Field field);

  int dim() const { return static_cast<int>(basis_to_elem_.size()); }
  const Field& field() const { return field_; }
  const GradedInverseSemigroup& semigroup() const { return *s_; }
  const std::shared_ptr<const GradedInverseSemigroup>& semigroup_ptr() const {
    return s_;
  }

  int basis_of(int element) const;   // element (nonzero) -> basis index
  int element_of(int basis) const { return basis_to_elem_.at(basis); }
  Vec basis_vec(int element) const;
  Vec zero_vec() const { return Vec(dim(), field_.zero()); }
  Vec mul(const Vec& a, const Vec& b) const;

 private:
  std::shared_ptr<const GradedInverseSemigroup> s_;
  Field field_;
  std::vector<int> basis_to_elem_, elem_to_basis_;
};

// The enveloping ring F<S>: the quotient of F[S] by the orthogonal-join
// relators u + v - (u join v), saturated to a two-sided ideal by
// single-sided multiplication with basis elements. With graded=true the
// relator pairs range over orthogonal same-degree pairs and S must be
// graded-Boolean; with graded=false over all orthogonal pairs and S must
// pass the non-graded Boolean check. compatible_relators widens the pair
// filter from orthogonal to compatible; its output is informational.
class EnvelopingRing {
 public:
  EnvelopingRing(std::shared_ptr<const GradedInverseSemigroup> s, Field field,
                 bool graded, bool compatible_relators = false);

  const SemigroupAlgebra& algebra() const { return alg_; }
  bool graded() const { return graded_; }
  int dimension() const { return alg_.dim() - ideal_.rank(); }
  int relator_rank() const { return ideal_.rank(); }
  const RowSpace& ideal() const { return ideal_; }

  Vec normal_form(Vec v) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec image_of_element(int element) const;  // normal form of a basis vector
  bool is_zero(const Vec& v) const;

 private:
  SemigroupAlgebra alg_;
  bool graded_;
  RowSpace ideal_;
};

struct PhiPsiReport {
  int dim_nongraded = -1;
  int dim_graded = -1;
  bool iso = false;
  std::string field;
  ValidationReport details;

  nlohmann::json to_json() const {
    return {{"dim_nongraded", dim_nongraded},
            {"dim_graded", dim_graded},
            {"iso", iso},
            {"field", field}};
  }
};

// Builds both enveloping rings of a graded groupoid, the inclusion-induced
// map phi : F<S^gr(G)> -> F<S(G)> and the degree-splitting map psi in the
// other direction, and verifies that they are well defined, multiplicative
// and mutually inverse.
PhiPsiReport phi_psi_iso_check(
    Field field, std::shared_ptr<const FiniteGradedGroupoid> g,
    std::size_t guard = FiniteGradedGroupoid::kDefaultSliceGuard,
    bool compatible_relators = false);

}  // namespace gstone

#endif  // GSTONE_RING_HPP_
