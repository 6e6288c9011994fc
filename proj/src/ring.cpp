#include "gstone/ring.hpp"

#include <map>

#include "gstone/errors.hpp"

namespace gstone {

SemigroupAlgebra::SemigroupAlgebra(
    std::shared_ptr<const GradedInverseSemigroup> s, Field field)
    : s_(std::move(s)), field_(field) {
  elem_to_basis_.assign(s_->size(), -1);
  for (int i = 0; i < s_->size(); ++i) {
    if (i == s_->zero()) continue;
    elem_to_basis_[i] = static_cast<int>(basis_to_elem_.size());
    basis_to_elem_.push_back(i);
  }
}

int SemigroupAlgebra::basis_of(int element) const {
  const int b = elem_to_basis_.at(element);
  if (b < 0) {
    throw InputError("algebra: the semigroup zero is not a basis element");
  }
  return b;
}

Vec SemigroupAlgebra::basis_vec(int element) const {
  Vec v = zero_vec();
  v[basis_of(element)] = field_.one();
  return v;
}

Vec SemigroupAlgebra::mul(const Vec& a, const Vec& b) const {
  if (static_cast<int>(a.size()) != dim() ||
      static_cast<int>(b.size()) != dim()) {
    throw InputError("algebra: vector has the wrong dimension");
  }
  Vec out = zero_vec();
  for (int i = 0; i < dim(); ++i) {
    if (field_.is_zero(a[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      if (field_.is_zero(b[j])) continue;
      const int prod = s_->mul(basis_to_elem_[i], basis_to_elem_[j]);
      if (prod == s_->zero()) continue;
      const int k = elem_to_basis_[prod];
      out[k] = field_.add(out[k], field_.mul(a[i], b[j]));
    }
  }
  return out;
}

EnvelopingRing::EnvelopingRing(std::shared_ptr<const GradedInverseSemigroup> s,
                               Field field, bool graded,
                               bool compatible_relators)
    : alg_(s, field), graded_(graded), ideal_(field, alg_.dim()) {
  const auto& sg = alg_.semigroup();
  const auto& gb = sg.graded_boolean_report();
  if (graded && !gb.graded) {
    throw PreconditionError(
        "enveloping ring: the semigroup is not graded-Boolean");
  }
  if (!graded && !gb.nongraded) {
    throw PreconditionError("enveloping ring: the semigroup is not Boolean");
  }
  const FinitePoset& p = sg.natural_order();

  // relators u + v - (u join v) over the selected pairs
  std::vector<Vec> relators;
  for (int u = 0; u < sg.size(); ++u) {
    if (u == sg.zero()) continue;
    for (int v = u + 1; v < sg.size(); ++v) {
      if (v == sg.zero()) continue;
      const Compat c = sg.compatibility(u, v);
      const bool wanted = compatible_relators ? is_compatible(c)
                                              : c == Compat::kOrthogonal;
      if (!wanted) continue;
      if (graded && sg.degree(u) != sg.degree(v)) continue;
      const auto join = p.join(u, v);
      if (!join) {
        throw PreconditionError("enveloping ring: missing join of '" +
                                sg.name(u) + "' and '" + sg.name(v) + "'");
      }
      Vec r = alg_.zero_vec();
      const int bu = alg_.basis_of(u);
      const int bv = alg_.basis_of(v);
      r[bu] = field.add(r[bu], field.one());
      r[bv] = field.add(r[bv], field.one());
      if (*join != sg.zero()) {
        const int bj = alg_.basis_of(*join);
        r[bj] = field.sub(r[bj], field.one());
      }
      relators.push_back(std::move(r));
    }
  }
  for (Vec& r : relators) ideal_.insert(std::move(r));

  // saturate under single-sided multiplication by basis elements until the
  // span is a two-sided ideal; the ambient space is finite dimensional, so
  // this terminates
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Vec> snapshot = ideal_.rows();
    for (const Vec& row : snapshot) {
      for (int b = 0; b < alg_.dim(); ++b) {
        const Vec e = alg_.basis_vec(alg_.element_of(b));
        if (ideal_.insert(alg_.mul(e, row))) grew = true;
        if (ideal_.insert(alg_.mul(row, e))) grew = true;
      }
    }
  }
}

Vec EnvelopingRing::normal_form(Vec v) const {
  ideal_.reduce(v);
  return v;
}

Vec EnvelopingRing::mul(const Vec& a, const Vec& b) const {
  return normal_form(alg_.mul(a, b));
}

Vec EnvelopingRing::image_of_element(int element) const {
  return normal_form(alg_.basis_vec(element));
}

bool EnvelopingRing::is_zero(const Vec& v) const {
  Vec w = v;
  ideal_.reduce(w);
  for (const auto& x : w) {
    if (!alg_.field().is_zero(x)) return false;
  }
  return true;
}

PhiPsiReport phi_psi_iso_check(Field field,
                               std::shared_ptr<const FiniteGradedGroupoid> g,
                               std::size_t guard, bool compatible_relators) {
  PhiPsiReport rep;
  rep.field = field.name();

  SliceSemigroup sgr = slice_semigroup(g, true, guard);
  SliceSemigroup sng = slice_semigroup(g, false, guard);
  EnvelopingRing rg(sgr.semigroup, field, true, compatible_relators);
  EnvelopingRing rn(sng.semigroup, field, false, compatible_relators);
  rep.dim_graded = rg.dimension();
  rep.dim_nongraded = rn.dimension();

  const auto& ssg = *sgr.semigroup;
  const auto& ssn = *sng.semigroup;

  // phi on basis vectors: a homogeneous slice viewed inside S(G)
  std::vector<int> phi_elem(ssg.size(), -1);
  for (int x = 0; x < ssg.size(); ++x) {
    phi_elem[x] = sng.element_of.at(sgr.slice_of[x].members);
  }
  auto phi = [&](const Vec& v) {
    Vec out = rn.algebra().zero_vec();
    for (int b = 0; b < rg.algebra().dim(); ++b) {
      if (field.is_zero(v[b])) continue;
      const int e = phi_elem[rg.algebra().element_of(b)];
      const int nb = rn.algebra().basis_of(e);
      out[nb] = field.add(out[nb], v[b]);
    }
    return out;
  };
  // psi on basis vectors: split a slice into its homogeneous components
  auto psi = [&](const Vec& v) {
    Vec out = rg.algebra().zero_vec();
    for (int b = 0; b < rn.algebra().dim(); ++b) {
      if (field.is_zero(v[b])) continue;
      const auto& members = sng.slice_of[rn.algebra().element_of(b)].members;
      std::map<GroupElem, std::vector<int>> split;
      for (int m : members) split[g->degree(m)].push_back(m);
      for (const auto& [deg, component] : split) {
        const int e = sgr.element_of.at(component);
        const int gb = rg.algebra().basis_of(e);
        out[gb] = field.add(out[gb], v[b]);
      }
    }
    return out;
  };

  // well-definedness: each map sends the relator ideal into the other ideal
  for (const Vec& row : rg.ideal().rows()) {
    if (!rn.is_zero(phi(row))) {
      rep.details.add("phi-well-defined", {});
      break;
    }
  }
  for (const Vec& row : rn.ideal().rows()) {
    if (!rg.is_zero(psi(row))) {
      rep.details.add("psi-well-defined", {});
      break;
    }
  }

  // multiplicativity on pairs of basis images
  for (int x = 0; x < ssg.size() && rep.details.ok(); ++x) {
    if (x == ssg.zero()) continue;
    for (int y = 0; y < ssg.size(); ++y) {
      if (y == ssg.zero()) continue;
      const Vec lhs = rn.mul(phi(rg.algebra().basis_vec(x)),
                             phi(rg.algebra().basis_vec(y)));
      const int xy = ssg.mul(x, y);
      const Vec rhs = xy == ssg.zero()
                          ? rn.normal_form(rn.algebra().zero_vec())
                          : rn.normal_form(phi(rg.algebra().basis_vec(xy)));
      if (lhs != rhs) {
        rep.details.add("phi-multiplicative", {ssg.name(x), ssg.name(y)});
        break;
      }
    }
  }
  for (int x = 0; x < ssn.size() && rep.details.ok(); ++x) {
    if (x == ssn.zero()) continue;
    for (int y = 0; y < ssn.size(); ++y) {
      if (y == ssn.zero()) continue;
      const Vec lhs = rg.mul(psi(rn.algebra().basis_vec(x)),
                             psi(rn.algebra().basis_vec(y)));
      const int xy = ssn.mul(x, y);
      const Vec rhs = xy == ssn.zero()
                          ? rg.normal_form(rg.algebra().zero_vec())
                          : rg.normal_form(psi(rn.algebra().basis_vec(xy)));
      if (lhs != rhs) {
        rep.details.add("psi-multiplicative", {ssn.name(x), ssn.name(y)});
        break;
      }
    }
  }

  // mutually inverse on every basis-element image
  for (int x = 0; x < ssg.size(); ++x) {
    if (x == ssg.zero()) continue;
    Vec diff = psi(phi(rg.algebra().basis_vec(x)));
    const Vec back = rg.algebra().basis_vec(x);
    for (int i = 0; i < rg.algebra().dim(); ++i) {
      diff[i] = field.sub(diff[i], back[i]);
    }
    if (!rg.is_zero(diff)) {
      rep.details.add("psi-phi-identity", {ssg.name(x)});
      break;
    }
  }
  for (int x = 0; x < ssn.size(); ++x) {
    if (x == ssn.zero()) continue;
    Vec diff = phi(psi(rn.algebra().basis_vec(x)));
    const Vec back = rn.algebra().basis_vec(x);
    for (int i = 0; i < rn.algebra().dim(); ++i) {
      diff[i] = field.sub(diff[i], back[i]);
    }
    if (!rn.is_zero(diff)) {
      rep.details.add("phi-psi-identity", {ssn.name(x)});
      break;
    }
  }

  if (rep.dim_graded != rep.dim_nongraded) {
    rep.details.add("dimension-mismatch",
                    {std::to_string(rep.dim_graded),
                     std::to_string(rep.dim_nongraded)});
  }
  rep.details.sort_canonical();
  rep.iso = rep.details.ok();
  return rep;
}

}  // namespace gstone
