#include "gstone/invsemi.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gstone/errors.hpp"
#include "gstone/kernels.hpp"

namespace gstone {

GradedInverseSemigroup::GradedInverseSemigroup(
    std::vector<std::string> names, const std::string& zero,
    const std::vector<std::vector<int>>& mul, const std::vector<int>& inv,
    std::shared_ptr<const GradedGroup> group,
    const std::vector<GroupElem>& degrees)
    : n_(static_cast<int>(names.size())), group_(std::move(group)) {
  if (n_ == 0) throw InputError("semigroup: empty element set");
  if (!group_) throw InputError("semigroup: missing grading group");
  if (static_cast<int>(mul.size()) != n_ ||
      static_cast<int>(inv.size()) != n_ ||
      static_cast<int>(degrees.size()) != n_) {
    throw InputError("semigroup: table sizes differ from element count");
  }
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n_) {
      throw InputError("semigroup: ragged multiplication table");
    }
  }
  // canonical order: sort identifiers, remap all tables
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return names[a] < names[b]; });
  std::vector<int> pos(n_);
  for (int i = 0; i < n_; ++i) pos[perm[i]] = i;

  names_.resize(n_);
  deg_.resize(n_);
  inv_.assign(n_, -1);
  mul_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int i = 0; i < n_; ++i) {
    names_[i] = names[perm[i]];
    deg_[i] = degrees[perm[i]];
  }
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
    throw InputError("semigroup: duplicate element name");
  }
  auto check = [&](int x) {
    if (x < 0 || x >= n_) throw InputError("semigroup: table entry out of range");
    return pos[x];
  };
  for (int i = 0; i < n_; ++i) {
    inv_[pos[i]] = check(inv[i]);
    for (int j = 0; j < n_; ++j) {
      mul_[static_cast<std::size_t>(pos[i]) * n_ + pos[j]] = check(mul[i][j]);
    }
  }
  auto it = std::lower_bound(names_.begin(), names_.end(), zero);
  if (it == names_.end() || *it != zero) {
    throw InputError("semigroup: unknown zero element '" + zero + "'");
  }
  zero_ = static_cast<int>(it - names_.begin());
  for (int i = 0; i < n_; ++i) {
    if (i != zero_ && !group_->contains(deg_[i])) {
      throw InputError("semigroup: degree of '" + names_[i] +
                       "' is not a group element");
    }
  }
  deg_[zero_] = group_->identity();  // slot unused; degree(zero) throws
  for (int i = 0; i < n_; ++i) {
    if (this->mul(i, i) == i) idempotents_.push_back(i);
  }
}

int GradedInverseSemigroup::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) {
    throw InputError("semigroup: unknown element '" + name + "'");
  }
  return static_cast<int>(it - names_.begin());
}

const GroupElem& GradedInverseSemigroup::degree(int a) const {
  if (a == zero_) {
    throw PreconditionError("semigroup: the zero element has no degree");
  }
  return deg_.at(a);
}

bool GradedInverseSemigroup::trivially_graded() const {
  for (int i = 0; i < n_; ++i) {
    if (i != zero_ && !group_->is_identity(deg_[i])) return false;
  }
  return true;
}

std::shared_ptr<const GradedInverseSemigroup> GradedInverseSemigroup::from_json(
    const nlohmann::json& j, std::size_t max_elements) {
  for (const char* key : {"elements", "zero", "mul", "inv", "group", "deg"}) {
    if (!j.is_object() || !j.contains(key)) {
      throw InputError(std::string("semigroup json: missing key '") + key +
                       "'");
    }
  }
  std::vector<std::string> names =
      j.at("elements").get<std::vector<std::string>>();
  if (names.size() > max_elements) {
    throw ResourceError("semigroup json: " + std::to_string(names.size()) +
                        " elements exceed the guard of " +
                        std::to_string(max_elements));
  }
  auto group = group_from_json(j.at("group"));
  const int n = static_cast<int>(names.size());
  auto index = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) {
      throw InputError("semigroup json: unknown element '" + s + "'");
    }
    return static_cast<int>(it - names.begin());
  };
  std::vector<std::vector<int>> mul;
  for (const auto& row : j.at("mul")) {
    std::vector<int> r;
    for (const auto& entry : row) r.push_back(index(entry.get<std::string>()));
    mul.push_back(std::move(r));
  }
  if (static_cast<int>(mul.size()) != n) {
    throw InputError("semigroup json: mul row count differs from elements");
  }
  std::vector<int> inv;
  for (const auto& entry : j.at("inv")) {
    inv.push_back(index(entry.get<std::string>()));
  }
  const std::string zero = j.at("zero").get<std::string>();
  std::vector<GroupElem> degrees(n, group->identity());
  const auto& deg = j.at("deg");
  for (int i = 0; i < n; ++i) {
    if (names[i] == zero) {
      if (deg.contains(names[i])) {
        throw InputError("semigroup json: the zero element carries no degree");
      }
      continue;
    }
    if (!deg.contains(names[i])) {
      throw InputError("semigroup json: missing degree for '" + names[i] +
                       "'");
    }
    degrees[i] = group->parse(deg.at(names[i]).get<std::string>());
  }
  return std::make_shared<GradedInverseSemigroup>(
      std::move(names), zero, mul, inv, std::move(group), degrees);
}

nlohmann::json GradedInverseSemigroup::to_json() const {
  nlohmann::json mul = nlohmann::json::array();
  for (int a = 0; a < n_; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < n_; ++b) row.push_back(names_[this->mul(a, b)]);
    mul.push_back(std::move(row));
  }
  nlohmann::json inv = nlohmann::json::array();
  for (int a = 0; a < n_; ++a) inv.push_back(names_[inv_[a]]);
  nlohmann::json deg = nlohmann::json::object();
  for (int a = 0; a < n_; ++a) {
    if (a != zero_) deg[names_[a]] = group_->render(deg_[a]);
  }
  return {{"elements", names_}, {"zero", names_[zero_]},
          {"mul", mul},         {"inv", inv},
          {"group", group_->to_json()}, {"deg", deg}};
}

ValidationReport GradedInverseSemigroup::validate(
    std::size_t max_witnesses) const {
  ValidationReport rep;
  const auto assoc = kernels::associativity_violations(mul_, n_, max_witnesses);
  for (const auto& t : assoc) {
    rep.add("associativity", {names_[t.a], names_[t.b], names_[t.c]});
  }
  if (assoc.size() >= max_witnesses) {
    rep.note("associativity witnesses truncated at " +
             std::to_string(max_witnesses));
  }
  for (int a = 0; a < n_; ++a) {
    if (mul(zero_, a) != zero_ || mul(a, zero_) != zero_) {
      rep.add("zero-absorbing", {names_[a]});
    }
  }
  for (int a = 0; a < n_; ++a) {
    const int b = inv_[a];
    if (mul(mul(a, b), a) != a || mul(mul(b, a), b) != b) {
      rep.add("inverse-axiom", {names_[a]});
    }
    int count = 0;
    int extra = -1;
    for (int c = 0; c < n_; ++c) {
      if (mul(mul(a, c), a) == a && mul(mul(c, a), c) == c) {
        ++count;
        if (c != b) extra = c;
      }
    }
    if (count != 1) {
      rep.add("inverse-uniqueness",
              {names_[a], extra >= 0 ? names_[extra] : names_[b]});
    }
  }
  for (int e : idempotents_) {
    for (int f : idempotents_) {
      if (mul(e, f) != mul(f, e)) {
        rep.add("idempotents-commute", {names_[e], names_[f]});
      }
    }
  }
  for (int a = 0; a < n_; ++a) {
    if (a == zero_) continue;
    for (int b = 0; b < n_; ++b) {
      if (b == zero_) continue;
      const int ab = mul(a, b);
      if (ab != zero_ &&
          deg_[ab] != group_->product(deg_[a], deg_[b])) {
        rep.add("grading-multiplicative", {names_[a], names_[b]});
      }
    }
  }
  for (int a = 0; a < n_; ++a) {
    if (a == zero_) continue;
    if (inv_[a] != zero_ && deg_[inv_[a]] != group_->inverse(deg_[a])) {
      rep.add("grading-inverse", {names_[a]});
    }
    if (is_idempotent(a) && !group_->is_identity(deg_[a])) {
      rep.add("grading-idempotent-identity", {names_[a]});
    }
  }
  if (inv_[zero_] != zero_) {
    rep.add("inverse-of-zero", {names_[inv_[zero_]]});
  }
  if (rep.ok()) {
    // the two characterisations s = tu and s = ut of the natural order must
    // coincide; scanned here as a cross-check of the tables
    const auto right = kernels::natural_order(mul_, n_, idempotents_);
    for (int s = 0; s < n_ && rep.ok(); ++s) {
      for (int t = 0; t < n_; ++t) {
        bool left = false;
        for (int u : idempotents_) {
          if (mul(u, t) == s) {
            left = true;
            break;
          }
        }
        if (left != (right[static_cast<std::size_t>(s) * n_ + t] != 0)) {
          rep.add("natural-order-two-sided", {names_[s], names_[t]});
          break;
        }
      }
    }
  }
  rep.sort_canonical();
  return rep;
}

const FinitePoset& GradedInverseSemigroup::natural_order() const {
  std::call_once(order_once_, [&] {
    const auto leq = kernels::natural_order(mul_, n_, idempotents_);
    order_ = std::make_unique<FinitePoset>(names_, leq, names_[zero_]);
  });
  return *order_;
}

const FinitePoset& GradedInverseSemigroup::idempotent_order() const {
  std::call_once(eorder_once_, [&] {
    const FinitePoset& p = natural_order();
    eorder_ = std::make_unique<FinitePoset>(
        p.restrict(idempotents_, zero_));
    eorder_index_.assign(n_, -1);
    for (std::size_t k = 0; k < idempotents_.size(); ++k) {
      eorder_index_[idempotents_[k]] = static_cast<int>(k);
    }
  });
  return *eorder_;
}

int GradedInverseSemigroup::idempotent_poset_index(int element) const {
  idempotent_order();
  const int k = eorder_index_.at(element);
  if (k < 0) throw InputError("semigroup: '" + names_[element] +
                              "' is not an idempotent");
  return k;
}

Compat GradedInverseSemigroup::compatibility(int s, int t) const {
  const int st = mul(s, inv_[t]);
  const int ts = mul(inv_[s], t);
  if (st == zero_ && ts == zero_) return Compat::kOrthogonal;
  if (is_idempotent(st) && is_idempotent(ts)) return Compat::kCompatible;
  return Compat::kIncompatible;
}

std::optional<int> GradedInverseSemigroup::meet(int s, int t) const {
  return natural_order().meet(s, t);
}

std::optional<int> GradedInverseSemigroup::join_compatible(
    std::span<const int> subset) const {
  if (subset.empty()) {
    throw PreconditionError("join: the subset must be nonempty");
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (!is_compatible(compatibility(subset[i], subset[j]))) {
        throw PreconditionError("join: '" + names_.at(subset[i]) + "' and '" +
                                names_.at(subset[j]) + "' are incompatible");
      }
    }
  }
  const GroupElem* common = nullptr;
  for (int s : subset) {
    if (s == zero_) continue;
    if (common == nullptr) {
      common = &deg_[s];
    } else if (*common != deg_[s]) {
      throw PreconditionError("join: subset is not homogeneous");
    }
  }
  return natural_order().join_of(subset);
}

const GradedBooleanReport& GradedInverseSemigroup::graded_boolean_report()
    const {
  std::call_once(bool_once_, [&] {
    auto rep = std::make_unique<GradedBooleanReport>();
    rep->details.note(
        "join tests cover compatible subsets of size <= 3; larger joins "
        "reduce to folded pairwise joins");
    const FinitePoset& p = natural_order();

    rep->meets_ok = true;
    for (int a = 0; a < n_ && rep->meets_ok; ++a) {
      for (int b = a; b < n_; ++b) {
        if (!p.meet(a, b)) {
          rep->details.add("meet-missing", {names_[a], names_[b]});
          rep->meets_ok = false;
          break;
        }
      }
    }
    if (!rep->meets_ok) {
      rep->graded = rep->nongraded = false;
      rep->details.sort_canonical();
      bool_report_ = std::move(rep);
      return;
    }

    rep->graded = rep->nongraded = true;
    auto flag = [&](bool homogeneous, const std::string& axiom,
                    std::vector<std::string> witness) {
      rep->nongraded = false;
      rep->details.add("boolean-" + axiom, witness);
      if (homogeneous) {
        rep->graded = false;
        rep->details.add("graded-" + axiom, std::move(witness));
      }
    };
    auto homogeneous_pair = [&](int a, int b) {
      if (a == zero_ || b == zero_) return true;
      return deg_[a] == deg_[b];
    };

    // condition (1) and (2) on compatible pairs
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (!is_compatible(compatibility(a, b))) continue;
        const bool homog = homogeneous_pair(a, b);
        const auto j = p.join(a, b);
        if (!j) {
          flag(homog, "join-missing", {names_[a], names_[b]});
          continue;
        }
        for (int s = 0; s < n_; ++s) {
          const auto right = p.join(mul(a, s), mul(b, s));
          if (!right || *right != mul(*j, s)) {
            flag(homog, "distributivity-right",
                 {names_[a], names_[b], names_[s]});
            break;
          }
          const auto left = p.join(mul(s, a), mul(s, b));
          if (!left || *left != mul(s, *j)) {
            flag(homog, "distributivity-left",
                 {names_[a], names_[b], names_[s]});
            break;
          }
        }
      }
    }

    // condition (1) on compatible triples, by folding pairwise joins
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (!is_compatible(compatibility(a, b))) continue;
        const auto jab = p.join(a, b);
        if (!jab) continue;  // flagged above
        for (int c = b + 1; c < n_; ++c) {
          if (!is_compatible(compatibility(a, c)) ||
              !is_compatible(compatibility(b, c))) {
            continue;
          }
          const bool homog = homogeneous_pair(a, b) &&
                             homogeneous_pair(a, c) && homogeneous_pair(b, c);
          const auto j3 = p.join(*jab, c);
          if (!j3) {
            flag(homog, "join-missing", {names_[a], names_[b], names_[c]});
            continue;
          }
          if (n_ <= 64) {
            const int triple[3] = {a, b, c};
            const auto direct = p.join_of(triple);
            if (!direct || *direct != *j3) {
              flag(homog, "join-fold-mismatch",
                   {names_[a], names_[b], names_[c]});
            }
          }
        }
      }
    }

    // condition (3): E(S) a distributive lattice with Boolean principal
    // ideals
    const FinitePoset& ep = idempotent_order();
    const LatticeReport lat = ep.lattice_report();
    if (!lat.is_distributive_lattice()) {
      rep->graded = rep->nongraded = false;
      rep->details.add("idempotent-lattice", {});
    } else {
      for (int k = 0; k < ep.size(); ++k) {
        const int single[1] = {k};
        const auto ideal = ep.downward_closure(single);
        const FinitePoset sub = ep.restrict(ideal, ep.bottom());
        if (!sub.is_boolean_algebra()) {
          rep->graded = rep->nongraded = false;
          rep->details.add("idempotent-ideal-not-boolean", {ep.name(k)});
        }
      }
    }
    rep->details.sort_canonical();
    bool_report_ = std::move(rep);
  });
  return *bool_report_;
}

int GradedInverseSemigroup::relative_complement(int s, int t) const {
  if (!graded_boolean_report().graded) {
    throw PreconditionError(
        "relative complement: the semigroup is not graded-Boolean");
  }
  if (!natural_order().leq(s, t)) {
    throw PreconditionError("relative complement: '" + names_.at(s) +
                            "' is not below '" + names_.at(t) + "'");
  }
  const int ss = mul(inv_[s], s);
  const int tt = mul(inv_[t], t);
  const FinitePoset& ep = idempotent_order();
  const auto e = ep.complement_in_ideal(idempotent_poset_index(ss),
                                        idempotent_poset_index(tt));
  if (!e) {
    throw PreconditionError(
        "relative complement: no complement inside the principal ideal");
  }
  return mul(t, idempotents_[*e]);
}

const std::vector<std::uint8_t>& GradedInverseSemigroup::arrow_table() const {
  std::call_once(arrow_once_, [&] {
    const FinitePoset& p = natural_order();
    for (int a = 0; a < n_; ++a) {
      for (int b = a; b < n_; ++b) {
        if (!p.meet(a, b)) {
          throw PreconditionError(
              "arrow: requires an inverse meet-semigroup; meet of '" +
              names_[a] + "' and '" + names_[b] + "' is missing");
        }
      }
    }
    arrow_ = kernels::arrow_table(p.leq_table(), p.meet_table(), n_, zero_);
  });
  return arrow_;
}

bool GradedInverseSemigroup::arrow(int s, int t) const {
  return arrow_table()[static_cast<std::size_t>(s) * n_ + t] != 0;
}

bool GradedInverseSemigroup::is_separative() const {
  const FinitePoset& p = natural_order();
  const auto& a = arrow_table();
  for (int s = 0; s < n_; ++s) {
    for (int t = 0; t < n_; ++t) {
      if ((a[static_cast<std::size_t>(s) * n_ + t] != 0) != p.leq(s, t)) {
        return false;
      }
    }
  }
  return true;
}

QuotientResult GradedInverseSemigroup::quotient_by_biarrow() const {
  const auto& a = arrow_table();
  auto biarrow = [&](int s, int t) {
    return a[static_cast<std::size_t>(s) * n_ + t] != 0 &&
           a[static_cast<std::size_t>(t) * n_ + s] != 0;
  };
  std::vector<int> rep_of(n_, -1);
  for (int s = 0; s < n_; ++s) {
    for (int t = 0; t <= s; ++t) {
      if (biarrow(s, t)) {
        rep_of[s] = t;
        break;
      }
    }
  }
  for (int s = 0; s < n_; ++s) {
    if ((rep_of[s] == zero_) != (s == zero_)) {
      throw InputError("quotient: biarrow is not 0-restricted; input is not "
                       "a valid inverse meet-semigroup");
    }
  }
  std::vector<int> reps;
  for (int s = 0; s < n_; ++s) {
    if (rep_of[s] == s) reps.push_back(s);
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> class_index(n_, -1);
  for (int k = 0; k < m; ++k) class_index[reps[k]] = k;
  std::vector<int> class_of(n_);
  for (int s = 0; s < n_; ++s) class_of[s] = class_index[rep_of[s]];

  std::vector<std::string> names;
  std::vector<GroupElem> degrees;
  for (int r : reps) {
    names.push_back(names_[r]);
    degrees.push_back(deg_[r]);
  }
  // classes inherit degrees; all members of a nonzero class share one
  for (int s = 0; s < n_; ++s) {
    if (s != zero_ && deg_[s] != degrees[class_of[s]]) {
      throw InputError("quotient: biarrow class mixes degrees at '" +
                       names_[s] + "'");
    }
  }
  std::vector<std::vector<int>> mulq(m, std::vector<int>(m));
  std::vector<int> invq(m);
  for (int i = 0; i < m; ++i) {
    invq[i] = class_of[inv_[reps[i]]];
    for (int j = 0; j < m; ++j) {
      mulq[i][j] = class_of[mul(reps[i], reps[j])];
    }
  }
  for (int s = 0; s < n_; ++s) {
    for (int t = 0; t < n_; ++t) {
      if (class_of[mul(s, t)] != mulq[class_of[s]][class_of[t]]) {
        throw InputError("quotient: biarrow is not a congruence at '" +
                         names_[s] + "', '" + names_[t] + "'");
      }
    }
  }
  auto q = std::make_shared<GradedInverseSemigroup>(
      names, names_[zero_], mulq, invq, group_, degrees);
  // constructor re-sorts; realign the class map with the new indices
  std::vector<int> out(n_);
  for (int s = 0; s < n_; ++s) out[s] = q->index_of(names[class_of[s]]);
  return {std::move(q), std::move(out)};
}

SubsemigroupResult GradedInverseSemigroup::restrict_epsilon() const {
  std::vector<int> keep;
  for (int i = 0; i < n_; ++i) {
    if (i == zero_ || group_->is_identity(deg_[i])) keep.push_back(i);
  }
  const int m = static_cast<int>(keep.size());
  std::vector<int> sub_index(n_, -1);
  for (int k = 0; k < m; ++k) sub_index[keep[k]] = k;
  std::vector<std::string> names;
  std::vector<GroupElem> degrees(m, group_->identity());
  for (int k : keep) names.push_back(names_[k]);
  std::vector<std::vector<int>> muls(m, std::vector<int>(m));
  std::vector<int> invs(m);
  for (int i = 0; i < m; ++i) {
    if (sub_index[inv_[keep[i]]] < 0) {
      throw InputError("restrict: inverse leaves the identity component at '" +
                       names_[keep[i]] + "'");
    }
    invs[i] = sub_index[inv_[keep[i]]];
    for (int j = 0; j < m; ++j) {
      const int prod = mul(keep[i], keep[j]);
      if (sub_index[prod] < 0) {
        throw InputError("restrict: product leaves the identity component at "
                         "'" + names_[keep[i]] + "', '" + names_[keep[j]] +
                         "'");
      }
      muls[i][j] = sub_index[prod];
    }
  }
  auto sub = std::make_shared<GradedInverseSemigroup>(
      names, names_[zero_], muls, invs, group_, degrees);
  std::vector<int> parent_of(m);
  for (int k = 0; k < m; ++k) parent_of[sub->index_of(names[k])] = keep[k];
  return {std::move(sub), std::move(parent_of)};
}

GrISMorphism identity_gris_morphism(
    std::shared_ptr<const GradedInverseSemigroup> s) {
  GrISMorphism f;
  f.map.resize(s->size());
  std::iota(f.map.begin(), f.map.end(), 0);
  f.source = s;
  f.target = std::move(s);
  return f;
}

GrISMorphism compose(const GrISMorphism& g, const GrISMorphism& f) {
  if (f.target.get() != g.source.get()) {
    throw InputError("compose: morphisms are not composable");
  }
  GrISMorphism out;
  out.source = f.source;
  out.target = g.target;
  out.map.reserve(f.map.size());
  for (int x : f.map) out.map.push_back(g.map.at(x));
  return out;
}

ValidationReport validate_gris_morphism(const GrISMorphism& f) {
  ValidationReport rep;
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (static_cast<int>(f.map.size()) != s.size()) {
    throw InputError("morphism: map size differs from source size");
  }
  for (int x : f.map) {
    if (x < 0 || x >= t.size()) {
      throw InputError("morphism: map entry out of range");
    }
  }
  if (!s.group()->same_group(*t.group())) {
    rep.add("same-group", {});
    rep.sort_canonical();
    return rep;
  }
  if (f.map[s.zero()] != t.zero()) {
    rep.add("zero-preserving", {s.name(s.zero())});
  }
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (f.map[s.mul(a, b)] != t.mul(f.map[a], f.map[b])) {
        rep.add("multiplicative", {s.name(a), s.name(b)});
      }
    }
  }
  for (int a = 0; a < s.size(); ++a) {
    if (a == s.zero() || f.map[a] == t.zero()) continue;
    if (t.degree(f.map[a]) != s.degree(a)) {
      rep.add("degree-preserving", {s.name(a)});
    }
  }
  for (int a = 0; a < s.size(); ++a) {
    for (int b = a; b < s.size(); ++b) {
      const auto ms = s.meet(a, b);
      if (!ms) {
        rep.add("source-meet-missing", {s.name(a), s.name(b)});
        continue;
      }
      const auto mt = t.meet(f.map[a], f.map[b]);
      if (!mt || *mt != f.map[*ms]) {
        rep.add("meet-preserving", {s.name(a), s.name(b)});
      }
    }
  }
  // properness: preimages of ultrafilters are ultrafilters
  {
    const auto target_ultra = t.natural_order().ultrafilters();
    const auto source_ultra = s.natural_order().ultrafilters();
    for (const Filter& x : target_ultra) {
      std::vector<char> in(t.size(), 0);
      for (int m : x.members) in[m] = 1;
      std::vector<int> pre;
      for (int a = 0; a < s.size(); ++a) {
        if (in[f.map[a]]) pre.push_back(a);
      }
      const bool filter = s.natural_order().is_filter(pre);
      bool maximal = false;
      for (const Filter& u : source_ultra) {
        if (u.members == pre) {
          maximal = true;
          break;
        }
      }
      if (!filter || !maximal) {
        rep.add("proper", {t.name(x.minimum)});
      }
    }
  }
  // lattice homomorphism on idempotents: joins where they exist, and
  // complements in principal order ideals
  {
    const auto& es = s.idempotent_order();
    const auto& et = t.idempotent_order();
    for (int i = 0; i < es.size(); ++i) {
      for (int j = i + 1; j < es.size(); ++j) {
        const auto jj = es.join(i, j);
        if (!jj) continue;
        const int a = s.idempotents()[i];
        const int b = s.idempotents()[j];
        const int jel = s.idempotents()[*jj];
        const auto tj = et.join(t.idempotent_poset_index(f.map[a]),
                                t.idempotent_poset_index(f.map[b]));
        if (!tj || t.idempotents()[*tj] != f.map[jel]) {
          rep.add("idempotent-join-preserving", {s.name(a), s.name(b)});
        }
      }
    }
    for (int u = 0; u < es.size(); ++u) {
      for (int e = 0; e < es.size(); ++e) {
        if (!es.leq(e, u)) continue;
        const auto c = es.complement_in_ideal(e, u);
        if (!c) continue;
        const int ea = s.idempotents()[e];
        const int ua = s.idempotents()[u];
        const int ca = s.idempotents()[*c];
        // image of the complement must be the complement of the image
        // inside the image ideal
        const int fe = f.map[ea];
        const int fu = f.map[ua];
        const int fc = f.map[ca];
        bool ok = t.mul(fe, fc) == t.zero();
        if (ok) {
          const auto& tp = t.natural_order();
          for (int w : t.idempotents()) {
            if (w != fu && tp.leq(w, fu) && tp.leq(fe, w) && tp.leq(fc, w)) {
              ok = false;
              break;
            }
          }
          if (!tp.leq(fe, fu) || !tp.leq(fc, fu)) ok = false;
        }
        if (!ok) {
          rep.add("complement-preserving", {s.name(ea), s.name(ua)});
        }
      }
    }
  }
  // join preservation beyond idempotents is informational only
  {
    int broken = 0;
    const auto& ps = s.natural_order();
    const auto& pt = t.natural_order();
    for (int a = 0; a < s.size(); ++a) {
      for (int b = a + 1; b < s.size(); ++b) {
        if (!is_compatible(s.compatibility(a, b))) continue;
        const auto j = ps.join(a, b);
        if (!j) continue;
        const auto tj = pt.join(f.map[a], f.map[b]);
        if (!tj || *tj != f.map[*j]) ++broken;
      }
    }
    if (broken > 0) {
      rep.note("join preservation (not required of morphisms) fails on " +
               std::to_string(broken) + " compatible pairs");
    } else {
      rep.note("join preservation (not required of morphisms) holds on all "
               "compatible pairs with joins");
    }
  }
  rep.sort_canonical();
  return rep;
}

}  // namespace gstone
