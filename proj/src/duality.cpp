#include "gstone/duality.hpp"

#include <algorithm>
#include <set>

#include "gstone/errors.hpp"

namespace gstone {

namespace {

std::vector<int> set_product(const GradedInverseSemigroup& s,
                             const std::vector<int>& xs,
                             const std::vector<int>& ys) {
  std::set<int> out;
  for (int x : xs) {
    for (int y : ys) out.insert(s.mul(x, y));
  }
  return {out.begin(), out.end()};
}

std::vector<int> set_inverse(const GradedInverseSemigroup& s,
                             const std::vector<int>& xs) {
  std::set<int> out;
  for (int x : xs) out.insert(s.inv(x));
  return {out.begin(), out.end()};
}

std::string slice_element_name(const FiniteGradedGroupoid& g,
                               const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += ",";
    out += g.name(members[i]);
  }
  return out + "}";
}

}  // namespace

UltraGroupoid ultrafilter_groupoid(
    std::shared_ptr<const GradedInverseSemigroup> s) {
  {
    ValidationReport v = s->validate();
    if (!v.ok()) {
      throw InputError("ultrafilter groupoid: input is not a valid graded "
                       "inverse semigroup: " + v.summary());
    }
  }
  UltraGroupoid out;
  out.semigroup = s;
  const auto& gb = s->graded_boolean_report();
  if (!gb.graded) {
    out.report.note("input is not graded-Boolean; the construction still "
                    "yields a groupoid, but duality is not guaranteed");
  }

  const FinitePoset& p = s->natural_order();
  const std::vector<Filter> ultra = p.ultrafilters();
  const int m = static_cast<int>(ultra.size());
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    out.members.push_back(ultra[i].members);
    out.minimum.push_back(ultra[i].minimum);
    out.index_of_members[ultra[i].members] = i;
    names.push_back("U(" + s->name(ultra[i].minimum) + ")");
  }
  auto find = [&](const std::vector<int>& members, const char* what) {
    auto it = out.index_of_members.find(members);
    if (it == out.index_of_members.end()) {
      throw InputError(std::string("ultrafilter groupoid: ") + what +
                       " is not an ultrafilter");
    }
    return it->second;
  };

  std::vector<int> invm(m), dm(m), rm(m);
  for (int i = 0; i < m; ++i) {
    invm[i] = find(set_inverse(*s, out.members[i]), "memberwise inverse");
  }
  for (int i = 0; i < m; ++i) {
    dm[i] = find(p.upward_closure(
                     set_product(*s, out.members[invm[i]], out.members[i])),
                 "X^-1 X closure");
    rm[i] = find(p.upward_closure(
                     set_product(*s, out.members[i], out.members[invm[i]])),
                 "X X^-1 closure");
  }
  std::vector<int> objects;
  for (int i = 0; i < m; ++i) objects.push_back(dm[i]);
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());

  std::vector<std::vector<int>> comp;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (dm[i] != rm[j]) continue;
      const int k = find(p.upward_closure(set_product(*s, out.members[i],
                                                      out.members[j])),
                         "composite closure");
      comp.push_back({i, j, k});
    }
  }
  std::vector<GroupElem> degrees(m, s->group()->identity());
  for (int i = 0; i < m; ++i) {
    degrees[i] = s->degree(out.minimum[i]);
    for (int x : out.members[i]) {
      if (s->degree(x) != degrees[i]) {
        out.report.add("filter-degree-mixed", {names[i], s->name(x)});
      }
    }
  }
  auto g = std::make_shared<FiniteGradedGroupoid>(
      names, objects, dm, rm, comp, invm, s->group(), degrees);
  for (const ValidationIssue& issue : g->validate().issues()) {
    out.report.add(issue.axiom, issue.witness);
  }
  out.report.sort_canonical();

  // realign with the groupoid's canonical morphism order
  std::vector<std::vector<int>> members(m);
  std::vector<int> minimum(m);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) {
    const int j = g->index_of(names[i]);
    members[j] = out.members[i];
    minimum[j] = out.minimum[i];
  }
  for (int j = 0; j < m; ++j) index[members[j]] = j;
  out.members = std::move(members);
  out.minimum = std::move(minimum);
  out.index_of_members = std::move(index);
  out.groupoid = std::move(g);
  return out;
}

Slice y_slice(const UltraGroupoid& ug, int s) {
  std::vector<int> members;
  const int m = static_cast<int>(ug.members.size());
  for (int i = 0; i < m; ++i) {
    if (std::binary_search(ug.members[i].begin(), ug.members[i].end(), s)) {
      members.push_back(i);
    }
  }
  return ug.groupoid->make_slice(std::move(members));
}

SliceSemigroup slice_semigroup(std::shared_ptr<const FiniteGradedGroupoid> g,
                               bool graded, std::size_t guard) {
  {
    ValidationReport v = g->validate();
    if (!v.ok()) {
      throw InputError("slice semigroup: input is not a valid graded "
                       "groupoid: " + v.summary());
    }
  }
  SliceSemigroup out;
  out.groupoid = g;
  out.graded = graded;
  std::vector<Slice> slices = g->enumerate_slices(graded, guard);
  const int n = static_cast<int>(slices.size());
  std::vector<std::string> names;
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) {
    names.push_back(slice_element_name(*g, slices[i].members));
    index[slices[i].members] = i;
  }
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<int> inv(n);
  std::vector<GroupElem> degrees(n, g->group()->identity());
  for (int a = 0; a < n; ++a) {
    inv[a] = index.at(g->slice_inverse(slices[a]).members);
    for (int b = 0; b < n; ++b) {
      mul[a][b] = index.at(g->slice_product(slices[a], slices[b]).members);
    }
    if (graded && slices[a].homogeneous_degree) {
      degrees[a] = *slices[a].homogeneous_degree;
    }
  }
  auto sg = std::make_shared<GradedInverseSemigroup>(
      names, "{}", mul, inv, g->group(), degrees);
  out.slice_of.resize(n);
  out.element_of.clear();
  for (int i = 0; i < n; ++i) {
    const int j = sg->index_of(names[i]);
    out.slice_of[j] = slices[i];
    out.element_of[slices[i].members] = j;
  }
  out.semigroup = std::move(sg);
  return out;
}

GrGpMorphism dualize_sg_morphism(const GrISMorphism& f,
                                 const UltraGroupoid& dual_source,
                                 const UltraGroupoid& dual_target) {
  {
    ValidationReport v = validate_gris_morphism(f);
    if (!v.ok()) {
      throw PreconditionError("dualize: not a morphism: " + v.summary());
    }
  }
  if (dual_source.semigroup.get() != f.source.get() ||
      dual_target.semigroup.get() != f.target.get()) {
    throw InputError("dualize: dual structures do not match the morphism");
  }
  GrGpMorphism out;
  out.source = dual_target.groupoid;
  out.target = dual_source.groupoid;
  const int m = static_cast<int>(dual_target.members.size());
  for (int i = 0; i < m; ++i) {
    std::vector<char> in(f.target->size(), 0);
    for (int x : dual_target.members[i]) in[x] = 1;
    std::vector<int> pre;
    for (int a = 0; a < f.source->size(); ++a) {
      if (in[f.map[a]]) pre.push_back(a);
    }
    auto it = dual_source.index_of_members.find(pre);
    if (it == dual_source.index_of_members.end()) {
      throw PreconditionError(
          "dualize: preimage of an ultrafilter is not an ultrafilter");
    }
    out.map.push_back(it->second);
  }
  return out;
}

GrISMorphism dualize_gp_morphism(const GrGpMorphism& f,
                                 const SliceSemigroup& dual_source,
                                 const SliceSemigroup& dual_target) {
  {
    ValidationReport v = validate_grgp_morphism(f);
    if (!v.ok()) {
      throw PreconditionError("dualize: not a morphism: " + v.summary());
    }
  }
  if (dual_source.groupoid.get() != f.source.get() ||
      dual_target.groupoid.get() != f.target.get()) {
    throw InputError("dualize: dual structures do not match the morphism");
  }
  GrISMorphism out;
  out.source = dual_target.semigroup;
  out.target = dual_source.semigroup;
  for (int i = 0; i < dual_target.semigroup->size(); ++i) {
    const auto& members = dual_target.slice_of[i].members;
    std::vector<char> in(f.target->size(), 0);
    for (int x : members) in[x] = 1;
    std::vector<int> pre;
    for (int a = 0; a < f.source->size(); ++a) {
      if (in[f.map[a]]) pre.push_back(a);
    }
    auto it = dual_source.element_of.find(pre);
    if (it == dual_source.element_of.end()) {
      throw PreconditionError(
          "dualize: preimage of a slice is not an enumerated slice");
    }
    out.map.push_back(it->second);
  }
  return out;
}

GrGpMorphism mu(const SliceSemigroup& sg, const UltraGroupoid& gsg) {
  if (gsg.semigroup.get() != sg.semigroup.get()) {
    throw InputError("mu: expected the ultrafilter groupoid of the slice "
                     "semigroup");
  }
  GrGpMorphism out;
  out.source = sg.groupoid;
  out.target = gsg.groupoid;
  const int n = sg.groupoid->size();
  for (int x = 0; x < n; ++x) {
    std::vector<int> containing;
    for (int e = 0; e < sg.semigroup->size(); ++e) {
      const auto& members = sg.slice_of[e].members;
      if (std::binary_search(members.begin(), members.end(), x)) {
        containing.push_back(e);
      }
    }
    auto it = gsg.index_of_members.find(containing);
    if (it == gsg.index_of_members.end()) {
      throw InputError("mu: X_x is not an ultrafilter on the slice "
                       "semigroup");
    }
    out.map.push_back(it->second);
  }
  return out;
}

GrISMorphism nu(const UltraGroupoid& ug, const SliceSemigroup& ssg) {
  if (ssg.groupoid.get() != ug.groupoid.get()) {
    throw InputError("nu: expected the slice semigroup of the ultrafilter "
                     "groupoid");
  }
  GrISMorphism out;
  out.source = ug.semigroup;
  out.target = ssg.semigroup;
  for (int s = 0; s < ug.semigroup->size(); ++s) {
    const Slice ys = y_slice(ug, s);
    auto it = ssg.element_of.find(ys.members);
    if (it == ssg.element_of.end()) {
      throw InputError("nu: Y_s is not an enumerated slice");
    }
    out.map.push_back(it->second);
  }
  return out;
}

namespace {

bool is_bijection(const std::vector<int>& map, int target_size) {
  std::vector<char> seen(target_size, 0);
  for (int x : map) {
    if (x < 0 || x >= target_size || seen[x]) return false;
    seen[x] = 1;
  }
  return static_cast<int>(map.size()) == target_size;
}

}  // namespace

RoundtripReport check_roundtrip_sg(
    std::shared_ptr<const GradedInverseSemigroup> s, std::size_t guard) {
  RoundtripReport rep;
  rep.direction = "sg\u2192gp\u2192sg";
  UltraGroupoid ug = ultrafilter_groupoid(s);
  rep.details.merge(ug.report);
  SliceSemigroup ssg = slice_semigroup(ug.groupoid, true, guard);
  GrISMorphism f = nu(ug, ssg);

  if (!is_bijection(f.map, ssg.semigroup->size())) {
    rep.details.add("nu-bijective", {});
  }
  rep.details.merge(validate_gris_morphism(f));
  // order isomorphism, both directions
  const FinitePoset& ps = s->natural_order();
  const FinitePoset& pt = ssg.semigroup->natural_order();
  for (int a = 0; a < s->size(); ++a) {
    for (int b = 0; b < s->size(); ++b) {
      if (ps.leq(a, b) != pt.leq(f.map[a], f.map[b])) {
        rep.details.add("nu-order-isomorphism", {s->name(a), s->name(b)});
      }
    }
  }
  rep.details.sort_canonical();
  rep.iso = rep.details.ok();
  rep.witness = {{"elements", s->size()},
                 {"ultrafilters", ug.groupoid->size()},
                 {"double_dual_elements", ssg.semigroup->size()}};
  if (!rep.iso) {
    rep.witness["first_failure"] = rep.details.summary();
  }
  return rep;
}

RoundtripReport check_roundtrip_gp(
    std::shared_ptr<const FiniteGradedGroupoid> g, std::size_t guard) {
  RoundtripReport rep;
  rep.direction = "gp\u2192sg\u2192gp";
  SliceSemigroup sg = slice_semigroup(g, true, guard);
  UltraGroupoid gsg = ultrafilter_groupoid(sg.semigroup);
  rep.details.merge(gsg.report);
  GrGpMorphism f = mu(sg, gsg);
  if (!is_bijection(f.map, gsg.groupoid->size())) {
    rep.details.add("mu-bijective", {});
  }
  rep.details.merge(validate_grgp_morphism(f));
  rep.details.sort_canonical();
  rep.iso = rep.details.ok();
  rep.witness = {{"morphisms", g->size()},
                 {"slices", sg.semigroup->size()},
                 {"double_dual_morphisms", gsg.groupoid->size()}};
  if (!rep.iso) {
    rep.witness["first_failure"] = rep.details.summary();
  }
  return rep;
}

ValidationReport check_naturality_sg(const GrISMorphism& f,
                                     std::size_t guard) {
  ValidationReport rep;
  rep.merge(validate_gris_morphism(f));
  if (!rep.ok()) {
    rep.sort_canonical();
    return rep;
  }
  UltraGroupoid ug_s = ultrafilter_groupoid(f.source);
  UltraGroupoid ug_t = ultrafilter_groupoid(f.target);
  GrGpMorphism gf = dualize_sg_morphism(f, ug_s, ug_t);
  rep.merge(validate_grgp_morphism(gf));
  SliceSemigroup ssg_s = slice_semigroup(ug_s.groupoid, true, guard);
  SliceSemigroup ssg_t = slice_semigroup(ug_t.groupoid, true, guard);
  GrISMorphism ggf = dualize_gp_morphism(gf, ssg_t, ssg_s);
  GrISMorphism nu_s = nu(ug_s, ssg_s);
  GrISMorphism nu_t = nu(ug_t, ssg_t);
  for (int a = 0; a < f.source->size(); ++a) {
    if (nu_t.map[f.map[a]] != ggf.map[nu_s.map[a]]) {
      rep.add("naturality-square-nu", {f.source->name(a)});
    }
  }
  rep.sort_canonical();
  return rep;
}

ValidationReport check_naturality_gp(const GrGpMorphism& f,
                                     std::size_t guard) {
  ValidationReport rep;
  rep.merge(validate_grgp_morphism(f));
  if (!rep.ok()) {
    rep.sort_canonical();
    return rep;
  }
  SliceSemigroup sg_s = slice_semigroup(f.source, true, guard);
  SliceSemigroup sg_t = slice_semigroup(f.target, true, guard);
  GrISMorphism sf = dualize_gp_morphism(f, sg_s, sg_t);
  UltraGroupoid gsg_s = ultrafilter_groupoid(sg_s.semigroup);
  UltraGroupoid gsg_t = ultrafilter_groupoid(sg_t.semigroup);
  GrGpMorphism ggf = dualize_sg_morphism(sf, gsg_t, gsg_s);
  GrGpMorphism mu_s = mu(sg_s, gsg_s);
  GrGpMorphism mu_t = mu(sg_t, gsg_t);
  for (int x = 0; x < f.source->size(); ++x) {
    if (mu_t.map[f.map[x]] != ggf.map[mu_s.map[x]]) {
      rep.add("naturality-square-mu", {f.source->name(x)});
    }
  }
  rep.sort_canonical();
  return rep;
}

ValidationReport run_lemma_suite(
    std::shared_ptr<const GradedInverseSemigroup> s, std::size_t guard) {
  ValidationReport rep;
  {
    ValidationReport v = s->validate();
    if (!v.ok()) {
      rep.merge(v);
      rep.note("lemma suite skipped: the instance is not a valid graded "
               "inverse semigroup");
      return rep;
    }
  }
  const FinitePoset& p = s->natural_order();
  const bool graded_boolean = s->graded_boolean_report().graded;
  if (!graded_boolean) {
    rep.note("instance is not graded-Boolean; graded-Boolean-only lemmas "
             "skipped");
  }

  // filter degree constancy: every filter is homogeneous
  for (const Filter& f : p.filters()) {
    for (int x : f.members) {
      if (s->degree(x) != s->degree(f.minimum)) {
        rep.add("filter-degree-constancy", {s->name(f.minimum), s->name(x)});
      }
    }
  }

  // degree agreement of compatible-not-orthogonal and comparable pairs;
  // joins/meets of homogeneous pairs stay homogeneous
  for (int a = 0; a < s->size(); ++a) {
    if (a == s->zero()) continue;
    for (int b = 0; b < s->size(); ++b) {
      if (b == s->zero()) continue;
      if (s->compatibility(a, b) == Compat::kCompatible &&
          s->degree(a) != s->degree(b)) {
        rep.add("compatible-not-orthogonal-degree", {s->name(a), s->name(b)});
      }
      if ((p.leq(a, b) || p.leq(b, a)) && s->degree(a) != s->degree(b)) {
        rep.add("comparable-degree", {s->name(a), s->name(b)});
      }
      if (s->degree(a) == s->degree(b)) {
        for (const auto bound : {p.join(a, b), p.meet(a, b)}) {
          if (bound && *bound != s->zero() &&
              s->degree(*bound) != s->degree(a)) {
            rep.add("homogeneous-bound-degree", {s->name(a), s->name(b)});
          }
        }
      }
    }
  }

  const std::vector<Filter> ultra = p.ultrafilters();

  // (X^-1 X)^up is an ultrafilter and an inverse subsemigroup, its
  // idempotent part is an ultrafilter on E(S), and X = (x (X^-1 X)^up)^up
  // for every member x
  for (const Filter& x : ultra) {
    std::set<int> prods;
    for (int a : x.members) {
      for (int b : x.members) prods.insert(s->mul(s->inv(a), b));
    }
    std::vector<int> base(prods.begin(), prods.end());
    const std::vector<int> y = p.upward_closure(base);
    bool is_ultra = false;
    for (const Filter& u : ultra) {
      if (u.members == y) is_ultra = true;
    }
    if (!is_ultra) {
      rep.add("idempotent-filter-ultra", {s->name(x.minimum)});
      continue;
    }
    for (int a : y) {
      if (!std::binary_search(y.begin(), y.end(), s->inv(a))) {
        rep.add("idempotent-filter-inverse-closed", {s->name(x.minimum)});
      }
      for (int b : y) {
        if (!std::binary_search(y.begin(), y.end(), s->mul(a, b))) {
          rep.add("idempotent-filter-subsemigroup", {s->name(x.minimum)});
        }
      }
    }
    {
      // E(Y) is an ultrafilter on E(S)
      const FinitePoset& ep = s->idempotent_order();
      std::vector<int> ey;
      for (int a : y) {
        if (s->is_idempotent(a)) ey.push_back(s->idempotent_poset_index(a));
      }
      std::sort(ey.begin(), ey.end());
      bool found = false;
      for (const Filter& u : ep.ultrafilters()) {
        if (u.members == ey) found = true;
      }
      if (!found) {
        rep.add("idempotent-filter-projection", {s->name(x.minimum)});
      }
    }
    for (int a : x.members) {
      std::set<int> ay;
      for (int b : y) ay.insert(s->mul(a, b));
      std::vector<int> ayv(ay.begin(), ay.end());
      if (p.upward_closure(ayv) != x.members) {
        rep.add("filter-recovery", {s->name(x.minimum), s->name(a)});
      }
    }
  }

  // translation lemma: s^-1 s in X implies (sX)^up is an ultrafilter
  for (const Filter& x : ultra) {
    for (int t = 0; t < s->size(); ++t) {
      if (!std::binary_search(x.members.begin(), x.members.end(),
                              s->mul(s->inv(t), t))) {
        continue;
      }
      std::set<int> tx;
      for (int m : x.members) tx.insert(s->mul(t, m));
      std::vector<int> txv(tx.begin(), tx.end());
      const std::vector<int> up = p.upward_closure(txv);
      bool found = false;
      for (const Filter& u : ultra) {
        if (u.members == up) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.add("translation-ultrafilter", {s->name(t), s->name(x.minimum)});
      }
    }
  }

  if (graded_boolean) {
    // relative complement postconditions, and the separation lemma
    for (int a = 0; a < s->size(); ++a) {
      for (int b = 0; b < s->size(); ++b) {
        if (p.leq(a, b)) {
          const int c = s->relative_complement(a, b);
          const bool orth =
              s->compatibility(a, c) == Compat::kOrthogonal || a == s->zero() ||
              c == s->zero();
          const auto join = p.join(a, c);
          if (!p.leq(c, b) || !orth || !join || *join != b) {
            rep.add("relative-complement", {s->name(a), s->name(b)});
          }
        } else {
          bool witness = false;
          for (int r = 0; r < s->size(); ++r) {
            if (r != s->zero() && p.leq(r, a) &&
                s->meet(r, b) == std::optional<int>(s->zero())) {
              witness = true;
              break;
            }
          }
          if (!witness) {
            rep.add("separation-witness", {s->name(a), s->name(b)});
          }
        }
      }
    }
    // ultrafilter primality: s v t in X implies s in X or t in X
    for (int a = 0; a < s->size(); ++a) {
      for (int b = 0; b < s->size(); ++b) {
        const auto join = p.join(a, b);
        if (!join) continue;
        for (const Filter& x : ultra) {
          if (!std::binary_search(x.members.begin(), x.members.end(), *join)) {
            continue;
          }
          if (!std::binary_search(x.members.begin(), x.members.end(), a) &&
              !std::binary_search(x.members.begin(), x.members.end(), b)) {
            rep.add("ultrafilter-primality",
                    {s->name(a), s->name(b), s->name(x.minimum)});
          }
        }
      }
    }
  }

  // Y_s slice identities on G(S)
  UltraGroupoid ug = ultrafilter_groupoid(s);
  rep.merge(ug.report);
  std::vector<Slice> y(s->size());
  for (int a = 0; a < s->size(); ++a) y[a] = y_slice(ug, a);
  for (int a = 0; a < s->size(); ++a) {
    // Y_{s^-1} = (Y_s)^-1
    if (ug.groupoid->slice_inverse(y[a]).members != y[s->inv(a)].members) {
      rep.add("y-inverse", {s->name(a)});
    }
    for (int b = 0; b < s->size(); ++b) {
      // Y_s n Y_t = Y_{s ^ t}
      const auto m = s->meet(a, b);
      if (m) {
        std::vector<int> inter;
        std::set_intersection(y[a].members.begin(), y[a].members.end(),
                              y[b].members.begin(), y[b].members.end(),
                              std::back_inserter(inter));
        if (inter != y[*m].members) {
          rep.add("y-meet", {s->name(a), s->name(b)});
        }
      }
      // Y_s Y_t = Y_{st}
      if (ug.groupoid->slice_product(y[a], y[b]).members !=
          y[s->mul(a, b)].members) {
        rep.add("y-product", {s->name(a), s->name(b)});
      }
      if (graded_boolean) {
        // Y_s subset of Y_t iff s <= t
        const bool subset =
            std::includes(y[b].members.begin(), y[b].members.end(),
                          y[a].members.begin(), y[a].members.end());
        if (subset != p.leq(a, b)) {
          rep.add("y-order", {s->name(a), s->name(b)});
        }
        // Y_s u Y_t = Y_{s v t} when the join exists
        const auto join = p.join(a, b);
        if (join) {
          std::vector<int> uni;
          std::set_union(y[a].members.begin(), y[a].members.end(),
                         y[b].members.begin(), y[b].members.end(),
                         std::back_inserter(uni));
          if (uni != y[*join].members) {
            rep.add("y-join", {s->name(a), s->name(b)});
          }
        }
      }
    }
  }

  if (graded_boolean) {
    // every nonempty homogeneous slice of G(S) is a compatible union of Y's
    const std::vector<Slice> slices =
        ug.groupoid->enumerate_slices(true, guard);
    for (const Slice& z : slices) {
      if (z.members.empty()) continue;
      std::vector<int> minima;
      for (int u : z.members) minima.push_back(ug.minimum[u]);
      bool ok = true;
      for (std::size_t i = 0; i < minima.size() && ok; ++i) {
        if (s->degree(minima[i]) != s->degree(minima[0])) ok = false;
        for (std::size_t j = i + 1; j < minima.size() && ok; ++j) {
          if (!is_compatible(s->compatibility(minima[i], minima[j]))) {
            ok = false;
          }
        }
      }
      std::set<int> covered;
      for (int mi : minima) {
        for (int u : y_slice(ug, mi).members) covered.insert(u);
      }
      if (!ok ||
          std::vector<int>(covered.begin(), covered.end()) != z.members) {
        rep.add("homogeneous-slice-decomposition",
                {slice_element_name(*ug.groupoid, z.members)});
      }
    }

    // G(S)_e = G(S_e) as groupoids, compared through member sets
    const SubsemigroupResult eps = s->restrict_epsilon();
    UltraGroupoid ug_eps = ultrafilter_groupoid(eps.semigroup);
    std::set<std::vector<int>> eps_members;
    for (const auto& mem : ug_eps.members) {
      std::vector<int> lifted;
      for (int x : mem) lifted.push_back(eps.parent_of[x]);
      std::sort(lifted.begin(), lifted.end());
      eps_members.insert(lifted);
    }
    std::set<std::vector<int>> identity_component;
    for (std::size_t i = 0; i < ug.members.size(); ++i) {
      if (s->group()->is_identity(s->degree(ug.minimum[i]))) {
        identity_component.insert(ug.members[i]);
      }
    }
    if (eps_members != identity_component) {
      rep.add("identity-component-groupoid", {});
    }
  }

  rep.sort_canonical();
  return rep;
}

}  // namespace gstone
