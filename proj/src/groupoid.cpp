#include "gstone/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gstone/errors.hpp"

namespace gstone {

FiniteGradedGroupoid::FiniteGradedGroupoid(
    std::vector<std::string> names, std::vector<int> objects,
    std::vector<int> dmap, std::vector<int> rmap,
    const std::vector<std::vector<int>>& comp_triples, std::vector<int> inv,
    std::shared_ptr<const GradedGroup> group, std::vector<GroupElem> degrees)
    : n_(static_cast<int>(names.size())), group_(std::move(group)) {
  if (!group_) throw InputError("groupoid: missing grading group");
  if (static_cast<int>(dmap.size()) != n_ ||
      static_cast<int>(rmap.size()) != n_ ||
      static_cast<int>(inv.size()) != n_ ||
      static_cast<int>(degrees.size()) != n_) {
    throw InputError("groupoid: table sizes differ from morphism count");
  }
  // canonical order by name
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return names[a] < names[b]; });
  std::vector<int> pos(n_);
  for (int i = 0; i < n_; ++i) pos[perm[i]] = i;
  auto remap = [&](int x) {
    if (x < 0 || x >= n_) throw InputError("groupoid: index out of range");
    return pos[x];
  };
  names_.resize(n_);
  deg_.resize(n_);
  d_.assign(n_, -1);
  r_.assign(n_, -1);
  inv_.assign(n_, -1);
  for (int i = 0; i < n_; ++i) {
    names_[pos[i]] = names[i];
    deg_[pos[i]] = degrees[i];
    d_[pos[i]] = remap(dmap[i]);
    r_[pos[i]] = remap(rmap[i]);
    inv_[pos[i]] = remap(inv[i]);
  }
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
    throw InputError("groupoid: duplicate morphism name");
  }
  is_object_.assign(n_, 0);
  for (int o : objects) is_object_[remap(o)] = 1;
  for (int i = 0; i < n_; ++i) {
    if (is_object_[i]) objects_.push_back(i);
  }
  comp_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (const auto& triple : comp_triples) {
    if (triple.size() != 3) {
      throw InputError("groupoid: composition entries must be triples");
    }
    const int x = remap(triple[0]);
    const int y = remap(triple[1]);
    const int z = remap(triple[2]);
    if (comp_[static_cast<std::size_t>(x) * n_ + y] >= 0 &&
        comp_[static_cast<std::size_t>(x) * n_ + y] != z) {
      throw InputError("groupoid: conflicting composites for '" + names_[x] +
                       "' and '" + names_[y] + "'");
    }
    comp_[static_cast<std::size_t>(x) * n_ + y] = z;
  }
  for (int i = 0; i < n_; ++i) {
    if (!group_->contains(deg_[i])) {
      throw InputError("groupoid: degree of '" + names_[i] +
                       "' is not a group element");
    }
  }
}

int FiniteGradedGroupoid::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) {
    throw InputError("groupoid: unknown morphism '" + name + "'");
  }
  return static_cast<int>(it - names_.begin());
}

ValidationReport FiniteGradedGroupoid::validate() const {
  ValidationReport rep;
  rep.note("topology: finite discrete; every subset is open and compact, "
           "every singleton is a compact open slice; etale, ample and "
           "Hausdorff hold automatically");
  for (int x = 0; x < n_; ++x) {
    if (!is_object_[d_[x]]) rep.add("domain-is-object", {names_[x]});
    if (!is_object_[r_[x]]) rep.add("range-is-object", {names_[x]});
  }
  for (int o : objects_) {
    if (d_[o] != o || r_[o] != o) rep.add("object-identity-maps", {names_[o]});
  }
  // composability pattern
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      const bool defined = comp(x, y) >= 0;
      if (defined != (d_[x] == r_[y])) {
        rep.add("composability", {names_[x], names_[y]});
      }
    }
  }
  // units act as identities
  for (int x = 0; x < n_; ++x) {
    if (is_object_[d_[x]] && comp(x, d_[x]) != x) {
      rep.add("unit-right-identity", {names_[x]});
    }
    if (is_object_[r_[x]] && comp(r_[x], x) != x) {
      rep.add("unit-left-identity", {names_[x]});
    }
  }
  // inverses: x * inv x = r(x), inv x * x = d(x)
  for (int x = 0; x < n_; ++x) {
    if (comp(x, inv_[x]) != r_[x] || comp(inv_[x], x) != d_[x]) {
      rep.add("inverse", {names_[x]});
    }
  }
  // associativity over composable triples
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (d_[x] != r_[y]) continue;
      const int xy = comp(x, y);
      if (xy < 0) continue;
      for (int z = 0; z < n_; ++z) {
        if (d_[y] != r_[z]) continue;
        const int yz = comp(y, z);
        if (yz < 0 || comp(xy, z) != comp(x, yz)) {
          rep.add("associativity", {names_[x], names_[y], names_[z]});
        }
      }
    }
  }
  // composites land where they should
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      const int xy = comp(x, y);
      if (xy < 0) continue;
      if (d_[xy] != d_[y] || r_[xy] != r_[x]) {
        rep.add("composite-endpoints", {names_[x], names_[y]});
      }
    }
  }
  // functorial degree
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      const int xy = comp(x, y);
      if (xy < 0) continue;
      if (deg_[xy] != group_->product(deg_[x], deg_[y])) {
        rep.add("degree-functorial", {names_[x], names_[y]});
      }
    }
  }
  for (int o : objects_) {
    if (!group_->is_identity(deg_[o])) {
      rep.add("degree-of-unit", {names_[o]});
    }
  }
  rep.sort_canonical();
  return rep;
}

bool FiniteGradedGroupoid::is_slice(std::span<const int> subset) const {
  std::vector<char> dseen(n_, 0), rseen(n_, 0);
  for (int x : subset) {
    if (x < 0 || x >= n_) throw InputError("slice: morphism index out of range");
    if (dseen[d_[x]] || rseen[r_[x]]) return false;
    dseen[d_[x]] = 1;
    rseen[r_[x]] = 1;
  }
  return true;
}

std::optional<GroupElem> FiniteGradedGroupoid::homogeneous_degree_of(
    std::span<const int> subset) const {
  std::optional<GroupElem> common;
  for (int x : subset) {
    if (!common) {
      common = deg_.at(x);
    } else if (*common != deg_.at(x)) {
      return std::nullopt;
    }
  }
  return common;
}

bool FiniteGradedGroupoid::is_homogeneous(std::span<const int> subset) const {
  return subset.empty() || homogeneous_degree_of(subset).has_value();
}

Slice FiniteGradedGroupoid::make_slice(std::vector<int> members) const {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_slice(members)) {
    throw PreconditionError("slice: domain or range map is not injective");
  }
  Slice s;
  s.homogeneous_degree = homogeneous_degree_of(members);
  s.members = std::move(members);
  return s;
}

Slice FiniteGradedGroupoid::slice_product(const Slice& x,
                                          const Slice& y) const {
  if (!is_slice(x.members) || !is_slice(y.members)) {
    throw PreconditionError("slice product: inputs must be slices");
  }
  std::vector<int> members;
  for (int a : x.members) {
    for (int b : y.members) {
      if (d_[a] == r_[b]) members.push_back(comp(a, b));
    }
  }
  return make_slice(std::move(members));
}

Slice FiniteGradedGroupoid::slice_inverse(const Slice& x) const {
  if (!is_slice(x.members)) {
    throw PreconditionError("slice inverse: input must be a slice");
  }
  std::vector<int> members;
  for (int a : x.members) members.push_back(inv_[a]);
  return make_slice(std::move(members));
}

namespace {

void extend_slices(const FiniteGradedGroupoid& g,
                   const std::vector<int>& pool, std::size_t from,
                   std::vector<int>& current, std::vector<char>& dused,
                   std::vector<char>& rused, std::size_t guard,
                   std::vector<Slice>& out) {
  if (out.size() > guard) {
    throw ResourceError("slice enumeration exceeds the guard of " +
                        std::to_string(guard) + " slices");
  }
  Slice s;
  s.members = current;
  s.homogeneous_degree = g.homogeneous_degree_of(current);
  out.push_back(std::move(s));
  for (std::size_t k = from; k < pool.size(); ++k) {
    const int x = pool[k];
    if (dused[g.dmap(x)] || rused[g.rmap(x)]) continue;
    dused[g.dmap(x)] = 1;
    rused[g.rmap(x)] = 1;
    current.push_back(x);
    extend_slices(g, pool, k + 1, current, dused, rused, guard, out);
    current.pop_back();
    dused[g.dmap(x)] = 0;
    rused[g.rmap(x)] = 0;
  }
}

}  // namespace

std::vector<Slice> FiniteGradedGroupoid::enumerate_slices(
    bool homogeneous_only, std::size_t guard) const {
  std::vector<Slice> out;
  std::vector<int> current;
  std::vector<char> dused(n_, 0), rused(n_, 0);
  if (!homogeneous_only) {
    std::vector<int> pool(n_);
    std::iota(pool.begin(), pool.end(), 0);
    extend_slices(*this, pool, 0, current, dused, rused, guard, out);
  } else {
    // the empty slice once, then slices within each degree class
    out.push_back(Slice{});
    std::map<GroupElem, std::vector<int>> classes;
    for (int x = 0; x < n_; ++x) classes[deg_[x]].push_back(x);
    for (const auto& [degree, pool] : classes) {
      std::vector<Slice> chunk;
      extend_slices(*this, pool, 0, current, dused, rused, guard, chunk);
      for (Slice& s : chunk) {
        if (!s.members.empty()) out.push_back(std::move(s));
      }
      if (out.size() > guard) {
        throw ResourceError("slice enumeration exceeds the guard of " +
                            std::to_string(guard) + " slices");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json FiniteGradedGroupoid::to_json() const {
  nlohmann::json d = nlohmann::json::object();
  nlohmann::json r = nlohmann::json::object();
  nlohmann::json inv = nlohmann::json::object();
  nlohmann::json deg = nlohmann::json::object();
  for (int x = 0; x < n_; ++x) {
    d[names_[x]] = names_[d_[x]];
    r[names_[x]] = names_[r_[x]];
    inv[names_[x]] = names_[inv_[x]];
    deg[names_[x]] = group_->render(deg_[x]);
  }
  nlohmann::json comp = nlohmann::json::array();
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (this->comp(x, y) >= 0) {
        comp.push_back({names_[x], names_[y], names_[this->comp(x, y)]});
      }
    }
  }
  nlohmann::json objects = nlohmann::json::array();
  for (int o : objects_) objects.push_back(names_[o]);
  return {{"morphisms", names_}, {"objects", objects}, {"d", d},
          {"r", r},              {"comp", comp},       {"inv", inv},
          {"group", group_->to_json()}, {"deg", deg}};
}

std::shared_ptr<const FiniteGradedGroupoid> FiniteGradedGroupoid::from_json(
    const nlohmann::json& j) {
  for (const char* key :
       {"morphisms", "objects", "d", "r", "comp", "inv", "group", "deg"}) {
    if (!j.is_object() || !j.contains(key)) {
      throw InputError(std::string("groupoid json: missing key '") + key +
                       "'");
    }
  }
  std::vector<std::string> names =
      j.at("morphisms").get<std::vector<std::string>>();
  const int n = static_cast<int>(names.size());
  auto index = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) {
      throw InputError("groupoid json: unknown morphism '" + s + "'");
    }
    return static_cast<int>(it - names.begin());
  };
  auto group = group_from_json(j.at("group"));
  std::vector<int> objects;
  for (const auto& o : j.at("objects")) {
    objects.push_back(index(o.get<std::string>()));
  }
  std::vector<int> d(n), r(n), inv(n);
  std::vector<GroupElem> deg(n, group->identity());
  for (int x = 0; x < n; ++x) {
    d[x] = index(j.at("d").at(names[x]).get<std::string>());
    r[x] = index(j.at("r").at(names[x]).get<std::string>());
    inv[x] = index(j.at("inv").at(names[x]).get<std::string>());
    deg[x] = group->parse(j.at("deg").at(names[x]).get<std::string>());
  }
  std::vector<std::vector<int>> comp;
  for (const auto& triple : j.at("comp")) {
    comp.push_back({index(triple.at(0).get<std::string>()),
                    index(triple.at(1).get<std::string>()),
                    index(triple.at(2).get<std::string>())});
  }
  return std::make_shared<FiniteGradedGroupoid>(
      std::move(names), std::move(objects), std::move(d), std::move(r), comp,
      std::move(inv), std::move(group), std::move(deg));
}

std::string FiniteGradedGroupoid::to_dot() const {
  std::string out = "digraph groupoid {\n";
  for (int o : objects_) {
    out += "  \"" + names_[o] + "\";\n";
  }
  for (int x = 0; x < n_; ++x) {
    if (is_object_[x]) continue;
    out += "  \"" + names_[d_[x]] + "\" -> \"" + names_[r_[x]] + "\" [label=\"" +
           names_[x] + ":" + group_->render(deg_[x]) + "\"];\n";
  }
  out += "}\n";
  return out;
}

GrGpMorphism identity_grgp_morphism(
    std::shared_ptr<const FiniteGradedGroupoid> g) {
  GrGpMorphism f;
  f.map.resize(g->size());
  std::iota(f.map.begin(), f.map.end(), 0);
  f.source = g;
  f.target = std::move(g);
  return f;
}

GrGpMorphism compose(const GrGpMorphism& g, const GrGpMorphism& f) {
  if (f.target.get() != g.source.get()) {
    throw InputError("compose: morphisms are not composable");
  }
  GrGpMorphism out;
  out.source = f.source;
  out.target = g.target;
  out.map.reserve(f.map.size());
  for (int x : f.map) out.map.push_back(g.map.at(x));
  return out;
}

ValidationReport validate_grgp_morphism(const GrGpMorphism& f) {
  ValidationReport rep;
  rep.note("continuity and properness hold automatically for finite "
           "discrete groupoids");
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
  for (int o : s.objects()) {
    if (!t.is_object(f.map[o])) rep.add("functor-on-objects", {s.name(o)});
  }
  for (int x = 0; x < s.size(); ++x) {
    if (f.map[s.dmap(x)] != t.dmap(f.map[x])) {
      rep.add("functor-domain", {s.name(x)});
    }
    if (f.map[s.rmap(x)] != t.rmap(f.map[x])) {
      rep.add("functor-range", {s.name(x)});
    }
    if (f.map[s.inv(x)] != t.inv(f.map[x])) {
      rep.add("functor-inverse", {s.name(x)});
    }
  }
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y) {
      const int xy = s.comp(x, y);
      if (xy < 0) continue;
      if (t.comp(f.map[x], f.map[y]) != f.map[xy]) {
        rep.add("functor-composition", {s.name(x), s.name(y)});
      }
    }
  }
  for (int x = 0; x < s.size(); ++x) {
    if (t.degree(f.map[x]) != s.degree(x)) {
      rep.add("degree-preserving", {s.name(x)});
    }
  }
  // star-injective
  for (int x = 0; x < s.size(); ++x) {
    for (int y = x + 1; y < s.size(); ++y) {
      if (f.map[x] == f.map[y] && s.dmap(x) == s.dmap(y)) {
        rep.add("star-injective", {s.name(x), s.name(y)});
      }
    }
  }
  // star-surjective
  for (int e : s.objects()) {
    for (int y = 0; y < t.size(); ++y) {
      if (t.dmap(y) != f.map[e]) continue;
      bool found = false;
      for (int x = 0; x < s.size(); ++x) {
        if (s.dmap(x) == e && f.map[x] == y) {
          found = true;
          break;
        }
      }
      if (!found) rep.add("star-surjective", {s.name(e), t.name(y)});
    }
  }
  rep.sort_canonical();
  return rep;
}

}  // namespace gstone
