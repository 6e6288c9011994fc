#include "gstone/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gstone/errors.hpp"

namespace gstone {

GradedSet GradedSet::make(std::shared_ptr<const GradedGroup> group,
                          std::vector<std::pair<std::string, GroupElem>> pts) {
  if (!group) throw InputError("graded set: missing group");
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  GradedSet out;
  out.group = std::move(group);
  for (auto& [name, deg] : pts) {
    if (!out.points.empty() && out.points.back() == name) {
      throw InputError("graded set: duplicate point '" + name + "'");
    }
    if (!out.group->contains(deg)) {
      throw InputError("graded set: degree of '" + name +
                       "' is not a group element");
    }
    out.points.push_back(name);
    out.degree.push_back(deg);
  }
  return out;
}

GradedSet GradedSet::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("group")) {
    throw InputError("graded set json: expected keys points, group");
  }
  auto group = group_from_json(j.at("group"));
  std::vector<std::pair<std::string, GroupElem>> pts;
  for (const auto& [name, deg] : j.at("points").items()) {
    pts.emplace_back(name, group->parse(deg.get<std::string>()));
  }
  return make(std::move(group), std::move(pts));
}

nlohmann::json GradedSet::to_json() const {
  nlohmann::json pts = nlohmann::json::object();
  for (std::size_t i = 0; i < points.size(); ++i) {
    pts[points[i]] = group->render(degree[i]);
  }
  return {{"points", pts}, {"group", group->to_json()}};
}

bool GradedSet::trivial_grading() const {
  for (std::size_t i = 1; i < degree.size(); ++i) {
    if (degree[i] != degree[0]) return false;
  }
  return true;
}

namespace {

using PartialMap = std::vector<std::pair<int, int>>;  // (domain, image)

std::string map_name(const GradedSet& set, const PartialMap& map) {
  if (map.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i > 0) out += "|";
    out += set.points[map[i].first] + ">" + set.points[map[i].second];
  }
  return out;
}

void enumerate_partial_maps(int n, std::vector<char>& image_used,
                            PartialMap& current, int next_domain,
                            std::vector<PartialMap>& out) {
  if (next_domain == n) {
    out.push_back(current);
    return;
  }
  enumerate_partial_maps(n, image_used, current, next_domain + 1, out);
  for (int y = 0; y < n; ++y) {
    if (image_used[y]) continue;
    image_used[y] = 1;
    current.emplace_back(next_domain, y);
    enumerate_partial_maps(n, image_used, current, next_domain + 1, out);
    current.pop_back();
    image_used[y] = 0;
  }
}

// (f g)(x) = f(g(x)) on the domain where that composite is defined
PartialMap compose_maps(const PartialMap& f, const PartialMap& g) {
  PartialMap out;
  for (const auto& [x, y] : g) {
    for (const auto& [u, v] : f) {
      if (u == y) {
        out.emplace_back(x, v);
        break;
      }
    }
  }
  return out;
}

PartialMap invert_map(const PartialMap& f) {
  PartialMap out;
  for (const auto& [x, y] : f) out.emplace_back(y, x);
  std::sort(out.begin(), out.end());
  return out;
}

// degree shift of a nonempty homogeneous map: deg(f(x)) deg(x)^-1
std::optional<GroupElem> map_degree(const GradedSet& set,
                                    const PartialMap& map) {
  std::optional<GroupElem> common;
  for (const auto& [x, y] : map) {
    GroupElem shift =
        set.group->product(set.degree[y], set.group->inverse(set.degree[x]));
    if (!common) {
      common = shift;
    } else if (*common != shift) {
      return std::nullopt;
    }
  }
  return common;
}

}  // namespace

SymmetricInverseMonoid graded_symmetric_inverse_monoid(
    const GradedSet& set, std::size_t max_points) {
  const int n = static_cast<int>(set.points.size());
  if (n == 0) throw InputError("symmetric inverse monoid: empty point set");
  if (static_cast<std::size_t>(n) > max_points) {
    throw ResourceError("symmetric inverse monoid: " + std::to_string(n) +
                        " points exceed the guard of " +
                        std::to_string(max_points));
  }
  std::vector<PartialMap> all;
  std::vector<char> image_used(n, 0);
  PartialMap current;
  enumerate_partial_maps(n, image_used, current, 0, all);

  std::vector<PartialMap> maps;
  std::vector<GroupElem> degrees;
  for (const PartialMap& m : all) {
    if (m.empty()) {
      maps.push_back(m);  // zero
      degrees.push_back(set.group->identity());
      continue;
    }
    const auto deg = map_degree(set, m);
    if (deg) {
      maps.push_back(m);
      degrees.push_back(*deg);
    }
  }
  const int count = static_cast<int>(maps.size());
  std::vector<std::string> names;
  std::map<PartialMap, int> index;
  for (int i = 0; i < count; ++i) {
    names.push_back(map_name(set, maps[i]));
    index[maps[i]] = i;
  }
  std::vector<std::vector<int>> mul(count, std::vector<int>(count));
  std::vector<int> inv(count);
  for (int a = 0; a < count; ++a) {
    inv[a] = index.at(invert_map(maps[a]));
    for (int b = 0; b < count; ++b) {
      PartialMap prod = compose_maps(maps[a], maps[b]);
      auto it = index.find(prod);
      // an inhomogeneous composite cannot arise from homogeneous factors
      if (it == index.end()) {
        throw InputError("symmetric inverse monoid: composite escaped");
      }
      mul[a][b] = it->second;
    }
  }
  auto sg = std::make_shared<GradedInverseSemigroup>(
      names, "0", mul, inv, set.group, degrees);
  SymmetricInverseMonoid out;
  out.set = set;
  out.maps.resize(count);
  for (int i = 0; i < count; ++i) {
    out.maps[sg->index_of(names[i])] = maps[i];
  }
  out.semigroup = std::move(sg);
  return out;
}

SymmetricInverseMonoid symmetric_inverse_monoid(std::vector<std::string> points,
                                                std::size_t max_points) {
  auto group = std::make_shared<IntVectorGroup>(1);
  std::vector<std::pair<std::string, GroupElem>> pts;
  for (auto& p : points) pts.emplace_back(std::move(p), group->identity());
  return graded_symmetric_inverse_monoid(GradedSet::make(group, pts),
                                         max_points);
}

PairGroupoid pair_groupoid(const GradedSet& set) {
  const int n = static_cast<int>(set.points.size());
  if (n == 0) throw InputError("pair groupoid: empty point set");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  auto midx = [&](int x, int y) { return x * n + y; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      names.push_back("(" + set.points[x] + "," + set.points[y] + ")");
      pairs.emplace_back(x, y);
    }
  }
  std::vector<int> objects, d(n * n), r(n * n), inv(n * n);
  std::vector<GroupElem> degrees(n * n, set.group->identity());
  for (int x = 0; x < n; ++x) objects.push_back(midx(x, x));
  std::vector<std::vector<int>> comp;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      d[midx(x, y)] = midx(y, y);
      r[midx(x, y)] = midx(x, x);
      inv[midx(x, y)] = midx(y, x);
      // deg((x,y)) = deg(x) deg(y)^-1, so that the slice {(x,y)} and the
      // partial bijection y -> x get the same degree
      degrees[midx(x, y)] = set.group->product(
          set.degree[x], set.group->inverse(set.degree[y]));
      for (int z = 0; z < n; ++z) {
        comp.push_back({midx(x, y), midx(y, z), midx(x, z)});
      }
    }
  }
  auto g = std::make_shared<FiniteGradedGroupoid>(
      names, objects, d, r, comp, inv, set.group, degrees);
  PairGroupoid out;
  out.set = set;
  out.pair_of.resize(n * n);
  for (int m = 0; m < n * n; ++m) {
    out.pair_of[g->index_of(names[m])] = pairs[m];
  }
  out.groupoid = std::move(g);
  return out;
}

FiniteGraph FiniteGraph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw InputError("graph json: expected keys vertices, edges");
  }
  FiniteGraph g;
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  for (const auto& e : j.at("edges")) {
    g.edges.push_back({e.at("name").get<std::string>(),
                       e.at("src").get<std::string>(),
                       e.at("rng").get<std::string>()});
  }
  return g;
}

nlohmann::json FiniteGraph::to_json() const {
  nlohmann::json edges_json = nlohmann::json::array();
  for (const auto& e : edges) {
    edges_json.push_back({{"name", e.name}, {"src", e.src}, {"rng", e.rng}});
  }
  return {{"vertices", vertices}, {"edges", edges_json}};
}

namespace {

struct Path {
  int start;              // vertex index
  std::vector<int> edges; // edge indices, composed left to right

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

struct GraphData {
  std::vector<std::string> vertices;
  std::vector<FiniteGraph::Edge> edges;
  std::vector<int> esrc, erng;

  int path_range(const Path& p) const {
    return p.edges.empty() ? p.start : erng[p.edges.back()];
  }

  std::string path_name(const Path& p) const {
    if (p.edges.empty()) return vertices[p.start];
    std::string out;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (i > 0) out += ".";
      out += edges[p.edges[i]].name;
    }
    return out;
  }
};

// remainder t with b = a.t, if a is a prefix of b
std::optional<Path> path_remainder(const GraphData& g, const Path& a,
                                   const Path& b) {
  if (a.start != b.start || a.edges.size() > b.edges.size()) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    if (a.edges[i] != b.edges[i]) return std::nullopt;
  }
  Path t;
  t.start = g.path_range(a);
  t.edges.assign(b.edges.begin() + a.edges.size(), b.edges.end());
  return t;
}

Path path_concat(const GraphData& g, const Path& a, const Path& b) {
  Path out = a;
  (void)g;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

struct PathPair {
  Path p, q;
  friend bool operator==(const PathPair&, const PathPair&) = default;
  friend auto operator<=>(const PathPair&, const PathPair&) = default;
};

}  // namespace

std::shared_ptr<const GradedInverseSemigroup> graph_inverse_semigroup(
    const FiniteGraph& graph, std::size_t max_elements) {
  GraphData g;
  g.vertices = graph.vertices;
  std::sort(g.vertices.begin(), g.vertices.end());
  if (std::adjacent_find(g.vertices.begin(), g.vertices.end()) !=
      g.vertices.end()) {
    throw InputError("graph: duplicate vertex name");
  }
  auto vindex = [&](const std::string& v) {
    auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), v);
    if (it == g.vertices.end() || *it != v) {
      throw InputError("graph: unknown vertex '" + v + "'");
    }
    return static_cast<int>(it - g.vertices.begin());
  };
  std::set<std::string> edge_names;
  for (const auto& e : graph.edges) {
    if (!edge_names.insert(e.name).second) {
      throw InputError("graph: duplicate edge name '" + e.name + "'");
    }
    if (std::binary_search(g.vertices.begin(), g.vertices.end(), e.name)) {
      throw InputError("graph: edge name '" + e.name + "' clashes with a "
                       "vertex name");
    }
    g.edges.push_back(e);
    g.esrc.push_back(vindex(e.src));
    g.erng.push_back(vindex(e.rng));
  }

  // acyclicity, reporting a witness cycle
  const int nv = static_cast<int>(g.vertices.size());
  {
    std::vector<int> state(nv, 0);  // 0 new, 1 on stack, 2 done
    std::vector<int> stack, via;    // via[i] is the edge stack[i] -> stack[i+1]
    auto describe = [&](int v) {
      std::size_t start = 0;
      while (start < stack.size() && stack[start] != v) ++start;
      std::string out = g.vertices[v];
      for (std::size_t i = start; i < via.size(); ++i) {
        const int next = i + 1 < stack.size() ? stack[i + 1] : v;
        out += " -" + g.edges[via[i]].name + "-> " + g.vertices[next];
      }
      return out;
    };
    auto dfs = [&](auto&& self, int v) -> void {
      state[v] = 1;
      stack.push_back(v);
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (g.esrc[e] != v) continue;
        const int w = g.erng[e];
        via.push_back(e);
        if (state[w] == 1) {
          throw InputError("graph: not acyclic; cycle " + describe(w));
        }
        if (state[w] == 0) self(self, w);
        via.pop_back();
      }
      stack.pop_back();
      state[v] = 2;
    };
    for (int v = 0; v < nv; ++v) {
      if (state[v] == 0) dfs(dfs, v);
    }
  }

  // all paths, trivial ones included
  std::vector<Path> paths;
  for (int v = 0; v < nv; ++v) paths.push_back({v, {}});
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const Path p = paths[k];
    const int end = g.path_range(p);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      if (g.esrc[e] != end) continue;
      Path q = p;
      q.edges.push_back(e);
      paths.push_back(std::move(q));
    }
    if (paths.size() > 4 * max_elements) {
      throw ResourceError("graph inverse semigroup: path count exceeds guard");
    }
  }

  using Elem = PathPair;
  std::vector<Elem> elems;
  elems.push_back({});  // slot 0 reserved for the zero
  for (const Path& p : paths) {
    for (const Path& q : paths) {
      if (g.path_range(p) == g.path_range(q)) elems.push_back({p, q});
    }
  }
  if (elems.size() > max_elements) {
    throw ResourceError("graph inverse semigroup: " +
                        std::to_string(elems.size()) +
                        " elements exceed the guard of " +
                        std::to_string(max_elements));
  }
  const int n = static_cast<int>(elems.size());
  auto elem_name = [&](int i) -> std::string {
    if (i == 0) return "0";
    const auto& [p, q] = elems[i];
    if (q.edges.empty() && p.edges.empty()) return g.vertices[p.start];
    if (q.edges.empty()) return g.path_name(p);
    return (p.edges.empty() ? std::string() : g.path_name(p)) + "(" +
           g.path_name(q) + ")*";
  };
  std::map<Elem, int> index;
  for (int i = 1; i < n; ++i) index[elems[i]] = i;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(elem_name(i));

  std::vector<std::vector<int>> mul(n, std::vector<int>(n, 0));
  std::vector<int> inv(n, 0);
  auto group = std::make_shared<IntVectorGroup>(1);
  std::vector<GroupElem> degrees(n, group->identity());
  for (int i = 1; i < n; ++i) {
    inv[i] = index.at({elems[i].q, elems[i].p});
    degrees[i] = GroupElem::vec(
        {static_cast<std::int64_t>(elems[i].p.edges.size()) -
         static_cast<std::int64_t>(elems[i].q.edges.size())});
  }
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      const auto& [p, q] = elems[a];
      const auto& [r, s] = elems[b];
      if (auto t = path_remainder(g, q, r)) {
        mul[a][b] = index.at({path_concat(g, p, *t), s});
      } else if (auto u = path_remainder(g, r, q)) {
        mul[a][b] = index.at({p, path_concat(g, s, *u)});
      } else {
        mul[a][b] = 0;
      }
    }
  }
  return std::make_shared<GradedInverseSemigroup>(names, "0", mul, inv, group,
                                                  degrees);
}

namespace {

std::string ideal_name(const GradedInverseSemigroup& s,
                       const std::vector<int>& generators) {
  std::vector<std::string> names;
  for (int x : generators) names.push_back(s.name(x));
  std::sort(names.begin(), names.end());
  std::string out = "<";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ",";
    out += names[i];
  }
  return out + ">";
}

std::vector<int> maximal_of(const FinitePoset& p,
                            const std::vector<int>& members) {
  std::vector<int> out;
  for (int x : members) {
    bool maximal = true;
    for (int y : members) {
      if (y != x && p.leq(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

void extend_antichains(const GradedInverseSemigroup& s, const FinitePoset& p,
                       bool homogeneous_only, int from,
                       std::vector<int>& current, std::size_t guard,
                       std::vector<std::vector<int>>& out) {
  {
    std::vector<int> ideal = p.downward_closure(current);
    if (ideal.empty()) ideal.push_back(s.zero());  // the zero ideal
    // the definition asks for pairwise compatibility of the whole ideal
    bool compatible = true;
    for (std::size_t i = 0; i < ideal.size() && compatible; ++i) {
      for (std::size_t j = i + 1; j < ideal.size(); ++j) {
        if (!is_compatible(s.compatibility(ideal[i], ideal[j]))) {
          compatible = false;
          break;
        }
      }
    }
    if (compatible) {
      out.push_back(std::move(ideal));
      if (out.size() > guard) {
        throw ResourceError("ideal enumeration exceeds the guard of " +
                            std::to_string(guard));
      }
    } else {
      return;  // no extension can repair an incompatible ideal
    }
  }
  for (int x = from; x < s.size(); ++x) {
    if (x == s.zero()) continue;
    bool ok = true;
    for (int y : current) {
      if (p.leq(x, y) || p.leq(y, x) ||
          !is_compatible(s.compatibility(x, y))) {
        ok = false;
        break;
      }
    }
    if (ok && homogeneous_only && !current.empty()) {
      if (current[0] != s.zero() && s.degree(x) != s.degree(current[0])) {
        ok = false;
      }
    }
    if (!ok) continue;
    current.push_back(x);
    extend_antichains(s, p, homogeneous_only, x + 1, current, guard, out);
    current.pop_back();
  }
}

// all compatible order ideals (homogeneous ones only, if requested), each
// as a sorted member set containing the zero
std::vector<std::vector<int>> compatible_ideals(
    const GradedInverseSemigroup& s, bool homogeneous_only,
    std::size_t guard) {
  const FinitePoset& p = s.natural_order();
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  extend_antichains(s, p, homogeneous_only, 0, current, guard, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct IdealAlgebra {
  std::vector<std::vector<int>> ideals;       // sorted member sets
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> mul;          // ideal x ideal -> ideal
  std::vector<int> inv;
  std::vector<std::optional<GroupElem>> degree;  // nullopt for the zero ideal
  int zero = -1;
};

IdealAlgebra ideal_algebra(const GradedInverseSemigroup& s,
                           bool homogeneous_only, std::size_t guard) {
  IdealAlgebra alg;
  alg.ideals = compatible_ideals(s, homogeneous_only, guard);
  const int m = static_cast<int>(alg.ideals.size());
  for (int i = 0; i < m; ++i) {
    alg.index[alg.ideals[i]] = i;
    if (alg.ideals[i] == std::vector<int>{s.zero()}) alg.zero = i;
  }
  if (alg.zero < 0) throw InputError("ideal semigroup: missing zero ideal");
  alg.mul.assign(m, std::vector<int>(m, -1));
  alg.inv.assign(m, -1);
  alg.degree.resize(m);
  for (int i = 0; i < m; ++i) {
    std::optional<GroupElem> deg;
    bool homogeneous = true;
    for (int x : alg.ideals[i]) {
      if (x == s.zero()) continue;
      if (!deg) {
        deg = s.degree(x);
      } else if (*deg != s.degree(x)) {
        homogeneous = false;  // only arises in the non-graded case
        break;
      }
    }
    alg.degree[i] = homogeneous ? deg : std::nullopt;
    std::set<int> inv_members;
    for (int x : alg.ideals[i]) inv_members.insert(s.inv(x));
    std::vector<int> inv_vec(inv_members.begin(), inv_members.end());
    auto it = alg.index.find(inv_vec);
    if (it == alg.index.end()) {
      throw InputError("ideal semigroup: inverse escapes the enumeration");
    }
    alg.inv[i] = it->second;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::set<int> prod;
      for (int x : alg.ideals[i]) {
        for (int y : alg.ideals[j]) {
          prod.insert(s.mul(x, y));
        }
      }
      std::vector<int> prod_vec(prod.begin(), prod.end());
      auto it = alg.index.find(prod_vec);
      if (it == alg.index.end()) {
        throw InputError("ideal semigroup: product escapes the enumeration");
      }
      alg.mul[i][j] = it->second;
    }
  }
  return alg;
}

}  // namespace

IdealSemigroup fc_gr(std::shared_ptr<const GradedInverseSemigroup> s,
                     std::size_t guard) {
  const IdealAlgebra alg = ideal_algebra(*s, true, guard);
  const int m = static_cast<int>(alg.ideals.size());
  const FinitePoset& p = s->natural_order();
  std::vector<std::string> names;
  std::vector<GroupElem> degrees;
  for (int i = 0; i < m; ++i) {
    names.push_back(ideal_name(*s, maximal_of(p, alg.ideals[i])));
    degrees.push_back(alg.degree[i].value_or(s->group()->identity()));
  }
  auto sg = std::make_shared<GradedInverseSemigroup>(
      names, names[alg.zero], alg.mul, alg.inv, s->group(), degrees);
  IdealSemigroup out;
  out.base = std::move(s);
  out.members_of.resize(m);
  for (int i = 0; i < m; ++i) {
    out.members_of[sg->index_of(names[i])] = alg.ideals[i];
  }
  out.semigroup = std::move(sg);
  return out;
}

namespace {

// I -> J iff every nonzero member of I meets J nontrivially
bool ideal_arrow(const GradedInverseSemigroup& s,
                 const std::vector<int>& lhs, const std::vector<int>& rhs) {
  for (int r : lhs) {
    if (r == s.zero()) continue;
    bool hit = false;
    for (int t : rhs) {
      const auto m = s.meet(r, t);
      if (m && *m != s.zero()) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

CompletionResult distributive_completion(
    std::shared_ptr<const GradedInverseSemigroup> s, bool graded,
    std::size_t guard) {
  CompletionResult out;
  QuotientResult q = s->quotient_by_biarrow();
  out.separative_quotient = q.semigroup;
  out.quotient_class_of = std::move(q.class_of);
  const GradedInverseSemigroup& sq = *out.separative_quotient;

  const IdealAlgebra alg = ideal_algebra(sq, graded, guard);
  const int m = static_cast<int>(alg.ideals.size());

  // the == relation, computed from ideal membership
  std::vector<int> class_rep(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (class_rep[j] == j && ideal_arrow(sq, alg.ideals[i], alg.ideals[j]) &&
          ideal_arrow(sq, alg.ideals[j], alg.ideals[i])) {
        class_rep[i] = j;
        break;
      }
    }
    if (class_rep[i] < 0) class_rep[i] = i;
  }
  std::vector<int> reps;
  for (int i = 0; i < m; ++i) {
    if (class_rep[i] == i) reps.push_back(i);
  }
  const int k = static_cast<int>(reps.size());
  std::vector<int> class_index(m, -1);
  for (int c = 0; c < k; ++c) class_index[reps[c]] = c;
  std::vector<int> class_of(m);
  for (int i = 0; i < m; ++i) class_of[i] = class_index[class_rep[i]];

  const FinitePoset& pq = sq.natural_order();
  std::vector<std::string> names;
  std::vector<GroupElem> degrees;
  for (int c = 0; c < k; ++c) {
    names.push_back(ideal_name(sq, maximal_of(pq, alg.ideals[reps[c]])));
    // D(S) carries the trivial grading; D^gr(S) inherits the ideal degrees
    degrees.push_back(graded
                          ? alg.degree[reps[c]].value_or(sq.group()->identity())
                          : sq.group()->identity());
  }
  std::vector<std::vector<int>> mul(k, std::vector<int>(k));
  std::vector<int> inv(k);
  for (int a = 0; a < k; ++a) {
    inv[a] = class_of[alg.inv[reps[a]]];
    for (int b = 0; b < k; ++b) {
      mul[a][b] = class_of[alg.mul[reps[a]][reps[b]]];
    }
  }
  // congruence check across all ideal pairs
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (class_of[alg.mul[i][j]] != mul[class_of[i]][class_of[j]]) {
        throw InputError("completion: == is not a congruence");
      }
    }
  }
  auto completion = std::make_shared<GradedInverseSemigroup>(
      names, names[class_of[alg.zero]], mul, inv, sq.group(), degrees);
  out.representative_ideal.resize(k);
  for (int c = 0; c < k; ++c) {
    out.representative_ideal[completion->index_of(names[c])] =
        alg.ideals[reps[c]];
  }
  out.completion = std::move(completion);

  // pre-Boolean means: D(S), the non-graded completion, is Boolean
  if (graded) {
    CompletionResult plain = distributive_completion(s, false, guard);
    out.pre_boolean = plain.pre_boolean;
  } else {
    out.pre_boolean = out.completion->graded_boolean_report().nongraded;
  }
  return out;
}

}  // namespace gstone
