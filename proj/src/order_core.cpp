#include "gstone/order_core.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gstone/errors.hpp"

namespace gstone {

namespace {

void validate_poset_axioms(const std::vector<std::string>& names,
                           const kernels::LeqTable& leq, int bottom) {
  const int n = static_cast<int>(names.size());
  for (int a = 0; a < n; ++a) {
    if (!leq[static_cast<std::size_t>(a) * n + a]) {
      throw InputError("poset: relation is not reflexive at '" + names[a] +
                       "'");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[static_cast<std::size_t>(a) * n + b] &&
          leq[static_cast<std::size_t>(b) * n + a]) {
        throw InputError("poset: antisymmetry fails on '" + names[a] +
                         "' and '" + names[b] + "'");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!leq[static_cast<std::size_t>(a) * n + b]) continue;
      for (int c = 0; c < n; ++c) {
        if (leq[static_cast<std::size_t>(b) * n + c] &&
            !leq[static_cast<std::size_t>(a) * n + c]) {
          throw InputError("poset: transitivity fails on '" + names[a] +
                           "' <= '" + names[b] + "' <= '" + names[c] + "'");
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (!leq[static_cast<std::size_t>(bottom) * n + a]) {
      throw InputError("poset: bottom '" + names[bottom] +
                       "' is not below '" + names[a] + "'");
    }
  }
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> names,
                         kernels::LeqTable leq, const std::string& bottom)
    : n_(static_cast<int>(names.size())),
      names_(std::move(names)),
      leq_(std::move(leq)) {
  if (n_ == 0) throw InputError("poset: empty element set");
  if (!std::is_sorted(names_.begin(), names_.end())) {
    throw InputError("poset: element names must be given in sorted order");
  }
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
    throw InputError("poset: duplicate element name");
  }
  if (leq_.size() != static_cast<std::size_t>(n_) * n_) {
    throw InputError("poset: relation table has wrong size");
  }
  auto it = std::lower_bound(names_.begin(), names_.end(), bottom);
  if (it == names_.end() || *it != bottom) {
    throw InputError("poset: unknown bottom element '" + bottom + "'");
  }
  bottom_ = static_cast<int>(it - names_.begin());
  validate_poset_axioms(names_, leq_, bottom_);
  meets_ = kernels::meet_table(leq_, n_);
  joins_ = kernels::join_table(leq_, n_);
}

FinitePoset FinitePoset::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("bottom") ||
      !j.contains("leq")) {
    throw InputError("poset json: expected keys elements, bottom, leq");
  }
  std::vector<std::string> names =
      j.at("elements").get<std::vector<std::string>>();
  std::sort(names.begin(), names.end());
  const int n = static_cast<int>(names.size());
  auto index = [&](const std::string& s) {
    auto it = std::lower_bound(names.begin(), names.end(), s);
    if (it == names.end() || *it != s) {
      throw InputError("poset json: unknown element '" + s + "' in leq");
    }
    return static_cast<int>(it - names.begin());
  };
  kernels::LeqTable leq(static_cast<std::size_t>(n) * n, 0);
  for (const auto& pair : j.at("leq")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw InputError("poset json: leq entries must be pairs");
    }
    leq[static_cast<std::size_t>(index(pair.at(0).get<std::string>())) * n +
        index(pair.at(1).get<std::string>())] = 1;
  }
  return FinitePoset(std::move(names), std::move(leq),
                     j.at("bottom").get<std::string>());
}

nlohmann::json FinitePoset::to_json() const {
  nlohmann::json pairs = nlohmann::json::array();
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (leq(a, b)) pairs.push_back({names_[a], names_[b]});
    }
  }
  return {{"elements", names_}, {"bottom", names_[bottom_]}, {"leq", pairs}};
}

int FinitePoset::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) {
    throw InputError("poset: unknown element '" + name + "'");
  }
  return static_cast<int>(it - names_.begin());
}

void FinitePoset::check_indices(std::span<const int> subset) const {
  for (int x : subset) {
    if (x < 0 || x >= n_) throw InputError("poset: element index out of range");
  }
}

std::vector<int> FinitePoset::upward_closure(std::span<const int> subset) const {
  check_indices(subset);
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    for (int y : subset) {
      if (leq(y, x)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

std::vector<int> FinitePoset::downward_closure(
    std::span<const int> subset) const {
  check_indices(subset);
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    for (int y : subset) {
      if (leq(x, y)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

bool FinitePoset::is_filter(std::span<const int> subset) const {
  check_indices(subset);
  if (subset.empty()) return false;
  std::vector<char> in(n_, 0);
  for (int x : subset) in[x] = 1;
  if (in[bottom_]) return false;
  // upward closed
  for (int x : subset) {
    for (int y = 0; y < n_; ++y) {
      if (leq(x, y) && !in[y]) return false;
    }
  }
  // downward directed with witness inside the subset
  for (int x : subset) {
    for (int y : subset) {
      bool witness = false;
      for (int z : subset) {
        if (leq(z, x) && leq(z, y)) {
          witness = true;
          break;
        }
      }
      if (!witness) return false;
    }
  }
  return true;
}

std::vector<Filter> FinitePoset::filters() const {
  // In a finite poset every filter is the up-set of its least element, so
  // the principal up-sets at nonbottom elements enumerate all of them.
  std::vector<Filter> out;
  for (int x = 0; x < n_; ++x) {
    if (x == bottom_) continue;
    Filter f;
    f.minimum = x;
    const int single[1] = {x};
    f.members = upward_closure(single);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Filter> FinitePoset::ultrafilters() const {
  std::vector<Filter> all = filters();
  std::vector<Filter> out;
  for (const Filter& f : all) {
    bool maximal = true;
    for (const Filter& g : all) {
      if (f.members.size() < g.members.size() &&
          std::includes(g.members.begin(), g.members.end(), f.members.begin(),
                        f.members.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<int> FinitePoset::minimal_nonzero() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    if (x == bottom_) continue;
    bool minimal = true;
    for (int y = 0; y < n_; ++y) {
      if (y != bottom_ && y != x && leq(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    bool maximal = true;
    for (int y = 0; y < n_; ++y) {
      if (y != x && leq(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

std::optional<int> FinitePoset::top() const {
  for (int x = 0; x < n_; ++x) {
    bool above_all = true;
    for (int y = 0; y < n_; ++y) {
      if (!leq(y, x)) {
        above_all = false;
        break;
      }
    }
    if (above_all) return x;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::meet(int a, int b) const {
  int m = meets_[static_cast<std::size_t>(a) * n_ + b];
  if (m < 0) return std::nullopt;
  return m;
}

std::optional<int> FinitePoset::join(int a, int b) const {
  int m = joins_[static_cast<std::size_t>(a) * n_ + b];
  if (m < 0) return std::nullopt;
  return m;
}

std::optional<int> FinitePoset::meet_of(std::span<const int> subset) const {
  check_indices(subset);
  if (subset.empty()) return std::nullopt;
  // greatest common lower bound, computed from the table directly
  std::vector<int> lower;
  for (int x = 0; x < n_; ++x) {
    bool below_all = true;
    for (int y : subset) {
      if (!leq(x, y)) {
        below_all = false;
        break;
      }
    }
    if (below_all) lower.push_back(x);
  }
  for (int m : lower) {
    bool greatest = true;
    for (int x : lower) {
      if (!leq(x, m)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return m;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::join_of(std::span<const int> subset) const {
  check_indices(subset);
  if (subset.empty()) return std::nullopt;
  std::vector<int> upper;
  for (int x = 0; x < n_; ++x) {
    bool above_all = true;
    for (int y : subset) {
      if (!leq(y, x)) {
        above_all = false;
        break;
      }
    }
    if (above_all) upper.push_back(x);
  }
  for (int m : upper) {
    bool least = true;
    for (int x : upper) {
      if (!leq(m, x)) {
        least = false;
        break;
      }
    }
    if (least) return m;
  }
  return std::nullopt;
}

LatticeReport FinitePoset::lattice_report() const {
  LatticeReport rep;
  rep.all_meets = std::none_of(meets_.begin(), meets_.end(),
                               [](int m) { return m < 0; });
  rep.all_joins = std::none_of(joins_.begin(), joins_.end(),
                               [](int m) { return m < 0; });
  rep.has_top = top().has_value();
  if (rep.all_meets && rep.all_joins) {
    rep.distributive = true;
    for (int x = 0; x < n_ && rep.distributive; ++x) {
      for (int y = 0; y < n_ && rep.distributive; ++y) {
        for (int z = 0; z < n_; ++z) {
          const auto m = [&](int a, int b) {
            return meets_[static_cast<std::size_t>(a) * n_ + b];
          };
          const auto jn = [&](int a, int b) {
            return joins_[static_cast<std::size_t>(a) * n_ + b];
          };
          if (m(x, jn(y, z)) != jn(m(x, y), m(x, z)) ||
              jn(x, m(y, z)) != m(jn(x, y), jn(x, z))) {
            rep.distributive = false;
            break;
          }
        }
      }
    }
    if (rep.has_top) {
      const int t = *top();
      rep.complemented = true;
      for (int x = 0; x < n_; ++x) {
        bool found = false;
        for (int y = 0; y < n_; ++y) {
          if (meets_[static_cast<std::size_t>(x) * n_ + y] == bottom_ &&
              joins_[static_cast<std::size_t>(x) * n_ + y] == t) {
            found = true;
            break;
          }
        }
        if (!found) {
          rep.complemented = false;
          break;
        }
      }
    }
  }
  return rep;
}

std::optional<int> FinitePoset::complement_in_ideal(int x, int top) const {
  if (!leq(x, top)) return std::nullopt;
  for (int e = 0; e < n_; ++e) {
    if (!leq(e, top)) continue;
    if (meets_[static_cast<std::size_t>(x) * n_ + e] != bottom_) continue;
    // join of x and e inside the ideal must be the ideal's top: every common
    // upper bound within the ideal is top itself
    bool least_is_top = true;
    for (int w = 0; w < n_; ++w) {
      if (w != top && leq(w, top) && leq(x, w) && leq(e, w)) {
        least_is_top = false;
        break;
      }
    }
    if (least_is_top) return e;
  }
  return std::nullopt;
}

FinitePoset FinitePoset::restrict(std::span<const int> subset,
                                  int new_bottom) const {
  check_indices(subset);
  std::vector<int> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const int m = static_cast<int>(idx.size());
  std::vector<std::string> names;
  names.reserve(m);
  for (int i : idx) names.push_back(names_[i]);
  kernels::LeqTable sub(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      sub[static_cast<std::size_t>(a) * m + b] = leq(idx[a], idx[b]) ? 1 : 0;
    }
  }
  return FinitePoset(std::move(names), std::move(sub), names_[new_bottom]);
}

}  // namespace gstone
