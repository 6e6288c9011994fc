#ifndef GSTONE_ORDER_CORE_HPP_
#define GSTONE_ORDER_CORE_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gstone/kernels.hpp"
#include "gstone/validation.hpp"
#include "json.hpp"

namespace gstone {

// A filter on a finite poset: upward closed, proper (no bottom), downward
// directed with the witness inside the filter. In a finite poset every
// filter has a least element, retained here.
struct Filter {
  std::vector<int> members;  // sorted indices
  int minimum = -1;

  friend bool operator==(const Filter&, const Filter&) = default;
};

struct LatticeReport {
  bool all_meets = false;
  bool all_joins = false;
  bool distributive = false;    // both laws, where meets/joins exist
  bool has_top = false;
  bool complemented = false;    // every element has a complement
  bool is_lattice() const { return all_meets && all_joins; }
  bool is_distributive_lattice() const { return is_lattice() && distributive; }
  bool is_boolean_algebra() const {
    return is_distributive_lattice() && has_top && complemented;
  }
};

// A finite partially ordered set with bottom element, stored as an explicit
// relation table. Element identifiers are opaque strings; the element list
// is kept in canonical sorted order. Construction validates the poset
// axioms and rejects violations with InputError.
class FinitePoset {
 public:
  // `leq[a*n+b] != 0` means names[a] <= names[b]; names must be sorted and
  // distinct.
  FinitePoset(std::vector<std::string> names, kernels::LeqTable leq,
              const std::string& bottom);

  static FinitePoset from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int size() const { return n_; }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index_of(const std::string& name) const;  // InputError if unknown
  int bottom() const { return bottom_; }
  bool leq(int a, int b) const {
    return leq_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  const kernels::LeqTable& leq_table() const { return leq_; }

  std::vector<int> upward_closure(std::span<const int> subset) const;
  std::vector<int> downward_closure(std::span<const int> subset) const;
  bool is_filter(std::span<const int> subset) const;

  // All maximal filters, found by enumerating the filters of the poset and
  // discarding those properly contained in another. Canonical order: by
  // minimum element index.
  std::vector<Filter> ultrafilters() const;
  std::vector<Filter> filters() const;

  std::vector<int> minimal_nonzero() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> top() const;

  // Meets and joins from the cached all-pairs tables.
  std::optional<int> meet(int a, int b) const;
  std::optional<int> join(int a, int b) const;
  std::optional<int> meet_of(std::span<const int> subset) const;
  std::optional<int> join_of(std::span<const int> subset) const;
  const std::vector<int>& meet_table() const { return meets_; }
  const std::vector<int>& join_table() const { return joins_; }

  LatticeReport lattice_report() const;
  bool is_boolean_algebra() const { return lattice_report().is_boolean_algebra(); }

  // Complement of x inside the principal order ideal {top}^down, when that
  // ideal is a Boolean algebra: the unique e <= top with x ^ e = bottom and
  // x v e = top, joins taken inside the ideal.
  std::optional<int> complement_in_ideal(int x, int top) const;

  // Sub-poset on `subset` (which must be closed enough to contain
  // new_bottom and stay a poset; names are preserved).
  FinitePoset restrict(std::span<const int> subset, int new_bottom) const;

 private:
  void check_indices(std::span<const int> subset) const;

  int n_;
  std::vector<std::string> names_;
  kernels::LeqTable leq_;
  int bottom_;
  std::vector<int> meets_;
  std::vector<int> joins_;
};

}  // namespace gstone

#endif  // GSTONE_ORDER_CORE_HPP_
