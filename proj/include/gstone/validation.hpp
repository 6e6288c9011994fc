#ifndef GSTONE_VALIDATION_HPP_
#define GSTONE_VALIDATION_HPP_

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "json.hpp"

namespace gstone {

// One failed axiom together with the elements witnessing the failure.
struct ValidationIssue {
  std::string axiom;
  std::vector<std::string> witness;

  friend auto operator<=>(const ValidationIssue&,
                          const ValidationIssue&) = default;
};

// Structured result of a validator: an empty issue list means the object
// passed. Reports are sorted before they leave a validator so that parallel
// scans stay deterministic.
class ValidationReport {
 public:
  bool ok() const { return issues_.empty(); }

  void add(std::string axiom, std::vector<std::string> witness = {}) {
    issues_.push_back({std::move(axiom), std::move(witness)});
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  void merge(const ValidationReport& other) {
    issues_.insert(issues_.end(), other.issues_.begin(), other.issues_.end());
    notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
  }

  void sort_canonical() {
    std::sort(issues_.begin(), issues_.end());
    issues_.erase(std::unique(issues_.begin(), issues_.end()), issues_.end());
  }

  const std::vector<ValidationIssue>& issues() const { return issues_; }
  const std::vector<std::string>& notes() const { return notes_; }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& issue : issues_) {
      arr.push_back({{"axiom", issue.axiom}, {"witness", issue.witness}});
    }
    return {{"ok", ok()}, {"issues", arr}, {"notes", notes_}};
  }

  std::string summary() const {
    if (ok()) {
      return "valid";
    }
    std::string s = "invalid: " + issues_.front().axiom;
    if (!issues_.front().witness.empty()) {
      s += " [";
      for (std::size_t i = 0; i < issues_.front().witness.size(); ++i) {
        if (i > 0) s += ", ";
        s += issues_.front().witness[i];
      }
      s += "]";
    }
    if (issues_.size() > 1) {
      s += " (+" + std::to_string(issues_.size() - 1) + " more)";
    }
    return s;
  }

 private:
  std::vector<ValidationIssue> issues_;
  std::vector<std::string> notes_;
};

}  // namespace gstone

#endif  // GSTONE_VALIDATION_HPP_
