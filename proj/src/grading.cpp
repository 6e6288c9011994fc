#include "gstone/grading.hpp"

#include <algorithm>

#include "gstone/errors.hpp"

namespace gstone {

void GradedGroup::require(const GroupElem& a) const {
  if (!contains(a)) {
    throw InputError("group: foreign element");
  }
}

IntVectorGroup::IntVectorGroup(int rank) : rank_(rank) {
  if (rank < 0) throw InputError("int-vector group: negative rank");
}

GroupElem IntVectorGroup::identity() const {
  return GroupElem::vec(GroupElem::IntVec(rank_, 0));
}

GroupElem IntVectorGroup::product(const GroupElem& a,
                                  const GroupElem& b) const {
  require(a);
  require(b);
  GroupElem::IntVec v = a.vector();
  for (int i = 0; i < rank_; ++i) v[i] += b.vector()[i];
  return GroupElem::vec(std::move(v));
}

GroupElem IntVectorGroup::inverse(const GroupElem& a) const {
  require(a);
  GroupElem::IntVec v = a.vector();
  for (auto& x : v) x = -x;
  return GroupElem::vec(std::move(v));
}

bool IntVectorGroup::contains(const GroupElem& a) const {
  return !a.is_table() && static_cast<int>(a.vector().size()) == rank_;
}

std::string IntVectorGroup::render(const GroupElem& a) const {
  require(a);
  std::string out;
  for (int i = 0; i < rank_; ++i) {
    if (i > 0) out += ",";
    out += std::to_string(a.vector()[i]);
  }
  return out;
}

GroupElem IntVectorGroup::parse(const std::string& text) const {
  std::vector<std::string> parts;
  if (!text.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      parts.push_back(text.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (static_cast<int>(parts.size()) != rank_) {
    throw InputError("int-vector group: '" + text + "' does not have rank " +
                     std::to_string(rank_));
  }
  GroupElem::IntVec v;
  for (const std::string& part : parts) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InputError("int-vector group: cannot parse component '" + part +
                       "' of '" + text + "'");
    }
  }
  return GroupElem::vec(std::move(v));
}

nlohmann::json IntVectorGroup::to_json() const {
  return {{"kind", "int-vector"}, {"rank", rank_}};
}

ValidationReport check_group_table(
    const std::vector<std::string>& names,
    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InputError("group table: empty");
  if (static_cast<int>(table.size()) != n) {
    throw InputError("group table: row count differs from element count");
  }
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw InputError("group table: ragged row");
    }
    for (int entry : row) {
      if (entry < 0 || entry >= n) {
        throw InputError("group table: entry out of range");
      }
    }
  }

  ValidationReport rep;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          rep.add("group-associativity", {names[a], names[b], names[c]});
        }
      }
    }
  }
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      if (table[e][a] != a || table[a][e] != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    rep.add("group-identity", {});
  } else {
    for (int a = 0; a < n; ++a) {
      int count = 0;
      for (int b = 0; b < n; ++b) {
        if (table[a][b] == identity && table[b][a] == identity) ++count;
      }
      if (count != 1) rep.add("group-inverse", {names[a]});
    }
  }
  rep.sort_canonical();
  return rep;
}

bool is_group_table(const std::vector<std::string>& names,
                    const std::vector<std::vector<int>>& table) {
  return check_group_table(names, table).ok();
}

TableGroup::TableGroup(std::vector<std::string> names,
                       std::vector<std::vector<int>> table,
                       const std::string& identity)
    : names_(std::move(names)) {
  ValidationReport rep = check_group_table(names_, table);
  if (!rep.ok()) {
    throw InputError("table group: " + rep.summary());
  }
  const int n = static_cast<int>(names_.size());
  auto it = std::find(names_.begin(), names_.end(), identity);
  if (it == names_.end()) {
    throw InputError("table group: unknown identity '" + identity + "'");
  }
  identity_ = static_cast<int>(it - names_.begin());
  for (int a = 0; a < n; ++a) {
    if (table[identity_][a] != a) {
      throw InputError("table group: declared identity '" + identity +
                       "' is not the identity");
    }
  }
  table_.resize(static_cast<std::size_t>(n) * n);
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table_[static_cast<std::size_t>(a) * n + b] = table[a][b];
      if (table[a][b] == identity_) inverse_[a] = b;
    }
  }
}

GroupElem TableGroup::identity() const { return GroupElem::table(identity_); }

GroupElem TableGroup::product(const GroupElem& a, const GroupElem& b) const {
  require(a);
  require(b);
  return GroupElem::table(
      table_[static_cast<std::size_t>(a.table_index()) * size() +
             b.table_index()]);
}

GroupElem TableGroup::inverse(const GroupElem& a) const {
  require(a);
  return GroupElem::table(inverse_[a.table_index()]);
}

bool TableGroup::contains(const GroupElem& a) const {
  return a.is_table() && a.table_index() >= 0 && a.table_index() < size();
}

std::string TableGroup::render(const GroupElem& a) const {
  require(a);
  return names_[a.table_index()];
}

GroupElem TableGroup::parse(const std::string& text) const {
  auto it = std::find(names_.begin(), names_.end(), text);
  if (it == names_.end()) {
    throw InputError("table group: unknown element '" + text + "'");
  }
  return GroupElem::table(static_cast<int>(it - names_.begin()));
}

nlohmann::json TableGroup::to_json() const {
  const int n = size();
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < n; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < n; ++b) {
      row.push_back(names_[table_[static_cast<std::size_t>(a) * n + b]]);
    }
    rows.push_back(row);
  }
  return {{"kind", "table"},
          {"elements", names_},
          {"identity", names_[identity_]},
          {"table", rows}};
}

std::shared_ptr<const GradedGroup> group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw InputError("group json: expected an object with a 'kind' key");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "int-vector") {
    return std::make_shared<IntVectorGroup>(j.at("rank").get<int>());
  }
  if (kind == "table") {
    std::vector<std::string> names =
        j.at("elements").get<std::vector<std::string>>();
    auto index = [&](const std::string& s) {
      auto it = std::find(names.begin(), names.end(), s);
      if (it == names.end()) {
        throw InputError("group json: unknown element '" + s + "' in table");
      }
      return static_cast<int>(it - names.begin());
    };
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) {
      std::vector<int> r;
      for (const auto& entry : row) r.push_back(index(entry.get<std::string>()));
      table.push_back(std::move(r));
    }
    return std::make_shared<TableGroup>(std::move(names), std::move(table),
                                        j.at("identity").get<std::string>());
  }
  throw InputError("group json: unknown kind '" + kind + "'");
}

}  // namespace gstone
