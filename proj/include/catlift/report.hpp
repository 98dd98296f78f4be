#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catlift {

// One failed diagram or typing condition, with enough data to reproduce it:
// the check id plus (role, value) pairs naming the objects/morphisms involved.
struct Violation {
  std::string check;
  std::vector<std::pair<std::string, std::string>> where;
  std::string detail;
};

// Checkers return every violation they find rather than stopping at the
// first; tests and the CLI both consume this structure.
struct Report {
  std::vector<Violation> items;

  bool ok() const { return items.empty(); }

  void add(std::string check,
           std::vector<std::pair<std::string, std::string>> where = {},
           std::string detail = {}) {
    items.push_back({std::move(check), std::move(where), std::move(detail)});
  }

  void merge(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }

  bool has(std::string_view check) const {
    for (const auto& v : items)
      if (v.check == check) return true;
    return false;
  }

  std::string to_string() const;
};

}  // namespace catlift
