#pragma once

#include <string>
#include <vector>

#include "braidcalc/linmap.hpp"

namespace braidcalc {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass; first differing entry otherwise
};

struct Report {
  std::string subject;
  std::vector<CheckItem> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }

  void add(std::string name, bool pass, std::string witness = "") {
    items.push_back({std::move(name), pass, std::move(witness)});
  }

  /// Records lhs == rhs under `name`; on failure the witness is the first
  /// differing entry in lexicographic (row, col) order, with both values.
  void check_equal(const std::string& name, const LinMap& lhs, const LinMap& rhs);

  void merge(const Report& other, const std::string& prefix = "");

  std::string summary() const;
};

}  // namespace braidcalc
