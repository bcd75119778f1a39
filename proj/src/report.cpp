#include "braidcalc/report.hpp"

#include <sstream>

namespace braidcalc {

void Report::check_equal(const std::string& name, const LinMap& lhs, const LinMap& rhs) {
  if (lhs.cod() != rhs.cod() || lhs.dom() != rhs.dom()) {
    std::ostringstream os;
    os << "shape " << lhs.cod() << "x" << lhs.dom() << " vs " << rhs.cod() << "x" << rhs.dom();
    add(name, false, os.str());
    return;
  }
  auto diff = lhs.first_difference(rhs);
  if (!diff) {
    add(name, true);
    return;
  }
  auto [r, c] = *diff;
  const Field& F = *lhs.field();
  std::ostringstream os;
  os << "entry (" << r << "," << c << "): lhs=" << F.to_string(lhs.at(r, c))
     << ", rhs=" << F.to_string(rhs.at(r, c));
  add(name, false, os.str());
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& it : other.items)
    items.push_back({prefix.empty() ? it.name : prefix + "." + it.name, it.pass, it.witness});
}

std::string Report::summary() const {
  std::ostringstream os;
  int passed = 0;
  for (const auto& it : items) passed += it.pass;
  os << subject << ": " << passed << "/" << items.size() << " checks passed";
  if (const CheckItem* f = first_failure()) os << "; first failure: " << f->name << " [" << f->witness << "]";
  return os.str();
}

}  // namespace braidcalc
