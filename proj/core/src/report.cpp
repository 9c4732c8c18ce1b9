#include "tetrabox/report.hpp"

#include <algorithm>

namespace tetrabox {

void Report::add(std::string name, bool pass, std::string lhs, std::string rhs) {
  checks_.push_back(Check{std::move(name), pass, std::move(lhs), std::move(rhs)});
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; }));
}

}  // namespace tetrabox
