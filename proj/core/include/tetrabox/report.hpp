#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tetrabox {

struct Check {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

/// Ordered list of named identity checks; passes iff every entry passes.
class Report {
 public:
  void add(std::string name, bool pass, std::string lhs = {}, std::string rhs = {});
  void append(const Report& other);

  /// Records lhs == rhs, rendering both sides through `.str()`.
  template <typename T>
  void expect_equal(std::string name, const T& lhs, const T& rhs) {
    bool ok = lhs == rhs;
    add(std::move(name), ok, lhs.str(), rhs.str());
  }

  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
  [[nodiscard]] std::size_t passed() const;
  [[nodiscard]] std::size_t failed() const { return checks_.size() - passed(); }
  [[nodiscard]] bool all_pass() const { return failed() == 0; }

 private:
  std::vector<Check> checks_;
};

}  // namespace tetrabox
