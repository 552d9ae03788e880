#pragma once

#include <stdexcept>
#include <string>

namespace h2tea {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario text could not be parsed or a value broke an invariant. `key` is
// the dotted path of the offending field (empty for whole-document errors).
class config_error : public error {
 public:
  config_error(std::string key, const std::string& detail)
      : error(key.empty() ? detail : key + ": " + detail),
        key_(std::move(key)),
        detail_(detail) {}

  const std::string& key() const noexcept { return key_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string key_;
  std::string detail_;
};

// Argument outside an operation's mathematical domain.
class domain_error : public error {
 public:
  using error::error;
};

// IRR undefined: the cash-flow series never changes sign.
class no_sign_change : public error {
 public:
  no_sign_change() : error("no sign change in cash flows; IRR undefined") {}
};

// Two cost curves never cross in the searched carbon-price interval.
class no_crossing : public error {
 public:
  using error::error;
};

// Root bracket failure or iteration cap hit.
class solver_error : public error {
 public:
  solver_error(const std::string& what, double lo, double hi)
      : error(what), lo_(lo), hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace h2tea
