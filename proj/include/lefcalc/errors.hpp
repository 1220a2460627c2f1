#pragma once

#include <stdexcept>
#include <string>

namespace lefcalc {

// Mathematical rejection: the input parses fine but fails a mathematical
// precondition (non-primitive class, wrong base, closure defect, ...).
// The CLI maps this to exit code 2, everything else to exit 1.
class MathError : public std::runtime_error {
 public:
  MathError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace lefcalc
