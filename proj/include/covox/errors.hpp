#pragma once

#include <stdexcept>
#include <string>

namespace covox {

//! Argument outside the validated/tested range of an operation.
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

//! Requested numerical tolerance cannot be met; carries the offending value.
class tolerance_error : public std::runtime_error {
public:
  tolerance_error(const std::string &what, double offending)
      : std::runtime_error(what), m_offending(offending) {}

  double offending_value() const noexcept { return m_offending; }

private:
  double m_offending;
};

} // namespace covox
