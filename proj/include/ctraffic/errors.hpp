#pragma once

#include <stdexcept>
#include <string>

namespace ctraffic {

/// Argument outside the domain an operation is defined on (m > n, negative n, ...).
class DomainError : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

/// A kappa query whose exponents do not fill the top degree (a + 2b != 2n).
class InvalidQuery : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace ctraffic
