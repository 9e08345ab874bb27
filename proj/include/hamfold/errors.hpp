#pragma once

#include <stdexcept>
#include <string>

namespace hamfold {

// Error categories aligned with the CLI exit codes: domain errors exit 1,
// budget exhaustion exits 2, I/O and parse failures exit 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hamfold
