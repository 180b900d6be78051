#pragma once

#include <stdexcept>
#include <string>

namespace cfw {

/// Malformed or invalid input document (spec file, CLI usage).
/// `path()` points at the offending field, e.g. "automaton.outputs[1]".
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what),
        path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Violated operation contract: bad witness, word too short, out-of-range
/// index, precondition failure.
class ContractError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic grew past the configured CFW_MAX_BIGINT_BITS cap.
class BigintCapError : public ContractError {
  using ContractError::ContractError;
};

}  // namespace cfw
