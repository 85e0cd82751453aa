#pragma once

#include <stdexcept>
#include <string>

namespace mls {

enum class Errc {
  ZeroMachines,
  EmptyList,
  NonPositivePtime,
  InconsistentSpec,
  InstanceTooLarge,
  ZeroOpt,
  BadMagic,
  BadHeader,
  NonIntegerToken,
  ListCountMismatch,
  BadConfig,
  IoError,
};

const char* errc_name(Errc code);

// Carries the error site: `index` is the offending 1-based list position for
// validation errors, `line`/`col` are 1-based text coordinates for parse errors.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, int index = -1, int line = -1, int col = -1)
      : std::runtime_error(message), code_(code), index_(index), line_(line), col_(col) {}

  Errc code() const { return code_; }
  int index() const { return index_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  Errc code_;
  int index_;
  int line_;
  int col_;
};

}  // namespace mls
