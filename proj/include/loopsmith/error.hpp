#pragma once

#include <stdexcept>
#include <string>

namespace loopsmith {

// Failure codes raised by validation, parsing and construction.
// arg0/arg1 carry the offending row, column, line number or pair,
// depending on the code; -1 when unused.
enum class ErrorCode {
  NotSquare,
  EntryOutOfRange,
  RowNotPermutation,
  ColumnNotPermutation,
  NoIdentity,
  IndexOutOfRange,
  BadBlock,
  PairUncovered,
  PairDuplicated,
  NotSteiner,
  Syntax,
  BadModulus,
  CriterionHolds,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail, long arg0 = -1, long arg1 = -1);

  ErrorCode code() const noexcept { return code_; }
  long arg0() const noexcept { return arg0_; }
  long arg1() const noexcept { return arg1_; }

 private:
  ErrorCode code_;
  long arg0_;
  long arg1_;
};

}  // namespace loopsmith
