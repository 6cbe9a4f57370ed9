#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pontcalc {

// Base class of all library errors. kind() is the stable machine-readable
// name the CLI prints in front of the message.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define PONTCALC_DEFINE_ERROR(Name)                               \
  class Name : public Error {                                     \
  public:                                                         \
    explicit Name(const std::string& msg) : Error(msg) {}         \
    const char* kind() const noexcept override { return #Name; }  \
  }

PONTCALC_DEFINE_ERROR(VarSetError);       // operands over different variable sets
PONTCALC_DEFINE_ERROR(NotAUnitError);     // series inversion of a non-unit
PONTCALC_DEFINE_ERROR(DimensionError);    // matrix/vector shape mismatch
PONTCALC_DEFINE_ERROR(HomogeneityError);  // a homogeneous polynomial is required
PONTCALC_DEFINE_ERROR(OddRankError);      // top class of an odd-rank bundle
PONTCALC_DEFINE_ERROR(ShapeError);        // bundle argument of the wrong shape
PONTCALC_DEFINE_ERROR(ParityError);       // grassmannian parity hypothesis violated
PONTCALC_DEFINE_ERROR(RangeError);        // parameters outside the presentable range
PONTCALC_DEFINE_ERROR(ValueError);        // invalid literal value

#undef PONTCALC_DEFINE_ERROR

// Syntax error carrying the byte offset of the failure and the set of tokens
// that would have been accepted there.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& msg)
      : Error(msg), offset_(offset), expected_(std::move(expected)) {}
  const char* kind() const noexcept override { return "ParseError"; }
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace pontcalc
