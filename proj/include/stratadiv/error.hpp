#pragma once

#include <stdexcept>
#include <string>

namespace stratadiv {

/// Exception for invalid user-facing input.  Internal invariant failures use
/// std::logic_error instead, so callers can tell bad data from bugs.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    BadGenus,                // genus below the supported range
    BadLength,               // wrong number of signature parts
    BadPart,                 // signature part < 1
    BadSum,                  // signature parts do not sum to 2g-2
    BadArity,                // too many orders for the given genus
    BadOrder,                // negative zero order
    NonIntegerResult,        // a count came out fractional
    ZeroOrder,               // zero order where a nonzero one is required
    BadIndex,                // curve or subset index out of range
    ZeroC0,                  // slope undefined: c_0 vanishes
    NoPositiveDenominator,   // slope undefined: no coefficient with -c_i > 0
  };

  Error(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

  static const char* name(Kind kind) {
    switch (kind) {
      case Kind::BadGenus: return "BadGenus";
      case Kind::BadLength: return "BadLength";
      case Kind::BadPart: return "BadPart";
      case Kind::BadSum: return "BadSum";
      case Kind::BadArity: return "BadArity";
      case Kind::BadOrder: return "BadOrder";
      case Kind::NonIntegerResult: return "NonIntegerResult";
      case Kind::ZeroOrder: return "ZeroOrder";
      case Kind::BadIndex: return "BadIndex";
      case Kind::ZeroC0: return "ZeroC0";
      case Kind::NoPositiveDenominator: return "NoPositiveDenominator";
    }
    return "Unknown";
  }

 private:
  Kind kind_;
};

}  // namespace stratadiv
