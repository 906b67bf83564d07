#pragma once
#include <stdexcept>
#include <string>

namespace gcx {

// Every recoverable failure carries a stable code so callers (and the CLI)
// can react without parsing messages.
enum class errc {
  // group
  NotAssociative, NoIdentity, NoInverse, OrderTooLarge,
  // base / action
  NonPositiveCodegree, NotCommutative, DegenerateForm, DegenerateSpectrum,
  NotHomomorphism, CodegreeNotPreserved,
  // cochains
  UnsupportedDegree, NotACocycle, SearchBudgetExceeded, BaseMismatch,
  NotOValued, ZeroValue,
  // crossed algebra
  StarIncompatible, OwnerMismatch, AxiomsFail, BasisNotAligned,
  // verlinde
  NotFixed, ZeroDenominator, ProductNotIdentity, WrongComponent,
  NotOrthogonal, NotSpanning,
  // modular
  DimensionMismatch, MissingSector,
  // io
  BadInput,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }
private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace gcx
