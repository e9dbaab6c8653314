#ifndef GSM_ERROR_HPP
#define GSM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsm {

enum class ErrorCode {
  // groupoid-core
  CompDomain,
  Assoc,
  Identity,
  Inverse,
  Empty,
  NotGroup,
  NoObject,
  NotClosed,
  NotWide,
  // group-set
  NotBijective,
  IdentityAction,
  Cocycle,
  NotSplit,
  NotInvariant,
  NotCommuting,
  NotSplitK,
  TooLarge,
  // exact-algebra
  Unit,
  Grading,
  UnitDecomp,
  DimMismatch,
  Module,
  Malformed,
  // smash / skew / duality
  NotMultiplicative,
  NotMorphism,
  NotIdeal,
  NotIso,
  NotUnitalDecomp,
  NoIdealUnit,
  NotEndo,
  NotFullyFaithful,
  NotTransitive,
  // morita
  XGrading,
  // dsl
  Syntax,
  UnresolvedName,
  DuplicateName,
};

/// Stable identifier used in reports, e.g. "E_COMP_DOMAIN".
std::string_view code_name(ErrorCode code);

/// Every validation failure in the library is reported through this type. The
/// message carries a concrete witness (offending indices or names).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& witness)
      : std::runtime_error(std::string(code_name(code)) + ": " + witness),
        code_(code),
        witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& witness) {
  throw Error(code, witness);
}

}  // namespace gsm

#endif  // GSM_ERROR_HPP
