#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qclust {

enum class Errc {
  DimensionMismatch,
  NotDivisible,
  NotSkewSymmetric,
  IncompatiblePair,
  NoGVector,
  InconsistentLattice,
  LoopAtVertex,
  DegreeCapExceeded,
  RelationViolation,
  SignAmbiguous,
  BoundTooSmall,
  TailNotVanishing,
  CommutationMismatch,
  NotLaurent,
  BudgetExceeded,
  NotPolynomialCount,
  InvalidInput,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to a diagnostic without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotSkewSymmetric: return "NotSkewSymmetric";
    case Errc::IncompatiblePair: return "IncompatiblePair";
    case Errc::NoGVector: return "NoGVector";
    case Errc::InconsistentLattice: return "InconsistentLattice";
    case Errc::LoopAtVertex: return "LoopAtVertex";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::RelationViolation: return "RelationViolation";
    case Errc::SignAmbiguous: return "SignAmbiguous";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::TailNotVanishing: return "TailNotVanishing";
    case Errc::CommutationMismatch: return "CommutationMismatch";
    case Errc::NotLaurent: return "NotLaurent";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotPolynomialCount: return "NotPolynomialCount";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace qclust
