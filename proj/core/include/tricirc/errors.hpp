#pragma once

#include <stdexcept>
#include <string>

namespace tricirc {

// Base of all domain errors. `code()` is a stable machine-readable tag;
// what() carries the human-readable detail (ids of offending vertices,
// faces, cuts, ...).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define TRICIRC_ERROR(Name)                                        \
  struct Name : Error {                                            \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}   \
  }

// embedding
TRICIRC_ERROR(InconsistentRotation);
TRICIRC_ERROR(NotPlanarGenus);
TRICIRC_ERROR(Disconnected);
TRICIRC_ERROR(NotIndependent);
TRICIRC_ERROR(WrongDegree);
TRICIRC_ERROR(FormatError);

// connectivity
TRICIRC_ERROR(NotThreeConnected);

// generators
TRICIRC_ERROR(TooSmall);
TRICIRC_ERROR(NotAFace);
TRICIRC_ERROR(NotFourConnected);
TRICIRC_ERROR(Unsatisfiable);

// cycles
TRICIRC_ERROR(Acyclic);
TRICIRC_ERROR(NotACycle);
TRICIRC_ERROR(NotExtendable);
TRICIRC_ERROR(NoGoodCycle);
TRICIRC_ERROR(ConfigMismatch);
TRICIRC_ERROR(Timeout);

// discharging
TRICIRC_ERROR(ChordConflict);
TRICIRC_ERROR(ThreeFaceFound);
TRICIRC_ERROR(Claim1Violation);
TRICIRC_ERROR(NoZeroFace);
TRICIRC_ERROR(RimNotPath);
TRICIRC_ERROR(Claim4Violation);
TRICIRC_ERROR(Claim5Violation);
TRICIRC_ERROR(Claim6Violation);
TRICIRC_ERROR(RuleAmbiguity);
TRICIRC_ERROR(PreconditionFailed);

#undef TRICIRC_ERROR

}  // namespace tricirc
