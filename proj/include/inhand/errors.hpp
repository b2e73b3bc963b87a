#pragma once

#include <stdexcept>
#include <string>

namespace inhand {

// Error taxonomy shared by all modules. Each condition gets its own type so
// callers can catch exactly what they can recover from; the simulator maps a
// subset of these to run-termination causes.
enum class ErrorCode {
  GimbalLock,
  NearSingular,
  OutOfChart,
  DegenerateChart,
  FlatOnFlat,
  RankDeficient,
  IllConditioned,
  GraspFailure,
  SingularJh,
  Infeasible,
  MaxIterations,
  NonPositiveNormal,
  ConfigInvalid,
  IoFailure,
  SchemaMismatch,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

#define INHAND_DEFINE_ERROR(Name)                       \
  class Name : public Error {                           \
   public:                                              \
    explicit Name(const std::string& what)              \
        : Error(ErrorCode::Name, #Name ": " + what) {}  \
  }

INHAND_DEFINE_ERROR(GimbalLock);
INHAND_DEFINE_ERROR(NearSingular);
INHAND_DEFINE_ERROR(OutOfChart);
INHAND_DEFINE_ERROR(DegenerateChart);
INHAND_DEFINE_ERROR(FlatOnFlat);
INHAND_DEFINE_ERROR(RankDeficient);
INHAND_DEFINE_ERROR(IllConditioned);
INHAND_DEFINE_ERROR(GraspFailure);
INHAND_DEFINE_ERROR(SingularJh);
INHAND_DEFINE_ERROR(Infeasible);
INHAND_DEFINE_ERROR(MaxIterations);
INHAND_DEFINE_ERROR(NonPositiveNormal);
INHAND_DEFINE_ERROR(ConfigInvalid);
INHAND_DEFINE_ERROR(IoFailure);
INHAND_DEFINE_ERROR(SchemaMismatch);

#undef INHAND_DEFINE_ERROR

}  // namespace inhand
