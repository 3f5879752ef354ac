#ifndef REFLEXKIT_ERRORS_HPP
#define REFLEXKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reflexkit {

/// Base class for all toolkit errors. The `name()` tag is stable and is
/// what the CLI prints before exiting with code 2.
class error : public std::runtime_error {
public:
  error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

#define REFLEXKIT_DEFINE_ERROR(cls)                                           \
  class cls : public error {                                                  \
  public:                                                                     \
    explicit cls(const std::string& what) : error(#cls, what) {}              \
  }

REFLEXKIT_DEFINE_ERROR(ContextMismatch);
REFLEXKIT_DEFINE_ERROR(RankMismatch);
REFLEXKIT_DEFINE_ERROR(OriginNotInterior);
REFLEXKIT_DEFINE_ERROR(NotFullDimensional);
REFLEXKIT_DEFINE_ERROR(NotGorenstein);
REFLEXKIT_DEFINE_ERROR(NotReflexiveGorenstein);
REFLEXKIT_DEFINE_ERROR(InvalidHeight);
REFLEXKIT_DEFINE_ERROR(NotReflexive);
REFLEXKIT_DEFINE_ERROR(NotReflexiveSum);
REFLEXKIT_DEFINE_ERROR(SummandContextMismatch);
REFLEXKIT_DEFINE_ERROR(NotNefPartition);
REFLEXKIT_DEFINE_ERROR(NonLatticeDual);
REFLEXKIT_DEFINE_ERROR(EmptyFactor);
REFLEXKIT_DEFINE_ERROR(PointOutsideDivisorPolytope);
REFLEXKIT_DEFINE_ERROR(ExponentOutsideDelta);
REFLEXKIT_DEFINE_ERROR(RaySetMismatch);
REFLEXKIT_DEFINE_ERROR(DegenerateCoefficients);
REFLEXKIT_DEFINE_ERROR(NonUnitConstantTerm);
REFLEXKIT_DEFINE_ERROR(ParseError);
REFLEXKIT_DEFINE_ERROR(InternalError);

#undef REFLEXKIT_DEFINE_ERROR

} // namespace reflexkit

#endif
