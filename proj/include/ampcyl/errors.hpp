#ifndef AMPCYL_ERRORS_HPP
#define AMPCYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ampcyl {

class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define AMPCYL_ERROR(Name)                                          \
  class Name : public Error {                                       \
  public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  };

AMPCYL_ERROR(MismatchedLattice)
AMPCYL_ERROR(NotADE)
AMPCYL_ERROR(SingularConfiguration)
AMPCYL_ERROR(DimensionMismatch)
AMPCYL_ERROR(NotSalient)
AMPCYL_ERROR(DegenerateDual)
AMPCYL_ERROR(InconsistentSystem)
AMPCYL_ERROR(NotUnimodular)
AMPCYL_ERROR(UnknownCylinder)
AMPCYL_ERROR(UnknownClassName)
AMPCYL_ERROR(ParseError)
AMPCYL_ERROR(SchemaError)
AMPCYL_ERROR(ReferenceError)
AMPCYL_ERROR(RationalError)
AMPCYL_ERROR(UnsupportedRank)
AMPCYL_ERROR(UnsupportedMorphism)

#undef AMPCYL_ERROR

} // namespace ampcyl

#endif // AMPCYL_ERRORS_HPP
