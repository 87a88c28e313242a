#pragma once

#include <stdexcept>
#include <string>

namespace qmf {

// Base of every error the library throws; `kind()` is the stable name used in
// CLI json output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define QMF_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(#Name, what) {}          \
  };

QMF_DEFINE_ERROR(NonIntegerGrain)
QMF_DEFINE_ERROR(OrderExceeded)
QMF_DEFINE_ERROR(BadWeight)
QMF_DEFINE_ERROR(ParameterRange)
QMF_DEFINE_ERROR(UnknownIdentity)
QMF_DEFINE_ERROR(UnknownLabel)
QMF_DEFINE_ERROR(UnsupportedShape)
QMF_DEFINE_ERROR(InvalidInput)
QMF_DEFINE_ERROR(NonPositiveT)

#undef QMF_DEFINE_ERROR

}  // namespace qmf
