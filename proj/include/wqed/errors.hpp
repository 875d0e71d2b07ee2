#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wqed {

// Structured computation errors. `kind()` is the stable tag written into CLI
// error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define WQED_DECLARE_ERROR(Name)                                     \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

WQED_DECLARE_ERROR(DomainError)
WQED_DECLARE_ERROR(SingularityError)
WQED_DECLARE_ERROR(OutsideGapError)
WQED_DECLARE_ERROR(QuadratureFailure)
WQED_DECLARE_ERROR(NoGapError)
WQED_DECLARE_ERROR(NoSignChangeError)
WQED_DECLARE_ERROR(MaxIterationsError)
WQED_DECLARE_ERROR(DimensionError)
WQED_DECLARE_ERROR(IndexError)

#undef WQED_DECLARE_ERROR

class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, std::vector<int> failed)
      : Error("ConvergenceFailure", what), failed_(std::move(failed)) {}
  const std::vector<int>& failed_indices() const noexcept { return failed_; }

 private:
  std::vector<int> failed_;
};

}  // namespace wqed
