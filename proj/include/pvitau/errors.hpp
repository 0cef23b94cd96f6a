#pragma once

#include <stdexcept>
#include <string>

namespace pvitau {

class NonExactDivision : public std::runtime_error {
 public:
  NonExactDivision(std::string remainder, int remainder_degree)
      : std::runtime_error("non-exact division, remainder " + remainder),
        remainder_(std::move(remainder)),
        remainder_degree_(remainder_degree) {}
  const std::string& remainder() const { return remainder_; }
  int remainder_degree() const { return remainder_degree_; }

 private:
  std::string remainder_;
  int remainder_degree_;
};

#define PVITAU_SIMPLE_ERROR(Name)                                   \
  class Name : public std::runtime_error {                          \
   public:                                                          \
    explicit Name(const std::string& what) : std::runtime_error(what) {} \
  };

PVITAU_SIMPLE_ERROR(NonIntegralInput)
PVITAU_SIMPLE_ERROR(ConstantPolynomial)
PVITAU_SIMPLE_ERROR(DivisionByZeroFunction)
PVITAU_SIMPLE_ERROR(PoleEvaluation)
PVITAU_SIMPLE_ERROR(ParameterPole)
PVITAU_SIMPLE_ERROR(DegenerateQ)
PVITAU_SIMPLE_ERROR(RiccatiViolation)
PVITAU_SIMPLE_ERROR(DegenerateTransformation)
PVITAU_SIMPLE_ERROR(ChartViolation)
PVITAU_SIMPLE_ERROR(SequenceTooShort)
PVITAU_SIMPLE_ERROR(SampleAtFactorZero)
PVITAU_SIMPLE_ERROR(InvalidArgument)

#undef PVITAU_SIMPLE_ERROR

}  // namespace pvitau
