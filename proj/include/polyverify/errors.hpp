#ifndef POLYVERIFY_ERRORS_HPP
#define POLYVERIFY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyverify {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    EmptyInput() : Error("coefficient list is empty") {}
};

struct AllCoefficientsZero : Error {
    AllCoefficientsZero() : Error("all coefficients are zero; the zero polynomial is not representable") {}
};

struct NonFiniteInput : Error {
    NonFiniteInput() : Error("non-finite value (NaN or infinity) in input") {}
};

struct DegreeZero : Error {
    DegreeZero() : Error("operation requires degree >= 1") {}
};

struct DegreeBelowTwo : Error {
    DegreeBelowTwo() : Error("operation requires degree >= 2") {}
};

struct NonPositiveScale : Error {
    NonPositiveScale() : Error("scale factor must be positive") {}
};

struct BudgetTooSmall : Error {
    BudgetTooSmall() : Error("sampling grid too small for the polynomial degree") {}
};

struct RadiusBelowOne : Error {
    RadiusBelowOne() : Error("radius k must be >= 1") {}
};

struct HypothesisNotCertified : Error {
    HypothesisNotCertified() : Error("disk hypothesis report missing, failed, or for a different radius") {}
};

struct LOutOfRange : Error {
    LOutOfRange() : Error("parameter l must satisfy 0 <= l < 1") {}
};

struct AlphaOutOfRange : Error {
    AlphaOutOfRange() : Error("parameter |alpha| must lie in [0, 1]") {}
};

struct ZeroOutsideDisk : Error {
    ZeroOutsideDisk() : Error("zero lies outside |z| <= k") {}
};

struct DegenerateBoundaryPoint : Error {
    DegenerateBoundaryPoint() : Error("boundary point coincides with an interior zero image") {}
};

}  // namespace polyverify

#endif
