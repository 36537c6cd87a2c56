#pragma once

#include <stdexcept>
#include <string>

namespace pf {

enum class Errc {
    ZeroLeadingCoefficient,
    NonInvertible,
    OddValuation,
    NonSquareLeadingCoefficient,
    NoMatch,
    MixedConstants,
    PExponentRange,
    XiSquared,
    PoleOrder,
    LogDegree,
    LogDivision,
    SyntaxError,
    NonPolynomialCoefficient,
    NotMUM,
    ResonantExponents,
    SingularMatrix,
    NonInvertibleW01,
    RelationViolated,
    NotScalar,
    DegenerateCase,
    RadiusExceeded,
    TailTooLarge,
    SingularityOnPath,
    PrecisionLoss,
    NoRecognition,
    PhiZero,
    SingularBlock,
    NotPrimitive,
    NonTermination,
    BadInput,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pf
