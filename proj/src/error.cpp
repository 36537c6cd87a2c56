#include "pf/error.hpp"

namespace pf {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
        case Errc::NonInvertible: return "NonInvertible";
        case Errc::OddValuation: return "OddValuation";
        case Errc::NonSquareLeadingCoefficient: return "NonSquareLeadingCoefficient";
        case Errc::NoMatch: return "NoMatch";
        case Errc::MixedConstants: return "MixedConstants";
        case Errc::PExponentRange: return "PExponentRange";
        case Errc::XiSquared: return "XiSquared";
        case Errc::PoleOrder: return "PoleOrder";
        case Errc::LogDegree: return "LogDegree";
        case Errc::LogDivision: return "LogDivision";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::NonPolynomialCoefficient: return "NonPolynomialCoefficient";
        case Errc::NotMUM: return "NotMUM";
        case Errc::ResonantExponents: return "ResonantExponents";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::NonInvertibleW01: return "NonInvertibleW01";
        case Errc::RelationViolated: return "RelationViolated";
        case Errc::NotScalar: return "NotScalar";
        case Errc::DegenerateCase: return "DegenerateCase";
        case Errc::RadiusExceeded: return "RadiusExceeded";
        case Errc::TailTooLarge: return "TailTooLarge";
        case Errc::SingularityOnPath: return "SingularityOnPath";
        case Errc::PrecisionLoss: return "PrecisionLoss";
        case Errc::NoRecognition: return "NoRecognition";
        case Errc::PhiZero: return "PhiZero";
        case Errc::SingularBlock: return "SingularBlock";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::NonTermination: return "NonTermination";
        case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

}  // namespace pf
