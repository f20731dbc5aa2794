#include "curveforge/error.hpp"

namespace curveforge {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::ZeroDiscriminant: return "ZeroDiscriminant";
        case ErrorKind::InvalidType: return "InvalidType";
        case ErrorKind::Lemma1Violation: return "Lemma1Violation";
        case ErrorKind::MultiplicityMismatch: return "MultiplicityMismatch";
        case ErrorKind::NegativeGenus: return "NegativeGenus";
        case ErrorKind::NotAdmissible: return "NotAdmissible";
        case ErrorKind::EmptyRange: return "EmptyRange";
        case ErrorKind::NonSquareConstantTerm: return "NonSquareConstantTerm";
        case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorKind::DegenerateLambdas: return "DegenerateLambdas";
        case ErrorKind::InfeasibleAssignment: return "InfeasibleAssignment";
        case ErrorKind::PostconditionFailed: return "PostconditionFailed";
        case ErrorKind::IndeterminatePoint: return "IndeterminatePoint";
        case ErrorKind::ExceptionalInput: return "ExceptionalInput";
        case ErrorKind::NonSplitDiscriminant: return "NonSplitDiscriminant";
        case ErrorKind::GenusZero: return "GenusZero";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace curveforge
