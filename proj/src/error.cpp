#include "ctknot/error.hpp"

namespace ctknot {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::MixedForm: return "MixedForm";
        case ErrorKind::WrongForm: return "WrongForm";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotReal: return "NotReal";
        case ErrorKind::NotInRange: return "NotInRange";
        case ErrorKind::NotHolomorphic: return "NotHolomorphic";
        case ErrorKind::PoleHit: return "PoleHit";
        case ErrorKind::NotOrthogonal: return "NotOrthogonal";
        case ErrorKind::OffSurface: return "OffSurface";
        case ErrorKind::DegenerateFrame: return "DegenerateFrame";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::RankDeficientJacobian: return "RankDeficientJacobian";
        case ErrorKind::NoCurveFound: return "NoCurveFound";
        case ErrorKind::SingularPoint: return "SingularPoint";
        case ErrorKind::PoleTooClose: return "PoleTooClose";
        case ErrorKind::OpenCurve: return "OpenCurve";
        case ErrorKind::CurvesTooClose: return "CurvesTooClose";
    }
    return "Unknown";
}

}  // namespace ctknot
