#include "unicusp/error.hpp"

namespace unicusp {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DenominatorVanishesAtZero: return "DenominatorVanishesAtZero";
        case ErrorKind::NotCofinite: return "NotCofinite";
        case ErrorKind::NotASemigroup: return "NotASemigroup";
        case ErrorKind::PoleAtCusp: return "PoleAtCusp";
        case ErrorKind::BadBaseCoordinate: return "BadBaseCoordinate";
        case ErrorKind::DuplicateValuation: return "DuplicateValuation";
        case ErrorKind::NotUnicuspidalSemigroup: return "NotUnicuspidalSemigroup";
        case ErrorKind::ClosureDiverges: return "ClosureDiverges";
        case ErrorKind::InternalDimensionMismatch: return "InternalDimensionMismatch";
        case ErrorKind::NormalFormViolation: return "NormalFormViolation";
        case ErrorKind::CertificateFailure: return "CertificateFailure";
        case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorKind::InvalidBlockParams: return "InvalidBlockParams";
        case ErrorKind::NearlyNormalOutOfTemplate: return "NearlyNormalOutOfTemplate";
        case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
        case ErrorKind::DatasetCorrupt: return "DatasetCorrupt";
    }
    return "UnknownError";
}

}  // namespace unicusp
