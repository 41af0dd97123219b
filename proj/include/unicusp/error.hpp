#pragma once

#include <stdexcept>
#include <string>

namespace unicusp {

enum class ErrorKind {
    InvalidInput,
    DivisionByZero,
    DenominatorVanishesAtZero,
    NotCofinite,
    NotASemigroup,
    PoleAtCusp,
    BadBaseCoordinate,
    DuplicateValuation,
    NotUnicuspidalSemigroup,
    ClosureDiverges,
    InternalDimensionMismatch,
    NormalFormViolation,
    CertificateFailure,
    UnsupportedFamily,
    InvalidBlockParams,
    NearlyNormalOutOfTemplate,
    ConsistencyFailure,
    DatasetCorrupt,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// certify() failures carry the violated check and the observed value.
class CertificateError : public Error {
public:
    CertificateError(const std::string& check, const std::string& observed)
        : Error(ErrorKind::CertificateFailure, check + ", observed " + observed),
          check_(check),
          observed_(observed) {}
    const std::string& check() const { return check_; }
    const std::string& observed() const { return observed_; }

private:
    std::string check_;
    std::string observed_;
};

}  // namespace unicusp
