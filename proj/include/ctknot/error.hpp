#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctknot {

enum class ErrorKind {
    Parse,
    MixedForm,
    WrongForm,
    InvalidArgument,
    NotReal,
    NotInRange,
    NotHolomorphic,
    PoleHit,
    NotOrthogonal,
    OffSurface,
    DegenerateFrame,
    NonConvergence,
    RankDeficientJacobian,
    NoCurveFound,
    SingularPoint,
    PoleTooClose,
    OpenCurve,
    CurvesTooClose,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the polynomial reader; `position()` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(ErrorKind::Parse,
                "parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace ctknot
