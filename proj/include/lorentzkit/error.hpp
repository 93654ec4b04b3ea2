#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lorentzkit {

enum class ErrorKind {
    InvalidSpeed,  // |v| >= 1
    Causality,     // expected timelike vector is not timelike
    Domain,        // argument outside the model's coordinate domain
    Frame,         // frame / observer fails orthonormality or orientation
    TurningPoint,  // radial integrand vanishes or changes sign
    Numerical,     // finite-difference step under/overflow, non-finite result
    Input,         // malformed user data (trajectory, CSV, JSON)
    Io,            // file could not be read or written
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidSpeed: return "invalid-speed";
    case ErrorKind::Causality: return "causality";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Frame: return "frame";
    case ErrorKind::TurningPoint: return "turning-point";
    case ErrorKind::Numerical: return "numerical";
    case ErrorKind::Input: return "input";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace lorentzkit
