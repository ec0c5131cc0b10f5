#pragma once

#include <stdexcept>
#include <string>

namespace concavlab {

enum class ErrorKind {
    DegenerateInput,
    Unbounded,
    Empty,
    NotAlexandrov,
    NoConvergence,
    FacetVanished,
    Indecomposable,
    DomainMismatch,
    UnsupportedSupport,
    NotComparable,
    DegenerateDeficit,
    NoViolationFound,
    GridTooCoarse,
    Parse,
};

const char* to_string(ErrorKind kind);

// Every failure surfaced by the library carries one of the kinds above so the
// CLI can map it to an exit code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::NotAlexandrov: return "NotAlexandrov";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::FacetVanished: return "FacetVanished";
    case ErrorKind::Indecomposable: return "Indecomposable";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::UnsupportedSupport: return "UnsupportedSupport";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::DegenerateDeficit: return "DegenerateDeficit";
    case ErrorKind::NoViolationFound: return "NoViolationFound";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace concavlab
