// Typed error taxonomy.  Constructors and low-level operations throw; the
// certifier catches and converts failures into named check records so that
// a query never aborts the process.
#pragma once

#include <stdexcept>
#include <string>

namespace hkcert {

enum class ErrorKind {
    DivisibilityViolation,  // Gram constructor fed a non-integral entry
    ZeroVector,
    DependentVectors,
    NotInVminus,
    StarDomainExceeded,     // input >= 5*10^10 where the exception lists are unproven
    NoSolution,
    BadParityMode,
    HypothesisViolated,     // a named theorem premise failed; check() says which
    NonIntegralT,
    EmptyQuery,
    MalformedCertificate,
    OpenCase,               // the source material leaves this input open
    LiteratureCase,         // settled elsewhere; citation() says where
    DomainError,            // input outside the supported numeric domain
};

class HkError : public std::runtime_error {
  public:
    HkError(ErrorKind kind, std::string check, const std::string& message)
        : std::runtime_error(message), kind_(kind), check_(std::move(check)) {}

    ErrorKind kind() const { return kind_; }
    // Name of the failed premise / open case / citation key.
    const std::string& check() const { return check_; }

  private:
    ErrorKind kind_;
    std::string check_;
};

inline HkError hypothesis_violated(const std::string& check_name) {
    return HkError(ErrorKind::HypothesisViolated, check_name, "hypothesis violated: " + check_name);
}

inline HkError open_case(const std::string& check_name) {
    return HkError(ErrorKind::OpenCase, check_name, "open case: " + check_name);
}

inline HkError literature_case(const std::string& citation) {
    return HkError(ErrorKind::LiteratureCase, citation, "settled in the literature: " + citation);
}

}  // namespace hkcert
