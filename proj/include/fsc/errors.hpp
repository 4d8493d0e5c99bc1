#ifndef FSC_ERRORS_HPP
#define FSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsc {

// Input or parameter outside the documented domain.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configured size cap (enumeration or pattern budget) would be exceeded.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// The certifier refuses to certify; `witness`, when nonempty, describes the
// colliding word/pattern pair that breaks orthogonality.
struct CertificationRefused : std::runtime_error {
    std::string witness;
    explicit CertificationRefused(const std::string& msg, std::string w = {})
        : std::runtime_error(msg), witness(std::move(w)) {}
};

// A ground-truth check in the dense simulator exceeded its tolerance.
struct OracleViolation : std::runtime_error {
    explicit OracleViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fsc

#endif
