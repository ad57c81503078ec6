#pragma once

#include <stdexcept>
#include <string>

namespace cktweb {

// Precondition on a mathematical argument (zero polynomial, singular matrix, pole, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Structurally malformed input: asymmetric blocks, failed preconditions of extraction.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Something that must be impossible happened; carries enough text to debug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cktweb
