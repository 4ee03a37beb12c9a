#pragma once

#include <stdexcept>

namespace ecogen {

/// A documented precondition of an operation was not met by its input.
class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ecogen
