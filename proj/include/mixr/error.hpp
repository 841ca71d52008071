#pragma once

#include <stdexcept>
#include <string>

namespace mixr {

/// Malformed arguments or input data. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called on data that does not satisfy its hypothesis
/// (for example the lemma check on a colouring that is not admissible).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mixr
