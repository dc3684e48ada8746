#pragma once

#include <stdexcept>
#include <string>

namespace gabdyn {

/// Bad caller input: malformed config, invalid triple, vector from the
/// wrong space. Maps to CLI exit code 2.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A mathematically-asserted identity failed (lemma mismatch, order
/// identity violation). Maps to CLI exit code 1.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency violation that should be unreachable for valid
/// inputs (e.g. a non-integral orbit Gram entry). Indicates a bug.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gabdyn
