#pragma once

#include <stdexcept>

namespace qkgr {

// Bad user input: malformed partition text, out-of-rectangle shapes, bad flags.
struct invalid_argument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A proven identity failed at runtime (e.g. a (1-q) division left a remainder,
// or a product violated the degree/filtration bounds). Always a code defect.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qkgr
