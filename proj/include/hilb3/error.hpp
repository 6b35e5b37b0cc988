#pragma once

#include <stdexcept>
#include <string>

namespace hilb3 {

// Raised for violated preconditions and malformed input. The CLI maps it to
// exit status 2.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hilb3
