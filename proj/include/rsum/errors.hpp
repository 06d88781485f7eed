#pragma once

#include <stdexcept>
#include <string>

namespace rsum {

// A mathematical consistency check failed at runtime. Every such check is
// backed by a theorem, so seeing this exception means the implementation
// (not the math) is wrong. The CLI maps it to exit code 1, as opposed to
// usage/precondition errors (std::invalid_argument), which map to exit 2.
class CheckFailure : public std::runtime_error {
public:
    explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rsum
