#ifndef BUBBLE_ERRORS_HPP
#define BUBBLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bubble {

// Thrown when an enumeration would exceed its configured node/size cap.
// The CLI maps this to exit code 2.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bubble

#endif
