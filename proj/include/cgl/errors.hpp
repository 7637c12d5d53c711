#pragma once

#include <stdexcept>
#include <string>

namespace cgl {

// Exit-code contract: 2 = bad input, 3 = resource cap, 4 = internal consistency.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void internal_check(bool ok, const std::string& msg) {
    if (!ok) throw InternalError(msg);
}

} // namespace cgl
