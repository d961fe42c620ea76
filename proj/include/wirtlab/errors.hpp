#pragma once

#include <stdexcept>
#include <string>

namespace wirtlab {

/// A hypothesis gate was violated (nonzero mean, non-convex body, non-simple
/// or irregular curve). The CLI maps these to exit code 1, naming the gate.
class GateError : public std::runtime_error {
public:
    GateError(std::string gate, const std::string& message)
        : std::runtime_error(message), gate_(std::move(gate)) {}

    const std::string& gate() const noexcept { return gate_; }

private:
    std::string gate_;
};

} // namespace wirtlab
