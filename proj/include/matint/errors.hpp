#pragma once

#include <stdexcept>
#include <string>

namespace matint {

/// Thrown when an enumeration would exceed the configured half-edge cap.
/// The CLI maps this to its own exit code.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matint
