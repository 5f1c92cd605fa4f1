#pragma once

#include <stdexcept>
#include <string>

namespace symrep {

/// Invalid input or violated precondition.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured cap (table size, idempotent degree, ...) was exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A Fock-space operation would produce a partition beyond the degree cap.
/// Raised instead of silently clipping the result.
struct truncation_error : domain_error {
    explicit truncation_error(const std::string& msg) : domain_error(msg) {}
};

} // namespace symrep
