#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phdet {

/// Raised by the polynomial parser; carries the byte offset of the failure.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Input is well formed but outside what the symbolic kernel supports
/// (non quasi-homogeneous germs, non-isolated zeros, ...).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured resource limit (S-pair budget) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The index ledger cannot be evaluated: too many unknowns, mixed matrix
/// types, or missing local data.
class LedgerError : public std::runtime_error {
public:
    enum class Kind { too_many_unknowns, mixed_types, inconsistent_dimension, missing_data };

    LedgerError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

}  // namespace phdet
