#pragma once

#include <stdexcept>
#include <string>

namespace cliffcode {

/// Malformed or unusable input: bad bundle files, non-unitary generators,
/// closure overflow, out-of-range CLI arguments. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed: projector trace not an integer, the three
/// classification tests disagree, modular lifting mismatch. These indicate a
/// bug or an inconsistent certificate and map to CLI exit code 1.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cliffcode
