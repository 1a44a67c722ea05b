#pragma once

#include <stdexcept>
#include <string>

namespace cwilf {

/// Bad arguments: malformed permutations, violated hypotheses, mixed
/// pattern lengths, and the like.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration was requested past the configured budget. The message
/// names the bound that was exceeded.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed (e.g. a series coefficient that must
/// clear to an integer polynomial did not). Signals a bug or a violated
/// hypothesis, never bad user input.
class internal_consistency_error : public std::logic_error {
public:
    explicit internal_consistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace cwilf
