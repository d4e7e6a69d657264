#pragma once

#include <stdexcept>
#include <string>

namespace orbitstar {

/** Bad user input: unknown flags, malformed weights, unsupported rank. */
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/** Structural failure: singular pairing block, pole at t = 0, degenerate split. */
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& msg) : std::runtime_error(msg) {}
};

/** A computation needed tensor data beyond the computed height cutoff. */
struct CutoffError : std::runtime_error {
    explicit CutoffError(const std::string& msg) : std::runtime_error(msg) {}
};

/** Broken internal invariant; always a bug, never a data condition. */
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace orbitstar
