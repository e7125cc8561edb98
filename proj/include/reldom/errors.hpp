#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reldom {

// Bad arguments to a library call (dimension mismatch, wrong algebra, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A source-level diagnostic for the .alg / .mod grammars.
struct Diagnostic {
    int line = 0;  // 1-based, 0 when not tied to a location
    int col = 0;
    std::string message;
};

struct presentation_error : std::runtime_error {
    std::vector<Diagnostic> diagnostics;
    explicit presentation_error(Diagnostic d)
        : std::runtime_error(format(d)), diagnostics{std::move(d)} {}
    static std::string format(const Diagnostic& d) {
        if (d.line > 0)
            return "line " + std::to_string(d.line) + ":" + std::to_string(d.col) + ": " +
                   d.message;
        return d.message;
    }
};

// A computation hit its cap without reaching a decidable state.
struct undetermined_error : std::runtime_error {
    int cap;
    explicit undetermined_error(const std::string& what, int cap_)
        : std::runtime_error(what + " (undetermined at cap " + std::to_string(cap_) + ")"),
          cap(cap_) {}
};

// Krull-Schmidt decomposition gave up (see module docs for when this can happen).
struct decompose_error : std::runtime_error {
    explicit decompose_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace reldom
