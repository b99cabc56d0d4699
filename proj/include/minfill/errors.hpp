#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minfill {

// Trace magnitude <= 2: elliptic, parabolic or identity holonomy.  Signals a
// broken representation when raised from a length query.
class NotHyperbolicError : public std::runtime_error {
public:
    explicit NotHyperbolicError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A sign decision fell below double-double resolution.  Raised instead of
// returning a possibly wrong intersection count.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// A cuff length collapsed toward the Teichmueller boundary while the
// objective was still decreasing: the input curve is not filling.
class BoundaryEscapeError : public std::runtime_error {
public:
    explicit BoundaryEscapeError(const std::string& what) : std::runtime_error(what) {}
};

class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace minfill
