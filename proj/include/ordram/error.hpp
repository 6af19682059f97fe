#pragma once

#include <stdexcept>
#include <string>

namespace ordram {

/// A caller-supplied parameter is outside its documented range.
class ParameterError : public std::invalid_argument {
public:
    ParameterError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field))
    {
    }
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Malformed text input (graph, coloring, pattern spec, ledger line).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation was asked for outside the envelope it supports.
class EnvelopeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace ordram
