#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

enum class ErrorKind {
    invalid_argument,
    parse,
    precondition,
    unsupported_poset,
    size_limit,
    resource_limit,
    invalid_region,
    property_violation,
    internal_consistency,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

const char* error_kind_name(ErrorKind kind);

} // namespace cgt
