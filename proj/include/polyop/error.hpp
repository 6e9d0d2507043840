#pragma once

#include <stdexcept>
#include <string>

namespace polyop {

enum class ErrorKind {
    domain,
    precondition,
    resource,
    unsupported,
    internal,
    parse,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const char* what) {
    if (!cond)
        throw Error(kind, what);
}

}  // namespace polyop
