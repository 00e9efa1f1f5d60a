#pragma once

#include <stdexcept>
#include <string>

namespace centrum {

enum class ErrKind {
    axiom,         // a ring axiom failed during validation
    dimension,     // mismatched or out-of-range table data
    parse,         // malformed expression or table file
    unknown_name,  // element name not found
    cap,           // a configured order/enumeration cap was exceeded
    budget,        // search budget exhausted
    hypothesis,    // operation precondition on the ring not met
    io,            // file I/O failure
    usage,         // bad arguments
};

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrKind kind() const noexcept { return kind_; }

private:
    ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace centrum
