#pragma once

#include <stdexcept>
#include <string>

namespace iqt {

enum class Err {
    DivisionByZero,
    OddHalfPower,
    PoleAtSqrtQ,
    NotASquare,
    CapExceeded,
    Unsolvable,
    NotASink,
    InvalidInvolution,
    InvalidParameter,
    SizeCapExceeded,
    RankCapExceeded,
    InsufficientSamples,
    ParseError,
};

const char* err_name(Err e);

/// All library errors carry a machine-readable code plus context.
class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace iqt
