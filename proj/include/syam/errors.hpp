#pragma once

#include <stdexcept>
#include <string>

namespace syam {

enum class errc {
    invalid_argument,  // bad parameters, violated preconditions
    invalid_space,     // geometric data inconsistent (psi <= 0, n != f+1, ...)
    parse_error,       // malformed input files
    io_error,          // filesystem failures
    numeric_failure,   // solver non-convergence, diverging estimates
    unsupported        // valid input outside the implemented regime
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace syam
