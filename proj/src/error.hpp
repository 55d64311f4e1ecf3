#pragma once

#include <stdexcept>
#include <string>

namespace tricolor {

// Error categories, mirrored one-to-one by the C API status codes.
enum class Errc {
    invalid_argument,  // bad parameter or inconsistent inputs
    parse,             // malformed file or document
    limit,             // request exceeds a documented engine limit
    verify_failed,     // internal verification tripped; indicates a bug
    io,                // file system failure
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace tricolor
