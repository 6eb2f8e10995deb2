#ifndef PDTFUN_ERRORS_HPP
#define PDTFUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdtfun {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments: symbols outside an alphabet, malformed input strings,
// violated operation preconditions. CLI exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

// A machine definition that fails structural validation. CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A configurable search cap was exceeded. Results are never silently
// truncated; callers see this instead. CLI exit code 2.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace pdtfun

#endif
