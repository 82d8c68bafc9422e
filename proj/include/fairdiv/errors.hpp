#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

/// Malformed or out-of-range caller input (bad ids, bad literals,
/// instances over the brute-force caps). Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A state the underlying theory says cannot happen (a rule firing that
/// fails to improve the potential, a missing champion, a blown step
/// budget). Maps to CLI exit code 3 and is always worth a bug report.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fairdiv
