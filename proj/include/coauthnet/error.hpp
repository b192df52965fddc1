#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace coauthnet {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input data: malformed files, unknown ids, violated preconditions on
/// user-supplied values. Carries the offending file and 1-based line when
/// the error came from a parsed file (line 0 means "whole file").
class InputError : public Error {
public:
    explicit InputError(const std::string& reason) : Error(reason), reason_(reason) {}

    InputError(std::string file, std::size_t line, const std::string& reason)
        : Error(format(file, line, reason)), file_(std::move(file)), line_(line), reason_(reason) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    static std::string format(const std::string& file, std::size_t line, const std::string& reason) {
        if (line == 0) return file + ": " + reason;
        return file + ":" + std::to_string(line) + ": " + reason;
    }

    std::string file_;
    std::size_t line_ = 0;
    std::string reason_;
};

/// A statistic was requested on a graph where it has no value
/// (mean distance without any connected pair, modularity with m == 0).
class UndefinedStatistic : public Error {
public:
    using Error::Error;
};

/// The force simulation produced a non-finite value.
class LayoutError : public Error {
public:
    using Error::Error;
};

} // namespace coauthnet
