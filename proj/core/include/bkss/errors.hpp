#pragma once

#include <stdexcept>
#include <string>

namespace bkss {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The requested computation cannot be decided inside the configured
/// window (degree range, u-truncation, t-bound or weight cap).  Callers
/// that report verification results map this to "undecided", never to
/// "fail".
struct WindowError : Error {
    explicit WindowError(const std::string& what) : Error(what) {}
};

/// Structure maps were requested outside the certified range
/// (t-generator index beyond the t-bound, or a rewrite rule that does
/// not exist for the configured bounds).
struct RangeError : WindowError {
    explicit RangeError(const std::string& what) : WindowError(what) {}
};

/// Invalid arguments: mixed coefficient modes, mismatched comodule
/// tags, malformed parameters, unknown case ids.
struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace bkss
