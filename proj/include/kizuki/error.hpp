#pragma once

#include <stdexcept>
#include <string>

namespace kizuki {

enum class ErrorKind {
    InvalidArgument,   // bad input the caller can fix (malformed URL, bad threshold)
    NotFound,          // missing file or unknown lookup key
    Network,           // connection/timeout failures; retriable
    Truncated,         // body exceeded the configured byte limit
    Encoding,          // bytes undecodable after the charset fallback chain
    UnknownLanguage,   // no script table for the requested code
    Consistency,       // inputs from different snapshots mixed together
    Config,            // malformed dictionary/table/weight file
    Io,                // filesystem read/write failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, bool retriable = false)
        : std::runtime_error(std::move(message)), kind_(kind), retriable_(retriable) {}

    ErrorKind kind() const { return kind_; }
    bool retriable() const { return retriable_; }

private:
    ErrorKind kind_;
    bool retriable_;
};

} // namespace kizuki
