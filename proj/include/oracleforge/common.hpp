#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oracleforge {

using Bytes = std::vector<std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string_view_copy(const Bytes& b) {
    return std::string(b.begin(), b.end());
}

std::string to_hex(const Bytes& bytes);
Bytes from_hex(std::string_view hex);

// Base error for everything raised by this library. Subclasses exist so that
// callers (CLI, oracles) can map failures to retry/dead-letter/exit-code
// behavior without string matching.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class CodecError : public Error {
public:
    using Error::Error;
};

} // namespace oracleforge
