#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "oracleforge/common.hpp"

namespace oracleforge {

// 32-byte identifier used for transaction hashes, block hashes and event
// topic words. Not cryptographic: the chain is a simulation, stability and
// dispersion are what matter.
struct Hash256 {
    std::array<std::uint8_t, 32> bytes{};

    auto operator<=>(const Hash256&) const = default;

    std::string hex() const; // "0x" + 64 lowercase hex chars
    static Hash256 from_hex(std::string_view text);

    bool is_zero() const {
        for (auto b : bytes) {
            if (b != 0) return false;
        }
        return true;
    }
};

// Stable 32-byte digest of an arbitrary byte string (four FNV-1a lanes with
// a splitmix64 finalizer). Identical input always yields the identical
// digest, on every platform.
Hash256 digest256(std::span<const std::uint8_t> data);
Hash256 digest256(std::string_view text);

// Topic word holding a numeric id in its trailing 8 bytes (big endian).
Hash256 id_word(std::uint64_t value);
std::uint64_t id_word_value(const Hash256& word);

struct Hash256Hasher {
    std::size_t operator()(const Hash256& h) const {
        std::size_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | h.bytes[static_cast<std::size_t>(i)];
        return v;
    }
};

} // namespace oracleforge
