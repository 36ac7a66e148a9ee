#include "oracleforge/digest.hpp"

namespace oracleforge {

namespace {

constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

constexpr std::uint64_t kLaneBasis[4] = {
    0xcbf29ce484222325ull,
    0x9ae16a3b2f90404full,
    0xc2b2ae3d27d4eb4full,
    0x27d4eb2f165667c5ull,
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

Hash256 digest256(std::span<const std::uint8_t> data) {
    std::uint64_t lane[4];
    for (int i = 0; i < 4; ++i) lane[i] = kLaneBasis[i];
    for (std::uint8_t byte : data) {
        for (int i = 0; i < 4; ++i) {
            lane[i] ^= static_cast<std::uint64_t>(byte) + (static_cast<std::uint64_t>(i) << 8);
            lane[i] *= kFnvPrime;
        }
    }
    Hash256 out;
    for (int i = 0; i < 4; ++i) {
        std::uint64_t v = splitmix64(lane[i] ^ (data.size() * kFnvPrime));
        for (int j = 0; j < 8; ++j) {
            out.bytes[static_cast<std::size_t>(i * 8 + j)] =
                static_cast<std::uint8_t>(v >> (56 - 8 * j));
        }
    }
    return out;
}

Hash256 digest256(std::string_view text) {
    return digest256(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

Hash256 id_word(std::uint64_t value) {
    Hash256 out;
    for (int j = 0; j < 8; ++j) {
        out.bytes[static_cast<std::size_t>(24 + j)] = static_cast<std::uint8_t>(value >> (56 - 8 * j));
    }
    return out;
}

std::uint64_t id_word_value(const Hash256& word) {
    std::uint64_t v = 0;
    for (int j = 0; j < 8; ++j) v = (v << 8) | word.bytes[static_cast<std::size_t>(24 + j)];
    return v;
}

std::string Hash256::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "0x";
    out.reserve(66);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

Hash256 Hash256::from_hex(std::string_view text) {
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text.remove_prefix(2);
    }
    if (text.size() != 64) throw CodecError("hash literal must be 32 bytes of hex");
    Bytes raw = oracleforge::from_hex(text);
    Hash256 out;
    std::copy(raw.begin(), raw.end(), out.bytes.begin());
    return out;
}

} // namespace oracleforge
