#pragma once

// Reference AES-128/192/256. Straightforward byte-oriented implementation of
// the four round transformations and the key schedule; no T-tables.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcacrypt::aes {

using Block = std::array<std::uint8_t, 16>;

// GF(2^8) with reduction polynomial x^8 + x^4 + x^3 + x + 1.
namespace gf {

constexpr std::uint8_t xtime(std::uint8_t a) noexcept {
    return static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) noexcept {
    std::uint8_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a = xtime(a);
        b >>= 1;
    }
    return r;
}

// a^254, which is a^-1 for a != 0 and 0 for a == 0.
constexpr std::uint8_t inverse(std::uint8_t a) noexcept {
    std::uint8_t result = 1, base = a;
    for (unsigned e = 254; e; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

} // namespace gf

namespace detail {

constexpr std::uint8_t rotl8(std::uint8_t x, unsigned k) noexcept {
    return static_cast<std::uint8_t>((x << k) | (x >> (8 - k)));
}

constexpr std::uint8_t affine(std::uint8_t b) noexcept {
    return static_cast<std::uint8_t>(b ^ rotl8(b, 1) ^ rotl8(b, 2) ^ rotl8(b, 3) ^ rotl8(b, 4) ^ 0x63);
}

struct Tables {
    std::array<std::uint8_t, 256> sbox{};
    std::array<std::uint8_t, 256> inv_sbox{};
    std::array<std::array<std::uint8_t, 256>, 15> mul{}; // mul[f][x] = f * x for the MixColumns factors
};

constexpr Tables build_tables() noexcept {
    Tables t;
    for (unsigned x = 0; x < 256; ++x) {
        const std::uint8_t s = affine(gf::inverse(static_cast<std::uint8_t>(x)));
        t.sbox[x] = s;
        t.inv_sbox[s] = static_cast<std::uint8_t>(x);
        for (unsigned f = 0; f < t.mul.size(); ++f) t.mul[f][x] = gf::mul(static_cast<std::uint8_t>(f), static_cast<std::uint8_t>(x));
    }
    return t;
}

// FIPS-197 S-box, transcribed.
inline constexpr std::array<std::uint8_t, 256> kFrozenSbox = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};

inline const Tables& tables() {
    static const Tables t = [] {
        Tables built = build_tables();
        if (built.sbox != kFrozenSbox) throw std::logic_error("computed AES S-box disagrees with frozen table");
        return built;
    }();
    return t;
}

} // namespace detail

inline std::uint8_t sbox(std::uint8_t x) { return detail::tables().sbox[x]; }
inline std::uint8_t inv_sbox(std::uint8_t x) { return detail::tables().inv_sbox[x]; }

// 4x4 byte state, filled column by column: byte k sits at row k%4, column k/4.
struct State {
    Block bytes{};

    static State load(std::span<const std::uint8_t, 16> in) {
        State s;
        std::copy(in.begin(), in.end(), s.bytes.begin());
        return s;
    }
    std::uint8_t& at(unsigned row, unsigned col) noexcept { return bytes[row + 4 * col]; }
    std::uint8_t at(unsigned row, unsigned col) const noexcept { return bytes[row + 4 * col]; }

    friend bool operator==(const State&, const State&) = default;
};

inline void sub_bytes(State& s) {
    const auto& t = detail::tables().sbox;
    for (auto& b : s.bytes) b = t[b];
}

inline void inv_sub_bytes(State& s) {
    const auto& t = detail::tables().inv_sbox;
    for (auto& b : s.bytes) b = t[b];
}

// Row r rotates left by r.
inline void shift_rows(State& s) noexcept {
    for (unsigned r = 1; r < 4; ++r) {
        std::uint8_t row[4];
        for (unsigned c = 0; c < 4; ++c) row[c] = s.at(r, (c + r) % 4);
        for (unsigned c = 0; c < 4; ++c) s.at(r, c) = row[c];
    }
}

inline void inv_shift_rows(State& s) noexcept {
    for (unsigned r = 1; r < 4; ++r) {
        std::uint8_t row[4];
        for (unsigned c = 0; c < 4; ++c) row[(c + r) % 4] = s.at(r, c);
        for (unsigned c = 0; c < 4; ++c) s.at(r, c) = row[c];
    }
}

namespace detail {

// Multiply every column by the circulant matrix with first row m.
inline void mix_with(State& s, const std::uint8_t (&m)[4]) {
    const auto& mul = tables().mul;
    for (unsigned c = 0; c < 4; ++c) {
        std::uint8_t col[4];
        for (unsigned r = 0; r < 4; ++r) col[r] = s.at(r, c);
        for (unsigned r = 0; r < 4; ++r) {
            std::uint8_t acc = 0;
            for (unsigned k = 0; k < 4; ++k) acc ^= mul[m[(k + 4 - r) % 4]][col[k]];
            s.at(r, c) = acc;
        }
    }
}

} // namespace detail

inline void mix_columns(State& s) {
    static constexpr std::uint8_t m[4] = {0x02, 0x03, 0x01, 0x01};
    detail::mix_with(s, m);
}

inline void inv_mix_columns(State& s) {
    static constexpr std::uint8_t m[4] = {0x0e, 0x0b, 0x0d, 0x09};
    detail::mix_with(s, m);
}

inline void add_round_key(State& s, std::span<const std::uint8_t> key) {
    if (key.size() != 16) throw std::invalid_argument("round key must be 16 bytes");
    for (std::size_t i = 0; i < 16; ++i) s.bytes[i] ^= key[i];
}

struct RoundKeys {
    std::vector<Block> keys; // rounds() + 1 entries
    unsigned rounds() const noexcept { return static_cast<unsigned>(keys.size()) - 1; }
};

constexpr unsigned rounds_for_key_bytes(std::size_t n) {
    switch (n) {
    case 16: return 10;
    case 24: return 12;
    case 32: return 14;
    }
    throw std::invalid_argument("AES key must be 16, 24 or 32 bytes, got " + std::to_string(n));
}

inline RoundKeys key_expansion(std::span<const std::uint8_t> key) {
    const unsigned nr = rounds_for_key_bytes(key.size());
    const std::size_t nk = key.size() / 4;
    const std::size_t total = 4 * (nr + 1);
    std::vector<std::array<std::uint8_t, 4>> w(total);
    for (std::size_t i = 0; i < nk; ++i)
        for (unsigned j = 0; j < 4; ++j) w[i][j] = key[4 * i + j];
    std::uint8_t rcon = 0x01;
    for (std::size_t i = nk; i < total; ++i) {
        auto temp = w[i - 1];
        if (i % nk == 0) {
            temp = {sbox(temp[1]), sbox(temp[2]), sbox(temp[3]), sbox(temp[0])};
            temp[0] ^= rcon;
            rcon = gf::xtime(rcon);
        } else if (nk > 6 && i % nk == 4) {
            for (auto& b : temp) b = sbox(b);
        }
        for (unsigned j = 0; j < 4; ++j) w[i][j] = w[i - nk][j] ^ temp[j];
    }
    RoundKeys rk;
    rk.keys.resize(nr + 1);
    for (std::size_t i = 0; i < total; ++i)
        for (unsigned j = 0; j < 4; ++j) rk.keys[i / 4][4 * (i % 4) + j] = w[i][j];
    return rk;
}

enum class Stage { AddRoundKey, SubBytes, ShiftRows, MixColumns };

constexpr std::string_view to_string(Stage s) noexcept {
    switch (s) {
    case Stage::AddRoundKey: return "AddRoundKey";
    case Stage::SubBytes: return "SubBytes";
    case Stage::ShiftRows: return "ShiftRows";
    case Stage::MixColumns: return "MixColumns";
    }
    return "?";
}

struct NoTrace {
    void operator()(unsigned, Stage, const State&) const noexcept {}
};

// trace(round, stage, state) is called after every transformation.
template <typename Trace = NoTrace>
Block encrypt_block(const Block& in, const RoundKeys& rk, Trace&& trace = {}) {
    State s = State::load(in);
    const unsigned nr = rk.rounds();
    add_round_key(s, rk.keys[0]);
    trace(0u, Stage::AddRoundKey, s);
    for (unsigned round = 1; round <= nr; ++round) {
        sub_bytes(s);
        trace(round, Stage::SubBytes, s);
        shift_rows(s);
        trace(round, Stage::ShiftRows, s);
        if (round != nr) {
            mix_columns(s);
            trace(round, Stage::MixColumns, s);
        }
        add_round_key(s, rk.keys[round]);
        trace(round, Stage::AddRoundKey, s);
    }
    return s.bytes;
}

inline Block decrypt_block(const Block& in, const RoundKeys& rk) {
    State s = State::load(in);
    const unsigned nr = rk.rounds();
    add_round_key(s, rk.keys[nr]);
    for (unsigned round = nr; round-- > 0;) {
        inv_shift_rows(s);
        inv_sub_bytes(s);
        add_round_key(s, rk.keys[round]);
        if (round != 0) inv_mix_columns(s);
    }
    return s.bytes;
}

class Aes {
public:
    explicit Aes(std::span<const std::uint8_t> key) : keys_(key_expansion(key)), key_bits_(key.size() * 8) {}

    Block encrypt_block(const Block& b) const { return aes::encrypt_block(b, keys_); }
    Block decrypt_block(const Block& b) const { return aes::decrypt_block(b, keys_); }

    unsigned rounds() const noexcept { return keys_.rounds(); }
    std::size_t key_bits() const noexcept { return key_bits_; }
    const RoundKeys& round_keys() const noexcept { return keys_; }

private:
    RoundKeys keys_;
    std::size_t key_bits_;
};

} // namespace pcacrypt::aes
