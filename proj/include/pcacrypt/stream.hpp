#pragma once

// ECB and CTR over any 128-bit block cipher, blocks spread across workers.
//
// ECB pads with 1..16 bytes, each equal to the pad length. CTR output is a
// 16-byte header followed by the payload XOR keystream; block i of the
// keystream encrypts header + i (big-endian 128-bit addition). The header is
// a CBC-MAC of the plaintext under the same cipher, so output is
// deterministic and decryption can check it.

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace pcacrypt::stream {

using Block = std::array<std::uint8_t, 16>;
inline constexpr std::size_t kBlockBytes = 16;

template <typename C>
concept BlockCipher = requires(const C& c, const Block& b) {
    { c.encrypt_block(b) } -> std::same_as<Block>;
    { c.decrypt_block(b) } -> std::same_as<Block>;
};

enum class Mode { Ecb, Ctr };

inline Mode parse_mode(std::string_view s) {
    if (s == "ecb") return Mode::Ecb;
    if (s == "ctr") return Mode::Ctr;
    throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected ecb or ctr)");
}

inline std::string_view to_string(Mode m) noexcept { return m == Mode::Ecb ? "ecb" : "ctr"; }

class CorruptCiphertext : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Runs fn(first, last) over [0, count) split into contiguous slices.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, count)));
    if (workers == 1) {
        fn(std::size_t{0}, count);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    const std::size_t per = count / workers, extra = count % workers;
    std::size_t first = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t last = first + per + (w < extra ? 1 : 0);
        if (w + 1 == workers) fn(first, last);
        else pool.emplace_back([&fn, first, last] { fn(first, last); });
        first = last;
    }
}

inline Block load(std::span<const std::uint8_t> bytes, std::size_t block) {
    Block b;
    std::copy_n(bytes.begin() + block * kBlockBytes, kBlockBytes, b.begin());
    return b;
}

inline Block counter_block(const Block& initial, std::uint64_t index) {
    Block b = initial;
    unsigned carry = 0;
    for (int i = 15; i >= 0; --i) {
        const unsigned add = static_cast<unsigned>(index & 0xff);
        index >>= 8;
        const unsigned sum = b[i] + add + carry;
        b[i] = static_cast<std::uint8_t>(sum);
        carry = sum >> 8;
    }
    return b;
}

inline std::vector<std::uint8_t> pad(std::span<const std::uint8_t> in) {
    const std::size_t n = kBlockBytes - in.size() % kBlockBytes;
    std::vector<std::uint8_t> out(in.begin(), in.end());
    out.insert(out.end(), n, static_cast<std::uint8_t>(n));
    return out;
}

inline std::size_t unpadded_size(std::span<const std::uint8_t> in) {
    if (in.empty() || in.size() % kBlockBytes) throw CorruptCiphertext("ciphertext length is not a positive multiple of 16");
    const std::uint8_t n = in.back();
    if (n < 1 || n > kBlockBytes) throw CorruptCiphertext("invalid padding length");
    for (std::size_t i = in.size() - n; i < in.size(); ++i)
        if (in[i] != n) throw CorruptCiphertext("invalid padding bytes");
    return in.size() - n;
}

template <BlockCipher C>
std::vector<std::uint8_t> ecb_apply(const C& c, std::span<const std::uint8_t> in, bool encrypt, unsigned workers) {
    std::vector<std::uint8_t> out(in.size());
    parallel_for(in.size() / kBlockBytes, workers, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Block b = encrypt ? c.encrypt_block(load(in, i)) : c.decrypt_block(load(in, i));
            std::copy(b.begin(), b.end(), out.begin() + i * kBlockBytes);
        }
    });
    return out;
}

template <BlockCipher C>
void ctr_apply(const C& c, const Block& initial, std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
               unsigned workers) {
    const std::size_t blocks = (in.size() + kBlockBytes - 1) / kBlockBytes;
    parallel_for(blocks, workers, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Block ks = c.encrypt_block(counter_block(initial, i));
            const std::size_t end = std::min(in.size(), (i + 1) * kBlockBytes);
            for (std::size_t k = i * kBlockBytes; k < end; ++k) out[k] = in[k] ^ ks[k % kBlockBytes];
        }
    });
}

// CBC-MAC over (length block, padded message).
template <BlockCipher C>
Block derive_nonce(const C& c, std::span<const std::uint8_t> plaintext) {
    Block state{};
    std::uint64_t len = plaintext.size();
    for (int i = 15; i >= 8; --i, len >>= 8) state[i] = static_cast<std::uint8_t>(len);
    state = c.encrypt_block(state);
    const std::size_t full = plaintext.size() / kBlockBytes;
    for (std::size_t i = 0; i <= full; ++i) {
        Block m{};
        const std::size_t lo = i * kBlockBytes, hi = std::min(plaintext.size(), lo + kBlockBytes);
        std::copy(plaintext.begin() + lo, plaintext.begin() + hi, m.begin());
        if (i == full) m[hi - lo] = 0x80;
        for (std::size_t k = 0; k < kBlockBytes; ++k) state[k] ^= m[k];
        state = c.encrypt_block(state);
    }
    return state;
}

template <BlockCipher C>
std::vector<std::uint8_t> encrypt_stream(const C& c, std::span<const std::uint8_t> in, Mode mode, unsigned workers) {
    if (mode == Mode::Ecb) return ecb_apply(c, pad(in), true, workers);
    const Block nonce = derive_nonce(c, in);
    std::vector<std::uint8_t> out(kBlockBytes + in.size());
    std::copy(nonce.begin(), nonce.end(), out.begin());
    ctr_apply(c, nonce, in, std::span(out).subspan(kBlockBytes), workers);
    return out;
}

template <BlockCipher C>
std::vector<std::uint8_t> decrypt_stream(const C& c, std::span<const std::uint8_t> in, Mode mode, unsigned workers) {
    if (mode == Mode::Ecb) {
        if (in.empty() || in.size() % kBlockBytes)
            throw CorruptCiphertext("ciphertext length " + std::to_string(in.size()) + " is not a positive multiple of 16");
        auto out = ecb_apply(c, in, false, workers);
        out.resize(unpadded_size(out));
        return out;
    }
    if (in.size() < kBlockBytes) throw CorruptCiphertext("ciphertext shorter than the 16-byte nonce header");
    const Block nonce = load(in, 0);
    std::vector<std::uint8_t> out(in.size() - kBlockBytes);
    ctr_apply(c, nonce, in.subspan(kBlockBytes), out, workers);
    if (derive_nonce(c, out) != nonce) throw CorruptCiphertext("nonce header does not match the decrypted payload");
    return out;
}

} // namespace pcacrypt::stream
