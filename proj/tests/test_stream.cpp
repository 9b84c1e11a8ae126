#include <pcacrypt/aes.hpp>
#include <pcacrypt/hex.hpp>
#include <pcacrypt/pca_cipher.hpp>
#include <pcacrypt/stream.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace pcacrypt;
using namespace pcacrypt::stream;

namespace {

std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> v(n);
    for (auto& b : v) b = static_cast<std::uint8_t>(rng());
    return v;
}

const std::vector<std::uint8_t> kKey = from_hex("000102030405060708090a0b0c0d0e0f");

// Identity cipher: the keystream is the counter blocks themselves.
struct IdentityCipher {
    Block encrypt_block(const Block& b) const { return b; }
    Block decrypt_block(const Block& b) const { return b; }
};

} // namespace

TEST(Padding, LengthsAndValidation) {
    for (std::size_t n = 0; n < 40; ++n) {
        const std::vector<std::uint8_t> in(n, 0xaa);
        const auto p = pad(in);
        EXPECT_EQ(p.size() % 16, 0u);
        EXPECT_GT(p.size(), n);
        EXPECT_LE(p.size(), n + 16);
        EXPECT_EQ(unpadded_size(p), n);
    }
    std::vector<std::uint8_t> bad(16, 0);
    EXPECT_THROW(unpadded_size(bad), CorruptCiphertext);
    bad.back() = 17;
    EXPECT_THROW(unpadded_size(bad), CorruptCiphertext);
    bad.back() = 2;
    EXPECT_THROW(unpadded_size(bad), CorruptCiphertext);
    EXPECT_THROW(unpadded_size(std::vector<std::uint8_t>(15, 1)), CorruptCiphertext);
}

TEST(CounterBlock, BigEndianCarry) {
    Block b{};
    b.fill(0xff);
    EXPECT_EQ(to_hex(counter_block(b, 1)), "00000000000000000000000000000000");
    Block z{};
    EXPECT_EQ(to_hex(counter_block(z, 0x0102)), "00000000000000000000000000000102");
    z[7] = 0xff;
    z[8] = 0xff;
    z[15] = 0xff;
    EXPECT_EQ(to_hex(counter_block(z, std::uint64_t(0xffffffffffffff01))),
              "0000000000000100ff00000000000000");
}

TEST(Ecb, SingleBlockIsBlockEncryptionPlusPaddingBlock) {
    const aes::Aes c(kKey);
    const auto pt = from_hex("00112233445566778899aabbccddeeff");
    const auto ct = encrypt_stream(c, pt, Mode::Ecb, 1);
    ASSERT_EQ(ct.size(), 32u);
    EXPECT_EQ(to_hex(std::span(ct).first(16)), "69c4e0d86a7b0430d8cdb78070b4c55a");
    Block padding;
    padding.fill(16);
    EXPECT_EQ(to_hex(std::span(ct).subspan(16)), to_hex(c.encrypt_block(padding)));
}

TEST(Ctr, KeystreamLayout) {
    const IdentityCipher c;
    const std::vector<std::uint8_t> zeros(40, 0);
    const auto ct = encrypt_stream(c, zeros, Mode::Ctr, 3);
    ASSERT_EQ(ct.size(), 56u);
    Block nonce;
    std::copy_n(ct.begin(), 16, nonce.begin());
    for (std::size_t i = 0; i < 40; ++i) EXPECT_EQ(ct[16 + i], counter_block(nonce, i / 16)[i % 16]);
}

TEST(Ctr, NonceDependsOnPlaintextAndIsChecked) {
    const cipher::PcaCipher c(kKey);
    auto a = random_bytes(100, 1), b = a;
    b[99] ^= 1;
    const auto ca = encrypt_stream(c, a, Mode::Ctr, 1), cb = encrypt_stream(c, b, Mode::Ctr, 1);
    EXPECT_NE(to_hex(std::span(ca).first(16)), to_hex(std::span(cb).first(16)));
    auto tampered = ca;
    tampered[40] ^= 0x10;
    EXPECT_THROW(decrypt_stream(c, tampered, Mode::Ctr, 1), CorruptCiphertext);
    EXPECT_THROW(decrypt_stream(c, std::span(ca).first(10), Mode::Ctr, 1), CorruptCiphertext);
    EXPECT_THROW(decrypt_stream(c, std::span(ca).first(60), Mode::Ctr, 1), CorruptCiphertext);
    EXPECT_EQ(decrypt_stream(c, encrypt_stream(c, std::vector<std::uint8_t>{}, Mode::Ctr, 1), Mode::Ctr, 1).size(), 0u);
}

TEST(Stream, RoundTripBothModesBothSchemes) {
    const auto data = random_bytes(1 << 20, 2);
    const aes::Aes a(kKey);
    const cipher::PcaCipher p(kKey);
    for (Mode m : {Mode::Ecb, Mode::Ctr}) {
        EXPECT_EQ(decrypt_stream(a, encrypt_stream(a, data, m, 4), m, 2), data);
        EXPECT_EQ(decrypt_stream(p, encrypt_stream(p, data, m, 4), m, 3), data);
    }
}

TEST(Stream, OutputIndependentOfWorkerCount) {
    const auto data = random_bytes(100003, 3);
    const cipher::PcaCipher p(from_hex("8e73b0f7da0e6452c810f32b809079e562f8ead2522c6b7b"));
    for (Mode m : {Mode::Ecb, Mode::Ctr}) {
        const auto ref = encrypt_stream(p, data, m, 1);
        for (unsigned w : {2u, 4u, 8u, 64u}) EXPECT_EQ(encrypt_stream(p, data, m, w), ref) << w;
    }
}

TEST(ParallelFor, CoversRangeExactlyOnce) {
    for (std::size_t n : {0u, 1u, 7u, 100u})
        for (unsigned w : {1u, 3u, 16u}) {
            std::vector<int> hits(n, 0);
            parallel_for(n, w, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) ++hits[i];
            });
            for (int h : hits) EXPECT_EQ(h, 1);
        }
}

TEST(Mode, Parse) {
    EXPECT_EQ(parse_mode("ecb"), Mode::Ecb);
    EXPECT_EQ(parse_mode("ctr"), Mode::Ctr);
    EXPECT_THROW(parse_mode("cbc"), std::invalid_argument);
}
