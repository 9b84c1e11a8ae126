#include <pcacrypt/aes.hpp>
#include <pcacrypt/hex.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pcacrypt;
using namespace pcacrypt::aes;

namespace {

Block block(std::string_view hex) {
    const auto v = from_hex(hex);
    Block b{};
    std::copy(v.begin(), v.end(), b.begin());
    return b;
}

std::string hex(const Block& b) { return to_hex(b); }

State state(std::string_view h) { return State{block(h)}; }

// Log/antilog tables over generator 0x03, built by repeated multiply-by-3
// written out as shift-and-xor.
struct LogTables {
    std::uint8_t exp[510]{};
    int log[256]{};
    LogTables() {
        unsigned x = 1;
        for (int i = 0; i < 255; ++i) {
            exp[i] = exp[i + 255] = static_cast<std::uint8_t>(x);
            log[x] = i;
            unsigned x2 = x << 1;
            if (x2 & 0x100) x2 ^= 0x11b;
            x = x2 ^ x;
        }
    }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        if (!a || !b) return 0;
        return exp[log[a] + log[b]];
    }
};

} // namespace

TEST(GfByte, MultiplicationAgreesWithLogTablesOnAllPairs) {
    const LogTables t;
    for (unsigned a = 0; a < 256; ++a)
        for (unsigned b = 0; b < 256; ++b)
            ASSERT_EQ(gf::mul(std::uint8_t(a), std::uint8_t(b)), t.mul(std::uint8_t(a), std::uint8_t(b)));
}

TEST(GfByte, FieldAxioms) {
    std::mt19937 rng(1);
    for (int i = 0; i < 2000; ++i) {
        const auto a = std::uint8_t(rng()), b = std::uint8_t(rng()), c = std::uint8_t(rng());
        EXPECT_EQ(gf::mul(a, b), gf::mul(b, a));
        EXPECT_EQ(gf::mul(gf::mul(a, b), c), gf::mul(a, gf::mul(b, c)));
        EXPECT_EQ(gf::mul(a, b ^ c), gf::mul(a, b) ^ gf::mul(a, c));
    }
    for (unsigned a = 1; a < 256; ++a) EXPECT_EQ(gf::mul(std::uint8_t(a), gf::inverse(std::uint8_t(a))), 1);
}

TEST(SBox, KnownEntries) {
    EXPECT_EQ(sbox(0x00), 0x63);
    EXPECT_EQ(sbox(0x53), 0xed);
}

TEST(SBox, MatchesFrozenTableAndInverts) {
    const auto built = detail::build_tables();
    EXPECT_EQ(built.sbox, detail::kFrozenSbox);
    State s;
    for (unsigned x = 0; x < 256; ++x) {
        s.bytes.fill(std::uint8_t(x));
        sub_bytes(s);
        inv_sub_bytes(s);
        EXPECT_EQ(s.bytes[0], x);
    }
}

TEST(SBox, PermutationProperties) {
    std::set<std::uint8_t> image;
    for (unsigned x = 0; x < 256; ++x) {
        const auto y = sbox(std::uint8_t(x));
        image.insert(y);
        EXPECT_NE(y, x);
        EXPECT_NE(y, std::uint8_t(~x));
    }
    EXPECT_EQ(image.size(), 256u);
    // Cycle type of the permutation; it includes one 2-cycle, 0x73 <-> 0x8f.
    std::vector<int> lengths;
    std::vector<bool> seen(256);
    for (unsigned x = 0; x < 256; ++x) {
        if (seen[x]) continue;
        int n = 0;
        unsigned y = x;
        do {
            seen[y] = true;
            y = sbox(std::uint8_t(y));
            ++n;
        } while (y != x);
        lengths.push_back(n);
    }
    std::sort(lengths.begin(), lengths.end());
    EXPECT_EQ(lengths, (std::vector<int>{2, 27, 59, 81, 87}));
    EXPECT_EQ(sbox(0x73), 0x8f);
    EXPECT_EQ(sbox(0x8f), 0x73);
}

TEST(ShiftRows, RowRotations) {
    State s;
    for (unsigned i = 0; i < 16; ++i) s.bytes[i] = std::uint8_t(i);
    State t = s;
    shift_rows(t);
    for (unsigned r = 0; r < 4; ++r)
        for (unsigned c = 0; c < 4; ++c) EXPECT_EQ(t.at(r, c), s.at(r, (c + r) % 4)) << r << "," << c;
    // Row 2 (a,b,c,d) -> (c,d,a,b).
    EXPECT_EQ(t.at(2, 0), s.at(2, 2));
    EXPECT_EQ(t.at(2, 1), s.at(2, 3));
    EXPECT_EQ(t.at(2, 2), s.at(2, 0));
    EXPECT_EQ(t.at(2, 3), s.at(2, 1));
    inv_shift_rows(t);
    EXPECT_EQ(t, s);

    State flat;
    flat.bytes.fill(0x5a);
    State f2 = flat;
    shift_rows(f2);
    EXPECT_EQ(f2, flat);
}

TEST(MixColumns, KnownColumnAndInverse) {
    State s = state("db135345f20a225c01010101c6c6c6c6");
    mix_columns(s);
    EXPECT_EQ(hex(s.bytes), "8e4da1bc9fdc589d01010101c6c6c6c6");

    State z;
    mix_columns(z);
    EXPECT_EQ(z, State{});

    std::mt19937 rng(2);
    for (int i = 0; i < 1000; ++i) {
        State r;
        for (auto& b : r.bytes) b = std::uint8_t(rng());
        State t = r;
        mix_columns(t);
        inv_mix_columns(t);
        EXPECT_EQ(t, r);
    }
}

TEST(AddRoundKey, XorProperties) {
    std::mt19937 rng(3);
    State s;
    for (auto& b : s.bytes) b = std::uint8_t(rng());
    const State orig = s;
    const Block zero{};
    add_round_key(s, zero);
    EXPECT_EQ(s, orig);
    Block k;
    for (auto& b : k) b = std::uint8_t(rng());
    add_round_key(s, k);
    add_round_key(s, k);
    EXPECT_EQ(s, orig);
    Block one{};
    one[5] = 0x10;
    add_round_key(s, one);
    int diff = 0;
    for (int i = 0; i < 16; ++i) diff += __builtin_popcount(s.bytes[i] ^ orig.bytes[i]);
    EXPECT_EQ(diff, 1);
    const std::uint8_t short_key[15]{};
    EXPECT_THROW(add_round_key(s, short_key), std::invalid_argument);
}

TEST(KeyExpansion, RoundCounts) {
    EXPECT_EQ(key_expansion(std::vector<std::uint8_t>(16)).keys.size(), 11u);
    EXPECT_EQ(key_expansion(std::vector<std::uint8_t>(24)).keys.size(), 13u);
    EXPECT_EQ(key_expansion(std::vector<std::uint8_t>(32)).keys.size(), 15u);
    EXPECT_THROW(key_expansion(std::vector<std::uint8_t>(20)), std::invalid_argument);
}

TEST(KeyExpansion, ZeroKeyFirstDerivedWord) {
    // w4 = w0 ^ SubWord(RotWord(w3)) ^ Rcon1 = (S(0)^1, S(0), S(0), S(0)).
    const auto rk = key_expansion(std::vector<std::uint8_t>(16));
    EXPECT_EQ(to_hex(std::span(rk.keys[1]).first(4)), "62636363");
}

TEST(KeyExpansion, PublishedExpansions) {
    auto flat = [](const RoundKeys& rk) {
        std::string s;
        for (const auto& k : rk.keys) s += to_hex(k);
        return s;
    };
    EXPECT_EQ(flat(key_expansion(from_hex("2b7e151628aed2a6abf7158809cf4f3c"))),
              "2b7e151628aed2a6abf7158809cf4f3ca0fafe1788542cb123a339392a6c7605f2"
              "c295f27a96b9435935807a7359f67f3d80477d4716fe3e1e237e446d7a883bef44"
              "a541a8525b7fb671253bdb0bad00d4d1c6f87c839d87caf2b8bc11f915bc6d88a3"
              "7a110b3efddbf98641ca0093fd4e54f70e5f5fc9f384a64fb24ea6dc4fead27321"
              "b58dbad2312bf5607f8d292fac7766f319fadc2128d12941575c006ed014f9a8c9"
              "ee2589e13f0cc8b6630ca6");
    EXPECT_EQ(flat(key_expansion(from_hex("8e73b0f7da0e6452c810f32b809079e562f8ead2522c6b7b"))),
              "8e73b0f7da0e6452c810f32b809079e562f8ead2522c6b7bfe0c91f72402f5a5ec"
              "12068e6c827f6b0e7a95b95c56fec24db7b4bd69b5411885a74796e92538fde75f"
              "ad44bb095386485af05721efb14fa448f6d94d6dce24aa326360113b30e6a25e7e"
              "d583b1cf9a27f939436a94f767c0a69407d19da4e1ec1786eb6fa64971485f7032"
              "22cb8755e26d135233f0b7b340beeb282f18a2596747d26b458c553ea7e1466c94"
              "11f1df821f750aad07d753ca4005388fcc5006282d166abc3ce7b5e98ba06f448c"
              "773c8ecc720401002202");
}

TEST(Cipher, KnownAnswerVectors) {
    const Block pt = block("00112233445566778899aabbccddeeff");
    std::vector<std::uint8_t> key(32);
    for (unsigned i = 0; i < 32; ++i) key[i] = std::uint8_t(i);
    const struct {
        std::size_t bytes;
        const char* ct;
    } cases[] = {{16, "69c4e0d86a7b0430d8cdb78070b4c55a"},
                 {24, "dda97ca4864cdfe06eaf70a0ec0d7191"},
                 {32, "8ea2b7ca516745bfeafc49904b496089"}};
    for (const auto& c : cases) {
        const Aes aes(std::span<const std::uint8_t>(key).first(c.bytes));
        EXPECT_EQ(hex(aes.encrypt_block(pt)), c.ct);
        EXPECT_EQ(aes.decrypt_block(block(c.ct)), pt);
    }
    const Aes sp(from_hex("2b7e151628aed2a6abf7158809cf4f3c"));
    EXPECT_EQ(hex(sp.encrypt_block(block("6bc1bee22e409f96e93d7e117393172a"))), "3ad77bb40d7a3660a89ecaf32466ef97");
}

TEST(Cipher, RoundTripAllKeySizes) {
    std::mt19937_64 rng(4);
    for (std::size_t bytes : {16u, 24u, 32u})
        for (int i = 0; i < 10000; ++i) {
            std::vector<std::uint8_t> key(bytes);
            for (auto& b : key) b = std::uint8_t(rng());
            Block p;
            for (auto& b : p) b = std::uint8_t(rng());
            const auto rk = key_expansion(key);
            ASSERT_EQ(decrypt_block(encrypt_block(p, rk), rk), p);
        }
}

TEST(Cipher, RoundStructureTrace) {
    const auto rk = key_expansion(from_hex("2b7e151628aed2a6abf7158809cf4f3c"));
    std::vector<std::pair<unsigned, Stage>> stages;
    std::vector<State> states;
    const auto ct = encrypt_block(block("3243f6a8885a308d313198a2e0370734"), rk,
                                  [&](unsigned round, Stage st, const State& s) {
                                      stages.emplace_back(round, st);
                                      states.push_back(s);
                                  });
    EXPECT_EQ(hex(ct), "3925841d02dc09fbdc118597196a0b32");
    // Pre-round: one AddRoundKey; rounds 1..9: four stages; round 10: no MixColumns.
    ASSERT_EQ(stages.size(), 1u + 9 * 4 + 3);
    EXPECT_EQ(stages[0], std::make_pair(0u, Stage::AddRoundKey));
    for (const auto& [round, st] : stages)
        if (st == Stage::MixColumns) { EXPECT_LT(round, 10u); }
    EXPECT_EQ(stages.back(), std::make_pair(10u, Stage::AddRoundKey));
    EXPECT_EQ(stages[stages.size() - 2], std::make_pair(10u, Stage::ShiftRows));

    // Round 1 stepped by hand with the individual transformations.
    State s = state("3243f6a8885a308d313198a2e0370734");
    add_round_key(s, rk.keys[0]);
    EXPECT_EQ(hex(s.bytes), "193de3bea0f4e22b9ac68d2ae9f84808");
    EXPECT_EQ(states[0], s);
    sub_bytes(s);
    EXPECT_EQ(hex(s.bytes), "d42711aee0bf98f1b8b45de51e415230");
    EXPECT_EQ(states[1], s);
    shift_rows(s);
    EXPECT_EQ(hex(s.bytes), "d4bf5d30e0b452aeb84111f11e2798e5");
    EXPECT_EQ(states[2], s);
    mix_columns(s);
    EXPECT_EQ(hex(s.bytes), "046681e5e0cb199a48f8d37a2806264c");
    EXPECT_EQ(states[3], s);
    add_round_key(s, rk.keys[1]);
    EXPECT_EQ(hex(s.bytes), "a49c7ff2689f352b6b5bea43026a5049");
    EXPECT_EQ(states[4], s);
}
