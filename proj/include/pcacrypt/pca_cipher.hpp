#pragma once

// Cycle-walking block cipher over programmable CA.
//
// A 128-bit block is split into 32 lanes of 4 null-boundary cells. Every round
// draws one control pair per cell from a rule-30 keystream CA, turns the pairs
// into lane rule vectors through the rule selection table, and walks each lane
// T steps along its state cycle. Every admitted lane has all orbits of length
// L = 4, so decryption walks the remaining L - T steps. A left rotation of the
// whole block by 11 bits follows each round unless switched off.
//
// The whole-block layout treats all 128 cells as one CA instead and obtains L
// from the affine order of the step map.

#include "affine.hpp"
#include "aes.hpp"
#include "ca_core.hpp"
#include "pca_engine.hpp"
#include "transition_graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcacrypt::cipher {

using Block = aes::Block;
using gf2::BigInt;

inline constexpr std::size_t kBlockCells = 128;
inline constexpr std::size_t kLaneWidth = 4;
inline constexpr std::size_t kLanes = kBlockCells / kLaneWidth;
inline constexpr unsigned kLaneCycle = 4;
inline constexpr unsigned kRotation = 11;
inline constexpr int kKeystreamRule = 30;
inline constexpr std::size_t kWarmupSteps = 64;

enum class Layout { Lanes, WholeBlock };

struct CipherOptions {
    unsigned steps = 2;                 // T, the forward walk per round
    std::optional<unsigned> rounds;     // defaults to 10/12/14 by key size
    bool rotate = true;                 // inter-lane rotation after each round
    Layout layout = Layout::Lanes;
};

inline const pca::RuleVector& canonical_lane() {
    static const pca::RuleVector rv{51, 51, 195, 153};
    return rv;
}

inline constexpr std::array<pca::ControlPair, kLaneWidth> kCanonicalLaneControls{
    {{false, false}, {false, false}, {true, false}, {true, true}}};

inline unsigned default_rounds(std::size_t key_bytes) {
    switch (key_bytes) {
    case 16: return 10;
    case 24: return 12;
    case 32: return 14;
    }
    throw std::invalid_argument("key must be 16, 24 or 32 bytes, got " + std::to_string(key_bytes));
}

// Key folded to 128 bits by XOR of 16-byte chunks. The key length goes into
// the last byte and the top bit of the first byte is flipped so the all-zero
// key does not seed rule 30 with its fixed point.
inline Block seed_from_key(std::span<const std::uint8_t> key) {
    default_rounds(key.size());
    Block seed{};
    for (std::size_t i = 0; i < key.size(); ++i) seed[i % 16] ^= key[i];
    seed[15] ^= static_cast<std::uint8_t>(key.size());
    seed[0] ^= 0x80;
    return seed;
}

class KeystreamCA {
public:
    explicit KeystreamCA(const Block& seed)
        : state_(ca::Configuration::from_bytes(seed, kBlockCells)), rule_(ca::RuleTable::from_number(kKeystreamRule)) {
        for (std::size_t i = 0; i < kWarmupSteps; ++i) advance();
    }

    // One step, then the 64 center cells 32..95 with cell 32 in the top bit.
    std::uint64_t clock() {
        advance();
        const auto w = state_.words();
        return (w[0] << 32) | (w[1] >> 32);
    }

    const ca::Configuration& state() const noexcept { return state_; }

private:
    void advance() { state_ = ca::step_uniform(state_, rule_, ca::Boundary::Periodic); }

    ca::Configuration state_;
    ca::RuleTable rule_;
};

// Four clocks give 256 bits; cell i takes bits 2i and 2i+1 as (C1, C2).
inline pca::ControlSignals draw_controls(KeystreamCA& ks) {
    std::vector<pca::ControlPair> pairs(kBlockCells);
    for (std::size_t chunk = 0; chunk < 4; ++chunk) {
        const std::uint64_t bits = ks.clock();
        for (std::size_t j = 0; j < 32; ++j) {
            const unsigned shift = 63 - 2 * j;
            pairs[32 * chunk + j] = {bool((bits >> shift) & 1), bool((bits >> (shift - 1)) & 1)};
        }
    }
    return pca::ControlSignals(std::move(pairs));
}

// Two bits per cell, (C1, C2), cell 0 in the top bits of byte 0.
inline std::vector<std::uint8_t> pack_controls(const pca::ControlSignals& signals) {
    std::vector<std::uint8_t> out((2 * signals.width() + 7) / 8);
    for (std::size_t i = 0; i < signals.width(); ++i) {
        const auto p = signals[i];
        if (p.c1) out[(2 * i) / 8] |= std::uint8_t(0x80 >> ((2 * i) % 8));
        if (p.c2) out[(2 * i + 1) / 8] |= std::uint8_t(0x80 >> ((2 * i + 1) % 8));
    }
    return out;
}

struct LaneProfile {
    pca::RuleVector rules;
    bool admitted = false;  // bijective with every orbit of length kLaneCycle
    std::array<std::uint8_t, 16> step{};
};

// Lane vectors over {51,195,153} indexed in base 3, cell 0 as the top digit.
inline std::size_t lane_code(const pca::RuleVector& rv) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < rv.size(); ++i) {
        const int r = rv[i].number();
        code = 3 * code + (r == 51 ? 0 : r == 195 ? 1 : r == 153 ? 2 : throw std::invalid_argument("rule outside {51,195,153}"));
    }
    return code;
}

inline const std::array<LaneProfile, 81>& lane_catalog() {
    static const std::array<LaneProfile, 81> catalog = [] {
        std::array<LaneProfile, 81> out;
        constexpr int base[3] = {51, 195, 153};
        for (std::size_t code = 0; code < out.size(); ++code) {
            std::array<int, kLaneWidth> rules{};
            for (std::size_t i = 0, c = code; i < kLaneWidth; ++i, c /= 3) rules[kLaneWidth - 1 - i] = base[c % 3];
            LaneProfile& p = out[code];
            p.rules = pca::RuleVector(std::span<const int>(rules));
            const auto g = graph::build_graph(p.rules, ca::Boundary::Null, kLaneWidth);
            for (std::size_t s = 0; s < 16; ++s) p.step[s] = static_cast<std::uint8_t>(g.successor(s));
            if (graph::is_group_ca(g)) {
                const auto lengths = graph::find_cycles(g).cycle_lengths();
                p.admitted = std::all_of(lengths.begin(), lengths.end(), [](std::size_t l) { return l == kLaneCycle; });
            }
        }
        return out;
    }();
    return catalog;
}

struct CipherKey {
    std::vector<std::uint8_t> raw;
    Block seed{};
    unsigned steps = 2;
    unsigned rounds = 10;
};

struct RoundSchedule {
    pca::ControlSignals drawn;     // straight from the keystream
    pca::ControlSignals controls;  // after remapping rejected lanes
    pca::RuleVector rules;
    BigInt cycle_length;           // L_r
    BigInt forward_steps;          // T_r
    std::size_t remapped = 0;      // lanes (or whole blocks) replaced by the canonical pattern
};

struct Schedule {
    CipherKey key;
    CipherOptions options;
    std::vector<RoundSchedule> rounds;

    pca::ControlProgram program() const {
        std::vector<pca::ControlSignals> entries;
        for (const auto& r : rounds) entries.push_back(r.controls);
        return pca::ControlProgram(std::move(entries));
    }
};

namespace detail {

inline BigInt clamp_steps(unsigned t, const BigInt& cycle) { return 1 + BigInt(t - 1) % (cycle - 1); }

inline void schedule_lanes(RoundSchedule& r) {
    std::vector<pca::ControlPair> pairs(r.drawn.pairs().begin(), r.drawn.pairs().end());
    const auto& catalog = lane_catalog();
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
        std::array<int, kLaneWidth> rules{};
        for (std::size_t i = 0; i < kLaneWidth; ++i) {
            const auto p = pairs[kLaneWidth * lane + i];
            rules[i] = pca::select_rule(p.c1, p.c2);
        }
        if (!catalog[lane_code(pca::RuleVector(std::span<const int>(rules)))].admitted) {
            std::copy(kCanonicalLaneControls.begin(), kCanonicalLaneControls.end(), pairs.begin() + kLaneWidth * lane);
            ++r.remapped;
        }
    }
    r.controls = pca::ControlSignals(std::move(pairs));
    r.rules = r.controls.rule_vector();
    r.cycle_length = kLaneCycle;
}

inline void schedule_whole_block(RoundSchedule& r) {
    schedule_lanes(r);
    auto order = graph::affine_order(r.rules, ca::Boundary::Null, kBlockCells);
    if (!order.bijective || order.period < 2) {
        std::vector<pca::ControlPair> pairs;
        for (std::size_t lane = 0; lane < kLanes; ++lane)
            pairs.insert(pairs.end(), kCanonicalLaneControls.begin(), kCanonicalLaneControls.end());
        r.controls = pca::ControlSignals(std::move(pairs));
        r.rules = r.controls.rule_vector();
        order = graph::affine_order(r.rules, ca::Boundary::Null, kBlockCells);
        r.remapped = kLanes;
    }
    r.cycle_length = order.period;
}

} // namespace detail

inline Schedule key_schedule(std::span<const std::uint8_t> raw, const CipherOptions& options = {}) {
    if (options.steps < 1) throw std::invalid_argument("step count must be at least 1");
    if (options.rounds && *options.rounds < 1) throw std::invalid_argument("round count must be at least 1");
    Schedule s;
    s.options = options;
    s.key.raw.assign(raw.begin(), raw.end());
    s.key.seed = seed_from_key(raw);
    s.key.steps = options.steps;
    s.key.rounds = options.rounds.value_or(default_rounds(raw.size()));

    KeystreamCA ks(s.key.seed);
    for (unsigned round = 0; round < s.key.rounds; ++round) {
        RoundSchedule r;
        r.drawn = draw_controls(ks);
        if (options.layout == Layout::Lanes) detail::schedule_lanes(r);
        else detail::schedule_whole_block(r);
        r.forward_steps = detail::clamp_steps(options.steps, r.cycle_length);
        s.rounds.push_back(std::move(r));
    }
    return s;
}

namespace detail {

inline std::uint64_t load_be64(const std::uint8_t* p) noexcept {
    std::uint64_t v;
    std::memcpy(&v, p, 8);
    if constexpr (std::endian::native == std::endian::little) v = __builtin_bswap64(v);
    return v;
}

inline void store_be64(std::uint8_t* p, std::uint64_t v) noexcept {
    if constexpr (std::endian::native == std::endian::little) v = __builtin_bswap64(v);
    std::memcpy(p, &v, 8);
}

} // namespace detail

// The block read as a big-endian 128-bit integer.
inline Block rotate_left(const Block& b, unsigned k) noexcept {
    std::uint64_t hi = detail::load_be64(b.data()), lo = detail::load_be64(b.data() + 8);
    k %= 128;
    if (k >= 64) {
        std::swap(hi, lo);
        k -= 64;
    }
    if (k) {
        const std::uint64_t nh = hi << k | lo >> (64 - k);
        lo = lo << k | hi >> (64 - k);
        hi = nh;
    }
    Block out;
    detail::store_be64(out.data(), hi);
    detail::store_be64(out.data() + 8, lo);
    return out;
}

inline Block rotate_right(const Block& b, unsigned k) noexcept { return rotate_left(b, 128 - k % 128); }

class PcaCipher {
public:
    explicit PcaCipher(std::span<const std::uint8_t> key, const CipherOptions& options = {})
        : PcaCipher(key_schedule(key, options)) {}

    explicit PcaCipher(Schedule schedule) : schedule_(std::move(schedule)) {
        if (schedule_.options.layout == Layout::Lanes) build_lane_tables();
        else build_whole_block();
    }

    Block encrypt_block(const Block& in) const {
        Block b = in;
        for (std::size_t r = 0; r < schedule_.rounds.size(); ++r) {
            walk_forward(b, r);
            if (schedule_.options.rotate) b = rotate_left(b, kRotation);
        }
        return b;
    }

    Block decrypt_block(const Block& in) const {
        Block b = in;
        for (std::size_t r = schedule_.rounds.size(); r-- > 0;) {
            if (schedule_.options.rotate) b = rotate_right(b, kRotation);
            walk_back(b, r);
        }
        return b;
    }

    const Schedule& schedule() const noexcept { return schedule_; }
    unsigned rounds() const noexcept { return schedule_.key.rounds; }
    std::size_t key_bits() const noexcept { return schedule_.key.raw.size() * 8; }

private:
    using ByteTable = std::array<std::array<std::uint8_t, 256>, 16>;

    struct WholeRound {
        pca::CompiledRules forward;
        std::size_t steps;
        graph::AffineMap back;
    };

    void build_lane_tables() {
        const auto& catalog = lane_catalog();
        for (const auto& r : schedule_.rounds) {
            const unsigned t = static_cast<unsigned>(r.forward_steps);
            std::array<std::array<std::uint8_t, 16>, kLanes> fwd{}, inv{};
            for (std::size_t lane = 0; lane < kLanes; ++lane) {
                std::array<int, kLaneWidth> rules{};
                for (std::size_t i = 0; i < kLaneWidth; ++i) rules[i] = r.rules[kLaneWidth * lane + i].number();
                const auto& step = catalog[lane_code(pca::RuleVector(std::span<const int>(rules)))].step;
                for (unsigned s = 0; s < 16; ++s) {
                    unsigned x = s;
                    for (unsigned k = 0; k < t; ++k) x = step[x];
                    fwd[lane][s] = static_cast<std::uint8_t>(x);
                    inv[lane][x] = static_cast<std::uint8_t>(s);
                }
            }
            ByteTable f{}, b{};
            for (std::size_t k = 0; k < 16; ++k)
                for (unsigned v = 0; v < 256; ++v) {
                    f[k][v] = static_cast<std::uint8_t>(fwd[2 * k][v >> 4] << 4 | fwd[2 * k + 1][v & 15]);
                    b[k][v] = static_cast<std::uint8_t>(inv[2 * k][v >> 4] << 4 | inv[2 * k + 1][v & 15]);
                }
            forward_.push_back(f);
            backward_.push_back(b);
        }
    }

    void build_whole_block() {
        for (const auto& r : schedule_.rounds) {
            const auto map = graph::affine_map_of(r.rules, ca::Boundary::Null, kBlockCells);
            whole_.push_back({pca::CompiledRules(r.rules, ca::Boundary::Null), static_cast<std::size_t>(r.forward_steps),
                              map.power(r.cycle_length - r.forward_steps)});
        }
    }

    void walk_forward(Block& b, std::size_t r) const {
        if (!forward_.empty()) {
            for (std::size_t k = 0; k < 16; ++k) b[k] = forward_[r][k][b[k]];
            return;
        }
        const auto& w = whole_[r];
        store(w.forward.evolve(ca::Configuration::from_bytes(b, kBlockCells), w.steps), b);
    }

    void walk_back(Block& b, std::size_t r) const {
        if (!backward_.empty()) {
            for (std::size_t k = 0; k < 16; ++k) b[k] = backward_[r][k][b[k]];
            return;
        }
        store(whole_[r].back.apply(ca::Configuration::from_bytes(b, kBlockCells)), b);
    }

    static void store(const ca::Configuration& cfg, Block& b) {
        const auto bytes = cfg.to_bytes();
        std::copy(bytes.begin(), bytes.end(), b.begin());
    }

    Schedule schedule_;
    std::vector<ByteTable> forward_, backward_;
    std::vector<WholeRound> whole_;
};

// Single PCA of small width: walk T steps to encipher, L - T to decipher,
// where L is the lcm of the cycle lengths.
class ToyCipher {
public:
    ToyCipher(const pca::RuleVector& rules, ca::Boundary boundary, std::size_t width, unsigned steps)
        : step_(rules, boundary), width_(width), steps_(steps) {
        const auto g = graph::build_graph(rules, boundary, width);
        if (!graph::is_group_ca(g)) throw std::invalid_argument("rule vector " + rules.to_string() + " is not bijective");
        for (std::size_t len : graph::find_cycles(g).cycle_lengths()) cycle_ = std::lcm(cycle_, len);
        if (steps < 1 || steps >= cycle_)
            throw std::invalid_argument("step count must lie in [1, " + std::to_string(cycle_ - 1) + "]");
    }

    std::uint64_t encrypt(std::uint64_t state) const { return walk(state, steps_); }
    std::uint64_t decrypt(std::uint64_t state) const { return walk(state, cycle_ - steps_); }

    std::size_t cycle_length() const noexcept { return cycle_; }
    unsigned steps() const noexcept { return steps_; }
    std::size_t width() const noexcept { return width_; }

private:
    std::uint64_t walk(std::uint64_t s, std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i) s = step_(s);
        return s;
    }

    pca::WordStepper step_;
    std::size_t width_;
    unsigned steps_;
    std::size_t cycle_ = 1;
};

} // namespace pcacrypt::cipher
