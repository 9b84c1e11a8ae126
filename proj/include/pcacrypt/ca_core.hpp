#pragma once

// Elementary (1-D, 2-state, 3-neighborhood) cellular automata.
//
// Cells are stored packed, most significant first: cell i lives in word i/64
// at bit 63 - i%64. With that layout the decimal value of a configuration of
// width <= 64 is simply the first word shifted down, cell 0 being the MSB.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcacrypt::ca {

// Index of a neighborhood in the Wolfram truth table.
constexpr unsigned neighborhood_index(bool left, bool center, bool right) noexcept {
    return (unsigned(left) << 2) | (unsigned(center) << 1) | unsigned(right);
}

class RuleTable {
public:
    constexpr RuleTable() noexcept = default;

    // Throws std::out_of_range unless 0 <= number <= 255.
    static constexpr RuleTable from_number(int number) {
        if (number < 0 || number > 255)
            throw std::out_of_range("rule number must lie in [0, 255], got " + std::to_string(number));
        RuleTable t;
        t.number_ = static_cast<std::uint8_t>(number);
        return t;
    }

    // Inverse of truth_table(): entry k is the output for neighborhood k.
    static constexpr RuleTable from_table(const std::array<bool, 8>& table) noexcept {
        RuleTable t;
        for (unsigned k = 0; k < 8; ++k)
            t.number_ |= static_cast<std::uint8_t>(unsigned(table[k]) << k);
        return t;
    }

    constexpr std::uint8_t number() const noexcept { return number_; }

    constexpr bool at(unsigned neighborhood) const noexcept { return (number_ >> (neighborhood & 7u)) & 1u; }

    constexpr bool operator()(bool left, bool center, bool right) const noexcept {
        return at(neighborhood_index(left, center, right));
    }

    constexpr std::array<bool, 8> truth_table() const noexcept {
        std::array<bool, 8> t{};
        for (unsigned k = 0; k < 8; ++k) t[k] = at(k);
        return t;
    }

    friend constexpr bool operator==(RuleTable, RuleTable) noexcept = default;

private:
    std::uint8_t number_ = 0;
};

constexpr RuleTable rule_from_number(int r) { return RuleTable::from_number(r); }

constexpr bool apply_rule(RuleTable t, bool l, bool c, bool r) noexcept { return t(l, c, r); }

enum class Boundary { Null, Periodic };

// Accepts "null" or "periodic".
inline Boundary parse_boundary(std::string_view s) {
    if (s == "null") return Boundary::Null;
    if (s == "periodic") return Boundary::Periodic;
    throw std::invalid_argument("unknown boundary '" + std::string(s) + "' (expected null or periodic)");
}

constexpr std::string_view to_string(Boundary b) noexcept { return b == Boundary::Null ? "null" : "periodic"; }

class Configuration {
public:
    Configuration() = default;

    explicit Configuration(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {
        if (width == 0) throw std::invalid_argument("configuration width must be positive");
    }

    // value < 2^width is required; width <= 64.
    static Configuration from_decimal(std::uint64_t value, std::size_t width) {
        if (width == 0 || width > 64) throw std::invalid_argument("from_decimal supports widths 1..64");
        if (width < 64 && (value >> width) != 0)
            throw std::out_of_range("value " + std::to_string(value) + " does not fit in " + std::to_string(width) +
                                    " cells");
        Configuration c(width);
        c.words_[0] = width == 64 ? value : value << (64 - width);
        return c;
    }

    // "0110" -> cells 0,1,1,0 (leftmost first).
    static Configuration from_string(std::string_view bits) {
        Configuration c(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != '0' && bits[i] != '1')
                throw std::invalid_argument("configuration string may only contain 0 and 1");
            c.set(i, bits[i] == '1');
        }
        return c;
    }

    // Cell i is bit 7 - i%8 of byte i/8. Requires bytes.size()*8 >= width.
    static Configuration from_bytes(std::span<const std::uint8_t> bytes, std::size_t width) {
        if (bytes.size() * 8 < width) throw std::invalid_argument("not enough bytes for configuration width");
        Configuration c(width);
        for (std::size_t i = 0; i < width; ++i) c.set(i, (bytes[i / 8] >> (7 - i % 8)) & 1u);
        return c;
    }

    std::size_t width() const noexcept { return width_; }

    bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (63 - i % 64)) & 1u; }
    bool operator[](std::size_t i) const noexcept { return get(i); }

    void set(std::size_t i, bool v) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (63 - i % 64);
        words_[i / 64] = v ? (words_[i / 64] | m) : (words_[i / 64] & ~m);
    }

    std::uint64_t to_decimal() const {
        if (width_ > 64) throw std::logic_error("to_decimal supports widths up to 64");
        return width_ == 64 ? words_[0] : words_[0] >> (64 - width_);
    }

    std::string to_string() const {
        std::string s(width_, '0');
        for (std::size_t i = 0; i < width_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    std::vector<std::uint8_t> to_bytes() const {
        std::vector<std::uint8_t> out((width_ + 7) / 8, 0);
        for (std::size_t i = 0; i < width_; ++i)
            if (get(i)) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
        return out;
    }

    std::size_t popcount() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> mutable_words() noexcept { return words_; }

    Configuration& operator^=(const Configuration& o) {
        if (o.width_ != width_) throw std::invalid_argument("width mismatch in configuration xor");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend Configuration operator^(Configuration a, const Configuration& b) { return a ^= b; }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

namespace detail {

// Mask of the valid (high) bits in the last word of a packed configuration.
inline std::uint64_t tail_mask(std::size_t width) noexcept {
    const std::size_t r = width % 64;
    return r == 0 ? ~std::uint64_t{0} : ~std::uint64_t{0} << (64 - r);
}

// Bit-sliced evaluation of eight minterms: masks[k] carries, per cell, the
// rule's output for neighborhood k.
template <typename MaskAt>
inline std::uint64_t eval_minterms(std::uint64_t l, std::uint64_t c, std::uint64_t r, MaskAt&& mask) noexcept {
    const std::uint64_t nl = ~l, nc = ~c, nr = ~r;
    return (mask(0) & nl & nc & nr) | (mask(1) & nl & nc & r) | (mask(2) & nl & c & nr) | (mask(3) & nl & c & r) |
           (mask(4) & l & nc & nr) | (mask(5) & l & nc & r) | (mask(6) & l & c & nr) | (mask(7) & l & c & r);
}

// One synchronous step. masks(k, w) returns the per-cell output word for
// neighborhood k in word w. Reads only `in`; writes only `out`.
template <typename Masks>
inline void step_packed(std::span<const std::uint64_t> in, std::span<std::uint64_t> out, std::size_t width,
                        Boundary boundary, Masks&& masks) noexcept {
    const std::size_t nwords = in.size();
    const std::size_t last = width - 1;
    const bool first_cell = (in[0] >> 63) & 1u;
    const bool last_cell = (in[last / 64] >> (63 - last % 64)) & 1u;
    for (std::size_t w = 0; w < nwords; ++w) {
        std::uint64_t left = in[w] >> 1;
        if (w > 0) left |= in[w - 1] << 63;
        else if (boundary == Boundary::Periodic && last_cell) left |= std::uint64_t{1} << 63;

        std::uint64_t right = in[w] << 1;
        if (w + 1 < nwords) right |= in[w + 1] >> 63;
        if (w == last / 64 && boundary == Boundary::Periodic && first_cell)
            right |= std::uint64_t{1} << (63 - last % 64);

        out[w] = eval_minterms(left, in[w], right, [&](unsigned k) { return masks(k, w); });
    }
    out[nwords - 1] &= tail_mask(width);
}

} // namespace detail

inline Configuration step_uniform(const Configuration& cfg, RuleTable rule, Boundary b) {
    if (cfg.width() == 0) throw std::invalid_argument("step_uniform requires a non-empty configuration");
    Configuration next(cfg.width());
    detail::step_packed(cfg.words(), next.mutable_words(), cfg.width(), b,
                        [rule](unsigned k, std::size_t) { return rule.at(k) ? ~std::uint64_t{0} : 0; });
    return next;
}

inline Configuration evolve_uniform(Configuration cfg, RuleTable rule, Boundary b, std::size_t steps) {
    for (std::size_t t = 0; t < steps; ++t) cfg = step_uniform(cfg, rule, b);
    return cfg;
}

enum class RuleClass { Linear, Complement, Nonlinear };

constexpr std::string_view to_string(RuleClass c) noexcept {
    switch (c) {
    case RuleClass::Linear: return "linear";
    case RuleClass::Complement: return "complement";
    case RuleClass::Nonlinear: return "nonlinear";
    }
    return "?";
}

// Exhaustive check of f(x) ^ f(y) ^ f(0) == f(x ^ y) over all 64 input pairs.
constexpr bool is_affine(RuleTable t) noexcept {
    for (unsigned x = 0; x < 8; ++x)
        for (unsigned y = 0; y < 8; ++y)
            if ((t.at(x) ^ t.at(y) ^ t.at(0)) != t.at(x ^ y)) return false;
    return true;
}

constexpr RuleClass classify_rule(RuleTable t) noexcept {
    if (!is_affine(t)) return RuleClass::Nonlinear;
    return t.at(0) ? RuleClass::Complement : RuleClass::Linear;
}

// For an affine rule: next = a*left ^ b*center ^ c*right ^ offset.
struct LocalAffine {
    bool left, center, right, offset;
};

constexpr LocalAffine local_affine(RuleTable t) {
    if (!is_affine(t)) throw std::domain_error("rule " + std::to_string(t.number()) + " is not affine");
    const bool e = t.at(0);
    return {bool(t.at(4) ^ e), bool(t.at(2) ^ e), bool(t.at(1) ^ e), e};
}

} // namespace pcacrypt::ca
