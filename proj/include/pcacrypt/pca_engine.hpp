#pragma once

// Programmable (hybrid) CA: one rule per cell, chosen through control signals.

#include "ca_core.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcacrypt::pca {

using ca::Boundary;
using ca::Configuration;
using ca::RuleTable;

class RuleVector {
public:
    RuleVector() = default;

    RuleVector(std::initializer_list<int> rules) { assign(rules.begin(), rules.end()); }

    explicit RuleVector(std::span<const int> rules) { assign(rules.begin(), rules.end()); }

    static RuleVector uniform(int rule, std::size_t width) {
        std::vector<int> v(width, rule);
        return RuleVector(std::span<const int>(v));
    }

    // "51,51,195,153"
    static RuleVector parse(std::string_view text) {
        std::vector<int> v;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = text.find(',', pos);
            const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
            if (item.empty()) throw std::invalid_argument("empty entry in rule list");
            int value = 0;
            for (char ch : item) {
                if (ch < '0' || ch > '9' || value > 1000)
                    throw std::invalid_argument("rule list entries must be integers 0..255");
                value = value * 10 + (ch - '0');
            }
            v.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return RuleVector(std::span<const int>(v));
    }

    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    RuleTable operator[](std::size_t i) const noexcept { return rules_[i]; }
    std::span<const RuleTable> rules() const noexcept { return rules_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rules_[i].number());
        }
        return s;
    }

    friend bool operator==(const RuleVector&, const RuleVector&) = default;

private:
    template <typename It>
    void assign(It first, It last) {
        for (; first != last; ++first) rules_.push_back(RuleTable::from_number(*first));
    }

    std::vector<RuleTable> rules_;
};

struct ControlPair {
    bool c1 = false;
    bool c2 = false;
    friend constexpr bool operator==(ControlPair, ControlPair) noexcept = default;
};

// Rule selection table: (C1,C2) -> rule. 51 appears twice.
constexpr int select_rule(bool c1, bool c2) noexcept {
    constexpr int table[4] = {51, 51, 195, 153};
    return table[(unsigned(c1) << 1) | unsigned(c2)];
}

class ControlSignals {
public:
    ControlSignals() = default;
    explicit ControlSignals(std::vector<ControlPair> pairs) : pairs_(std::move(pairs)) {}

    static ControlSignals broadcast(ControlPair pair, std::size_t width) {
        return ControlSignals(std::vector<ControlPair>(width, pair));
    }

    std::size_t width() const noexcept { return pairs_.size(); }
    const ControlPair& operator[](std::size_t i) const noexcept { return pairs_[i]; }
    std::span<const ControlPair> pairs() const noexcept { return pairs_; }

    RuleVector rule_vector() const {
        std::vector<int> v;
        v.reserve(pairs_.size());
        for (const auto& p : pairs_) v.push_back(select_rule(p.c1, p.c2));
        return RuleVector(std::span<const int>(v));
    }

    friend bool operator==(const ControlSignals&, const ControlSignals&) = default;

private:
    std::vector<ControlPair> pairs_;
};

class ControlProgram {
public:
    ControlProgram() = default;

    explicit ControlProgram(std::vector<ControlSignals> schedule) : schedule_(std::move(schedule)) {
        for (const auto& s : schedule_)
            if (s.width() != schedule_.front().width())
                throw std::invalid_argument("control program entries must share one width");
    }

    std::size_t size() const noexcept { return schedule_.size(); }
    bool empty() const noexcept { return schedule_.empty(); }
    std::size_t width() const noexcept { return schedule_.empty() ? 0 : schedule_.front().width(); }
    const ControlSignals& operator[](std::size_t r) const noexcept { return schedule_[r]; }
    std::span<const ControlSignals> entries() const noexcept { return schedule_; }

private:
    std::vector<ControlSignals> schedule_;
};

// A rule vector lowered to per-neighborhood bit masks over the packed layout.
class CompiledRules {
public:
    CompiledRules(const RuleVector& rv, Boundary boundary) : width_(rv.size()), boundary_(boundary) {
        if (rv.empty()) throw std::invalid_argument("rule vector must not be empty");
        const std::size_t nwords = (width_ + 63) / 64;
        for (auto& m : masks_) m.assign(nwords, 0);
        for (std::size_t i = 0; i < width_; ++i)
            for (unsigned k = 0; k < 8; ++k)
                if (rv[i].at(k)) masks_[k][i / 64] |= std::uint64_t{1} << (63 - i % 64);
    }

    std::size_t width() const noexcept { return width_; }
    Boundary boundary() const noexcept { return boundary_; }

    Configuration step(const Configuration& cfg) const {
        check_width(cfg);
        Configuration next(width_);
        ca::detail::step_packed(cfg.words(), next.mutable_words(), width_, boundary_,
                                [this](unsigned k, std::size_t w) { return masks_[k][w]; });
        return next;
    }

    Configuration evolve(Configuration cfg, std::size_t steps) const {
        check_width(cfg);
        if (steps == 0) return cfg;
        Configuration other(width_);
        for (std::size_t t = 0; t < steps; ++t) {
            ca::detail::step_packed(cfg.words(), other.mutable_words(), width_, boundary_,
                                    [this](unsigned k, std::size_t w) { return masks_[k][w]; });
            std::swap(cfg, other);
        }
        return cfg;
    }

private:
    void check_width(const Configuration& cfg) const {
        if (cfg.width() != width_)
            throw std::invalid_argument("rule vector length " + std::to_string(width_) +
                                        " does not match configuration width " + std::to_string(cfg.width()));
    }

    std::size_t width_;
    Boundary boundary_;
    std::array<std::vector<std::uint64_t>, 8> masks_;
};

inline Configuration pca_step(const Configuration& cfg, const RuleVector& rv, Boundary b) {
    return CompiledRules(rv, b).step(cfg);
}

inline Configuration pca_evolve(const Configuration& cfg, const RuleVector& rv, Boundary b, std::size_t steps) {
    return CompiledRules(rv, b).evolve(cfg, steps);
}

// Rules are reselected from the control signals once per program entry.
inline Configuration pca_run_program(Configuration cfg, const ControlProgram& program, Boundary b,
                                     std::size_t steps_per_round) {
    if (program.empty()) throw std::invalid_argument("control program is empty");
    for (const auto& signals : program.entries()) cfg = pca_evolve(cfg, signals.rule_vector(), b, steps_per_round);
    return cfg;
}

// Steps a configuration held as its decimal value (width <= 64). Same
// semantics as pca_step, without allocation; used for state-space enumeration.
class WordStepper {
public:
    WordStepper(const RuleVector& rv, Boundary boundary) : width_(rv.size()), boundary_(boundary) {
        if (width_ == 0 || width_ > 64) throw std::invalid_argument("WordStepper supports widths 1..64");
        valid_ = width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
        for (std::size_t i = 0; i < width_; ++i)
            for (unsigned k = 0; k < 8; ++k)
                if (rv[i].at(k)) masks_[k] |= std::uint64_t{1} << (width_ - 1 - i);
    }

    std::size_t width() const noexcept { return width_; }

    std::uint64_t operator()(std::uint64_t s) const noexcept {
        const std::uint64_t top = std::uint64_t{1} << (width_ - 1);
        std::uint64_t left = s >> 1;
        std::uint64_t right = (s << 1) & valid_;
        if (boundary_ == Boundary::Periodic) {
            if (s & 1u) left |= top;
            if (s & top) right |= 1u;
        }
        return ca::detail::eval_minterms(left, s, right, [this](unsigned k) { return masks_[k]; }) & valid_;
    }

private:
    std::size_t width_;
    Boundary boundary_;
    std::uint64_t valid_ = 0;
    std::array<std::uint64_t, 8> masks_{};
};

} // namespace pcacrypt::pca
