#pragma once

// One step of a PCA built from linear/complement rules is an affine map
// x -> Mx ^ c over GF(2)^n, with M tridiagonal (plus corner entries under a
// periodic boundary). Its order follows from the minimal polynomial of the
// lifted (n+1)x(n+1) matrix [[M, c], [0, 1]], so no state enumeration is needed.

#include "ca_core.hpp"
#include "gf2.hpp"
#include "pca_engine.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcacrypt::graph {

using gf2::BigInt;
using gf2::BitMatrix;
using gf2::BitVector;

// Bit i of a BitVector is cell i.
inline BitVector to_bits(const ca::Configuration& cfg) {
    BitVector v(cfg.width());
    for (std::size_t i = 0; i < cfg.width(); ++i)
        if (cfg.get(i)) v.set(i, true);
    return v;
}

inline ca::Configuration to_configuration(const BitVector& v) {
    ca::Configuration cfg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) cfg.set(i, true);
    return cfg;
}

struct AffineMap {
    BitMatrix matrix;
    BitVector offset;

    std::size_t width() const noexcept { return offset.size(); }

    BitVector apply(const BitVector& x) const { return matrix.apply(x) ^ offset; }

    ca::Configuration apply(const ca::Configuration& cfg) const { return to_configuration(apply(to_bits(cfg))); }

    // (M2, c2) o (M1, c1) = (M2 M1, M2 c1 ^ c2)
    friend AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
        return {outer.matrix * inner.matrix, outer.matrix.apply(inner.offset) ^ outer.offset};
    }

    BitMatrix lifted() const {
        const std::size_t n = width();
        BitMatrix a(n + 1, n + 1);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c)
                if (matrix.get(r, c)) a.set(r, c, true);
            a.set(r, n, offset.get(r));
        }
        a.set(n, n, true);
        return a;
    }

    static AffineMap from_lifted(const BitMatrix& a) {
        const std::size_t n = a.rows() - 1;
        AffineMap m{BitMatrix(n, n), BitVector(n)};
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c)
                if (a.get(r, c)) m.matrix.set(r, c, true);
            m.offset.set(r, a.get(r, n));
        }
        return m;
    }

    // t-fold composition; t may exceed 64 bits.
    AffineMap power(const BigInt& t) const { return from_lifted(lifted().power(t)); }
};

// Throws std::domain_error if any rule is nonlinear.
inline AffineMap affine_map_of(const pca::RuleVector& rv, ca::Boundary b, std::size_t width) {
    if (rv.size() != width)
        throw std::invalid_argument("rule vector length " + std::to_string(rv.size()) + " does not match width " +
                                    std::to_string(width));
    if (width == 0) throw std::invalid_argument("width must be positive");
    AffineMap m{BitMatrix(width, width), BitVector(width)};
    for (std::size_t i = 0; i < width; ++i) {
        if (ca::classify_rule(rv[i]) == ca::RuleClass::Nonlinear)
            throw std::domain_error("rule " + std::to_string(rv[i].number()) + " at cell " + std::to_string(i) +
                                    " is nonlinear; no affine map exists");
        const auto la = ca::local_affine(rv[i]);
        // XOR so that width 1 and 2 periodic rings, where neighbors coincide, stay correct.
        auto add = [&](std::size_t col) { m.matrix.row(i).flip(col); };
        if (la.center) add(i);
        if (la.left) {
            if (i > 0) add(i - 1);
            else if (b == ca::Boundary::Periodic) add(width - 1);
        }
        if (la.right) {
            if (i + 1 < width) add(i + 1);
            else if (b == ca::Boundary::Periodic) add(0);
        }
        m.offset.set(i, la.offset);
    }
    return m;
}

struct AffineOrder {
    BigInt period;          // smallest t >= 1 with F^(s+t) = F^s; the order when bijective
    std::size_t preperiod;  // s: longest transient, 0 iff bijective
    bool bijective;
    std::optional<BigInt> zero_orbit_length; // cycle length through state 0 (bijective maps)
    bool uniform_orbits;    // every state's cycle has length `period` (bijective maps)
};

inline AffineOrder affine_order(const AffineMap& f) {
    const BitMatrix lifted = f.lifted();
    const gf2::MatrixPeriod mp = gf2::matrix_period(lifted);
    AffineOrder out{mp.period, mp.preperiod, mp.preperiod == 0, std::nullopt, false};
    if (!out.bijective) return out;

    const std::size_t n = f.width();
    // Orbit of 0 divides the order: strip primes while F^(len/p)(0) stays 0.
    BigInt zero_len = mp.period;
    for (const auto& [p, e] : mp.period_factors)
        for (unsigned i = 0; i < e; ++i) {
            const BigInt reduced = zero_len / p;
            if (f.power(reduced).offset.any()) break;
            zero_len = reduced;
        }
    out.zero_orbit_length = zero_len;

    // Every orbit is full length iff no F^(order/p) has a fixed point.
    out.uniform_orbits = true;
    for (const auto& [p, e] : mp.period_factors) {
        const AffineMap g = f.power(mp.period / p);
        BitMatrix lhs = g.matrix;
        for (std::size_t i = 0; i < n; ++i) lhs.row(i).flip(i);
        if (gf2::is_consistent(lhs, g.offset)) {
            out.uniform_orbits = false;
            break;
        }
    }
    return out;
}

inline AffineOrder affine_order(const pca::RuleVector& rv, ca::Boundary b, std::size_t width) {
    return affine_order(affine_map_of(rv, b, width));
}

} // namespace pcacrypt::graph
