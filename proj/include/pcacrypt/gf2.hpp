#pragma once

// Linear algebra over GF(2): bit vectors, bit matrices, polynomials, and the
// eventual period of a square matrix under repeated multiplication.

#include "detail/mersenne_factors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcacrypt::gf2 {

using BigInt = boost::multiprecision::cpp_int;

// Bit i lives in word i/64 at bit i%64.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (i % 64);
        words_[i / 64] = v ? (words_[i / 64] | m) : (words_[i / 64] & ~m);
    }
    void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    bool any() const noexcept {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }

    // Index of the lowest set bit, or size() if none.
    std::size_t lowest_set() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return size_;
    }

    bool dot(const BitVector& o) const noexcept {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1;
    }

    BitVector& operator^=(const BitVector& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) noexcept { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) noexcept { rows_[r].set(c, v); }
    const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
    BitVector& row(std::size_t r) noexcept { return rows_[r]; }

    BitVector apply(const BitVector& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
        BitVector y(rows());
        for (std::size_t r = 0; r < rows(); ++r)
            if (rows_[r].dot(x)) y.set(r, true);
        return y;
    }

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
        if (a.cols_ != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
        BitMatrix c(a.rows(), b.cols_);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a.get(i, k)) c.rows_[i] ^= b.rows_[k];
        return c;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    std::size_t rank() const {
        std::vector<BitVector> basis;
        for (const auto& r : rows_) {
            BitVector v = r;
            for (const auto& b : basis)
                if (v.get(b.lowest_set())) v ^= b;
            if (v.any()) basis.push_back(std::move(v));
        }
        return basis.size();
    }

    // Square matrices only; e >= 0.
    BitMatrix power(BigInt e) const {
        if (rows() != cols_) throw std::invalid_argument("power of a non-square matrix");
        if (e < 0) throw std::invalid_argument("negative matrix exponent");
        BitMatrix result = identity(cols_);
        BitMatrix base = *this;
        while (e != 0) {
            if ((e & 1) != 0) result = result * base;
            e >>= 1;
            if (e != 0) base = base * base;
        }
        return result;
    }

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

// True iff a*x = b has a solution.
inline bool is_consistent(const BitMatrix& a, const BitVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
    // Eliminate on the augmented rows [a_r | b_r].
    const std::size_t n = a.cols();
    std::vector<BitVector> basis;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector v(n + 1);
        for (std::size_t c = 0; c < n; ++c)
            if (a.get(r, c)) v.set(c, true);
        v.set(n, b.get(r));
        for (const auto& bv : basis)
            if (v.get(bv.lowest_set())) v ^= bv;
        const std::size_t lead = v.lowest_set();
        if (lead == n) return false; // 0 = 1
        if (lead < n) basis.push_back(std::move(v));
    }
    return true;
}

// Polynomial over GF(2); bit i of the coefficient words is the x^i coefficient.
class Poly {
public:
    Poly() = default;

    static Poly monomial(std::size_t k) {
        Poly p;
        p.set(k, true);
        return p;
    }
    static Poly one() { return monomial(0); }
    static Poly x() { return monomial(1); }

    // -1 for the zero polynomial.
    long degree() const noexcept {
        if (w_.empty()) return -1;
        return static_cast<long>(64 * (w_.size() - 1) + 63 - static_cast<std::size_t>(std::countl_zero(w_.back())));
    }
    bool is_zero() const noexcept { return w_.empty(); }
    bool is_one() const noexcept { return w_.size() == 1 && w_[0] == 1; }

    bool coeff(std::size_t i) const noexcept { return i / 64 < w_.size() && ((w_[i / 64] >> (i % 64)) & 1u); }

    void set(std::size_t i, bool v) {
        if (i / 64 >= w_.size()) {
            if (!v) return;
            w_.resize(i / 64 + 1, 0);
        }
        const std::uint64_t m = std::uint64_t{1} << (i % 64);
        w_[i / 64] = v ? (w_[i / 64] | m) : (w_[i / 64] & ~m);
        trim();
    }

    Poly& operator^=(const Poly& o) {
        if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
        for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
        trim();
        return *this;
    }
    friend Poly operator^(Poly a, const Poly& b) { return a ^= b; }
    friend Poly operator+(Poly a, const Poly& b) { return a ^= b; }

    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        Poly r;
        const std::size_t ws = k / 64, bs = k % 64;
        r.w_.assign(w_.size() + ws + 1, 0);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            r.w_[i + ws] ^= w_[i] << bs;
            if (bs) r.w_[i + ws + 1] ^= w_[i] >> (64 - bs);
        }
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        const long db = b.degree();
        for (long i = 0; i <= db; ++i)
            if (b.coeff(static_cast<std::size_t>(i))) r ^= a.shifted(static_cast<std::size_t>(i));
        return r;
    }

    // Returns {quotient, remainder}.
    static std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly q;
        const long db = b.degree();
        for (long da = a.degree(); da >= db; da = a.degree()) {
            const auto k = static_cast<std::size_t>(da - db);
            q.set(k, true);
            a ^= b.shifted(k);
        }
        return {std::move(q), std::move(a)};
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static Poly lcm(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return (a / gcd(a, b)) * b;
    }

    // base^e mod m.
    static Poly powmod(Poly base, BigInt e, const Poly& m) {
        Poly result = Poly::one() % m;
        base = base % m;
        while (e != 0) {
            if ((e & 1) != 0) result = (result * base) % m;
            e >>= 1;
            if (e != 0) base = (base * base) % m;
        }
        return result;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (long i = degree(); i >= 0; --i) {
            if (!coeff(static_cast<std::size_t>(i))) continue;
            if (!s.empty()) s += " + ";
            s += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
        }
        return s;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    std::vector<std::uint64_t> w_;
};

// Minimal polynomial of v under a: the monic p of least degree with p(a)v = 0,
// from the first linear dependency in the Krylov sequence v, av, a^2 v, ...
inline Poly vector_minimal_polynomial(const BitMatrix& a, const BitVector& v) {
    struct Row {
        BitVector vec;
        Poly combo; // which powers of a were summed to produce vec
        std::size_t pivot;
    };
    std::vector<Row> basis;
    BitVector u = v;
    for (std::size_t k = 0;; ++k) {
        BitVector w = u;
        Poly combo = Poly::monomial(k);
        for (const auto& r : basis)
            if (w.get(r.pivot)) {
                w ^= r.vec;
                combo ^= r.combo;
            }
        if (!w.any()) return combo;
        const std::size_t pivot = w.lowest_set();
        basis.push_back({std::move(w), std::move(combo), pivot});
        u = a.apply(u);
    }
}

inline Poly minimal_polynomial(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("minimal polynomial of a non-square matrix");
    Poly m = Poly::one();
    BitVector e(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) {
        e.set(i, true);
        m = Poly::lcm(m, vector_minimal_polynomial(a, e));
        e.set(i, false);
    }
    return m;
}

using Factorization = std::map<BigInt, unsigned>;

inline Factorization factor_mersenne(unsigned d) {
    if (d == 0 || d > detail::kMaxFactoredDegree)
        throw std::out_of_range("no factorization of 2^" + std::to_string(d) + "-1 on record");
    Factorization f;
    for (const auto& row : detail::kMersenneFactors)
        if (row.degree == d) {
            BigInt p = row.hi;
            p <<= 64;
            p += row.lo;
            f[p] += row.exponent;
        }
    return f;
}

inline BigInt evaluate(const Factorization& f) {
    BigInt n = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i) n *= p;
    return n;
}

// Degrees of the irreducible factors of h, by distinct-degree factorization.
inline std::vector<unsigned> irreducible_factor_degrees(Poly h) {
    std::vector<unsigned> degrees;
    Poly xp = Poly::x(); // x^(2^d) mod h
    for (unsigned d = 1; h.degree() >= 2 * static_cast<long>(d); ++d) {
        xp = (xp * xp) % h;
        const Poly g = Poly::gcd(h, xp ^ (Poly::x() % h));
        if (g.degree() > 0) {
            degrees.push_back(d);
            for (Poly c = g; c.degree() > 0; c = Poly::gcd(h, g)) h = h / c;
            xp = xp % h;
        }
    }
    if (h.degree() > 0) degrees.push_back(static_cast<unsigned>(h.degree()));
    return degrees;
}

// Prime factorization of the smallest t >= 1 with x^t = 1 mod h. Requires h(0) = 1.
inline Factorization order_of_x_factored(const Poly& h) {
    if (h.is_zero() || !h.coeff(0)) throw std::domain_error("x is not invertible modulo h");
    if (h.degree() == 0) return {};
    if (h.degree() > static_cast<long>(detail::kMaxFactoredDegree))
        throw std::out_of_range("order computation supports polynomials of degree <= 128");

    // Candidate multiple: 2^ceil(log2 deg h) * lcm(2^d - 1) over factor degrees d.
    Factorization order;
    unsigned twos = 0;
    while ((1L << twos) < h.degree()) ++twos;
    if (twos) order[2] = twos;
    for (unsigned d : irreducible_factor_degrees(h))
        for (const auto& [p, e] : factor_mersenne(d)) order[p] = std::max(order[p], e);

    BigInt value = evaluate(order);
    if (!Poly::powmod(Poly::x(), value, h).is_one())
        throw std::logic_error("order candidate is not a multiple of the order of x");
    for (auto& [p, e] : order)
        while (e > 0) {
            const BigInt reduced = value / p;
            if (!Poly::powmod(Poly::x(), reduced, h).is_one()) break;
            value = reduced;
            --e;
        }
    std::erase_if(order, [](const auto& kv) { return kv.second == 0; });
    return order;
}

inline BigInt order_of_x(const Poly& h) { return evaluate(order_of_x_factored(h)); }

struct MatrixPeriod {
    std::size_t preperiod; // smallest s with A^(s+period) = A^s
    BigInt period;
    Factorization period_factors;
};

// Eventual period of the sequence I, A, A^2, ...
inline MatrixPeriod matrix_period(const BitMatrix& a) {
    const Poly m = minimal_polynomial(a);
    std::size_t s = 0;
    while (!m.coeff(s)) ++s;
    const Poly h = m / Poly::monomial(s);
    Factorization f = order_of_x_factored(h);
    BigInt period = evaluate(f);
    return {s, std::move(period), std::move(f)};
}

} // namespace pcacrypt::gf2
