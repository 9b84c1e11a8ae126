#pragma once

#include "aes.hpp"
#include "pca_cipher.hpp"
#include "stream.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace pcacrypt::bench {

inline constexpr const char* kBenchCsvHeader = "scheme,key_bits,payload_bytes,workers,wall_ns,ns_per_block,mb_per_s";

struct BenchRecord {
    std::string scheme;
    unsigned key_bits = 0;
    std::size_t payload_bytes = 0;
    unsigned workers = 1;
    std::uint64_t wall_ns = 0;

    std::size_t blocks() const noexcept { return (payload_bytes + 15) / 16; }
    double ns_per_block() const noexcept { return blocks() ? double(wall_ns) / double(blocks()) : 0.0; }
    double mb_per_s() const noexcept { return wall_ns ? double(payload_bytes) * 1e3 / double(wall_ns) : 0.0; }
};

struct BenchConfig {
    std::vector<std::string> schemes{"aes", "pca"};
    std::vector<unsigned> key_bits{128, 192, 256};
    std::size_t payload_bytes = 1 << 20;
    std::vector<unsigned> workers{1};
    unsigned repetitions = 5;
};

// One untimed warm-up call, then the median of `reps` timed calls.
inline std::uint64_t median_ns(const std::function<void()>& fn, unsigned reps) {
    fn();
    std::vector<std::uint64_t> t;
    for (unsigned i = 0; i < std::max(1u, reps); ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
        t.push_back(std::max<std::uint64_t>(1, static_cast<std::uint64_t>(ns)));
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

template <stream::BlockCipher C>
BenchRecord time_cipher(const C& cipher, std::string scheme, unsigned key_bits, std::span<const std::uint8_t> payload,
                        unsigned workers, unsigned reps) {
    std::vector<std::uint8_t> sink;
    const auto ns = median_ns([&] { sink = stream::ecb_apply(cipher, payload, true, workers); }, reps);
    return {std::move(scheme), key_bits, payload.size(), workers, ns};
}

inline std::vector<std::uint8_t> bench_payload(std::size_t bytes) {
    std::vector<std::uint8_t> p((bytes + 15) / 16 * 16);
    std::mt19937_64 rng(0x5eed);
    for (auto& b : p) b = static_cast<std::uint8_t>(rng());
    return p;
}

inline std::vector<std::uint8_t> bench_key(unsigned key_bits) {
    std::vector<std::uint8_t> k(key_bits / 8);
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = static_cast<std::uint8_t>(i);
    return k;
}

// Records ordered by scheme, key size, worker count.
inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    for (unsigned bits : cfg.key_bits)
        if (bits != 128 && bits != 192 && bits != 256)
            throw std::invalid_argument("key size must be 128, 192 or 256 bits, got " + std::to_string(bits));
    for (unsigned w : cfg.workers)
        if (w == 0) throw std::invalid_argument("worker count must be positive");
    if (cfg.payload_bytes == 0) throw std::invalid_argument("payload must be non-empty");
    const auto payload = bench_payload(cfg.payload_bytes);
    std::vector<BenchRecord> out;
    for (const auto& scheme : cfg.schemes)
        for (unsigned bits : cfg.key_bits) {
            const auto key = bench_key(bits);
            for (unsigned w : cfg.workers) {
                BenchRecord r;
                if (scheme == "aes") r = time_cipher(aes::Aes(key), scheme, bits, payload, w, cfg.repetitions);
                else if (scheme == "pca") r = time_cipher(cipher::PcaCipher(key), scheme, bits, payload, w, cfg.repetitions);
                else throw std::invalid_argument("unknown scheme '" + scheme + "'");
                r.payload_bytes = cfg.payload_bytes;
                out.push_back(r);
            }
        }
    return out;
}

inline std::string to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << kBenchCsvHeader << '\n' << std::fixed;
    for (const auto& r : records)
        os << r.scheme << ',' << r.key_bits << ',' << r.payload_bytes << ',' << r.workers << ',' << r.wall_ns << ','
           << std::setprecision(3) << r.ns_per_block() << ',' << std::setprecision(3) << r.mb_per_s() << '\n';
    return os.str();
}

// Key sizes down the side, one time column per scheme, as in a side-by-side
// execution-time comparison.
inline std::string render_table(const std::vector<BenchRecord>& records) {
    std::vector<std::string> schemes;
    std::map<std::pair<unsigned, unsigned>, std::map<std::string, const BenchRecord*>> rows;
    for (const auto& r : records) {
        if (std::find(schemes.begin(), schemes.end(), r.scheme) == schemes.end()) schemes.push_back(r.scheme);
        rows[{r.workers, r.key_bits}][r.scheme] = &r;
    }
    std::ostringstream os;
    os << std::left << std::setw(10) << "Key size" << std::setw(9) << "Workers";
    for (const auto& s : schemes) os << std::setw(22) << (s == "aes" ? "AES (us/block)" : s == "pca" ? "PCA (us/block)" : s);
    os << "MB/s per scheme\n";
    for (const auto& [key, by_scheme] : rows) {
        os << std::setw(10) << (std::to_string(key.second) + " bit") << std::setw(9) << key.first;
        std::string rates;
        for (const auto& s : schemes) {
            const auto it = by_scheme.find(s);
            std::ostringstream cell;
            if (it != by_scheme.end()) {
                cell << std::fixed << std::setprecision(4) << it->second->ns_per_block() / 1000.0;
                std::ostringstream rate;
                rate << std::fixed << std::setprecision(1) << it->second->mb_per_s();
                rates += (rates.empty() ? "" : " / ") + rate.str();
            } else {
                cell << "-";
            }
            os << std::setw(22) << cell.str();
        }
        os << rates << '\n';
    }
    return os.str();
}

} // namespace pcacrypt::bench
