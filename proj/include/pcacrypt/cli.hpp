#pragma once

// Command implementations behind the pcacrypt executable. Argument parsing
// lives in the tool; everything here takes a filled CliConfig and returns an
// exit status.

#include "aes.hpp"
#include "affine.hpp"
#include "bench.hpp"
#include "hex.hpp"
#include "pca_cipher.hpp"
#include "stream.hpp"
#include "transition_graph.hpp"

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

namespace pcacrypt::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kKey = 3, kIo = 4, kCorrupt = 5 };

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

struct CliConfig {
    std::string command;
    std::optional<std::string> scheme;
    std::string key_path, in_path, out_path;
    std::optional<std::string> threads;
    std::string mode = "ecb";
    std::string rules;
    std::optional<std::size_t> width;
    std::string boundary = "null";
    std::string csv_path, dot_path;
    std::string sizes = "128,192,256";
    std::size_t bytes = 1 << 20;
};

inline std::vector<unsigned> parse_unsigned_list(std::string_view text, std::string_view what) {
    std::vector<unsigned> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item(text.substr(pos, comma - pos));
        char* end = nullptr;
        errno = 0;
        const unsigned long v = item.empty() ? 0 : std::strtoul(item.c_str(), &end, 10);
        if (item.empty() || *end != '\0' || errno || v == 0 || v > 1u << 20 || item[0] == '-')
            throw CliError(kUsage, "invalid " + std::string(what) + " '" + item + "'");
        out.push_back(static_cast<unsigned>(v));
        pos = comma + 1;
    }
    return out;
}

// --threads, then PCACRYPT_THREADS, then the hardware concurrency.
inline std::vector<unsigned> resolve_workers(const std::optional<std::string>& flag) {
    if (flag) return parse_unsigned_list(*flag, "--threads value");
    if (const char* env = std::getenv("PCACRYPT_THREADS"); env && *env)
        return parse_unsigned_list(env, "PCACRYPT_THREADS value");
    return {std::max(1u, std::thread::hardware_concurrency())};
}

inline unsigned single_worker_count(const CliConfig& cfg) {
    const auto w = resolve_workers(cfg.threads);
    if (w.size() != 1) throw CliError(kUsage, "this command takes a single worker count");
    return w.front();
}

inline std::vector<std::uint8_t> read_file(const std::string& path, int code = kIo) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(code, "cannot read '" + path + "': " + std::strerror(errno));
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw CliError(code, "error reading '" + path + "'");
    return data;
}

inline void check_output_path(const std::string& path) {
    if (path.empty()) throw CliError(kUsage, "missing output path");
    const auto parent = std::filesystem::absolute(path).parent_path();
    std::error_code ec;
    if (!std::filesystem::is_directory(parent, ec)) throw CliError(kIo, "output directory '" + parent.string() + "' does not exist");
    if (std::filesystem::is_directory(path, ec)) throw CliError(kIo, "output path '" + path + "' is a directory");
}

// Written to a temporary file in the target directory, then renamed over it.
inline void write_atomic(const std::string& path, std::string_view data) {
    check_output_path(path);
    const auto target = std::filesystem::absolute(path);
    std::string tmpl = (target.parent_path() / ("." + target.filename().string() + ".tmp-XXXXXX")).string();
    const int fd = ::mkstemp(tmpl.data());
    if (fd < 0) throw CliError(kIo, "cannot create temporary file next to '" + path + "': " + std::strerror(errno));
    std::size_t done = 0;
    while (done < data.size()) {
        const auto n = ::write(fd, data.data() + done, data.size() - done);
        if (n < 0) {
            if (errno == EINTR) continue;
            const std::string why = std::strerror(errno);
            ::close(fd);
            ::unlink(tmpl.c_str());
            throw CliError(kIo, "write to '" + path + "' failed: " + why);
        }
        done += static_cast<std::size_t>(n);
    }
    ::fchmod(fd, 0644);
    if (::fsync(fd) != 0 || ::close(fd) != 0 || std::rename(tmpl.c_str(), target.c_str()) != 0) {
        const std::string why = std::strerror(errno);
        ::unlink(tmpl.c_str());
        throw CliError(kIo, "cannot finish writing '" + path + "': " + why);
    }
}

inline void write_atomic(const std::string& path, std::span<const std::uint8_t> data) {
    write_atomic(path, std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

// 32, 48 or 64 hex digits with at most one trailing newline.
inline std::vector<std::uint8_t> parse_key_text(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.size() != 32 && text.size() != 48 && text.size() != 64)
        throw CliError(kKey, "key must be 32, 48 or 64 hex digits, got " + std::to_string(text.size()) + " characters");
    try {
        return from_hex(text);
    } catch (const std::invalid_argument&) {
        throw CliError(kKey, "key file contains a non-hex character");
    }
}

inline std::vector<std::uint8_t> load_key(const std::string& path) {
    if (path.empty()) throw CliError(kUsage, "missing --key");
    const auto raw = read_file(path);
    return parse_key_text(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
}

using AnyCipher = std::variant<aes::Aes, cipher::PcaCipher>;

inline std::string scheme_of(const CliConfig& cfg) {
    const std::string s = cfg.scheme.value_or("pca");
    if (s != "aes" && s != "pca") throw CliError(kUsage, "unknown scheme '" + s + "' (expected aes or pca)");
    return s;
}

inline stream::Mode mode_of(const CliConfig& cfg) {
    try {
        return stream::parse_mode(cfg.mode);
    } catch (const std::invalid_argument& e) {
        throw CliError(kUsage, e.what());
    }
}

inline int cmd_crypt(const CliConfig& cfg, bool encrypt) {
    const std::string scheme = scheme_of(cfg);
    const stream::Mode mode = mode_of(cfg);
    const unsigned workers = single_worker_count(cfg);
    if (cfg.in_path.empty()) throw CliError(kUsage, "missing --in");
    check_output_path(cfg.out_path);
    const auto key = load_key(cfg.key_path);
    const auto input = read_file(cfg.in_path);

    const AnyCipher c = scheme == "aes" ? AnyCipher(std::in_place_type<aes::Aes>, key)
                                        : AnyCipher(std::in_place_type<cipher::PcaCipher>, key);
    const auto out = std::visit(
        [&](const auto& impl) {
            return encrypt ? stream::encrypt_stream(impl, input, mode, workers)
                           : stream::decrypt_stream(impl, input, mode, workers);
        },
        c);
    write_atomic(cfg.out_path, out);
    return kOk;
}

inline int cmd_encrypt(const CliConfig& cfg) { return cmd_crypt(cfg, true); }
inline int cmd_decrypt(const CliConfig& cfg) { return cmd_crypt(cfg, false); }

inline std::string affine_summary(const pca::RuleVector& rv, ca::Boundary b, std::size_t width) {
    const auto order = graph::affine_order(rv, b, width);
    std::ostringstream os;
    os << "affine width=" << width << " bijective=" << (order.bijective ? "true" : "false") << " period=" << order.period;
    if (order.bijective)
        os << " zero_orbit=" << *order.zero_orbit_length << " uniform_orbits=" << (order.uniform_orbits ? "true" : "false");
    else
        os << " preperiod=" << order.preperiod;
    return os.str();
}

inline int cmd_analyze(const CliConfig& cfg, std::ostream& out) {
    if (cfg.rules.empty()) throw CliError(kUsage, "missing --rules");
    pca::RuleVector rv;
    ca::Boundary boundary;
    try {
        rv = pca::RuleVector::parse(cfg.rules);
        boundary = ca::parse_boundary(cfg.boundary);
    } catch (const std::exception& e) {
        throw CliError(kUsage, e.what());
    }
    const std::size_t width = cfg.width.value_or(rv.size());
    if (width == 0) throw CliError(kUsage, "width must be positive");
    if (rv.size() == 1 && width > 1) rv = pca::RuleVector::uniform(rv[0].number(), width);
    if (rv.size() != width)
        throw CliError(kUsage, "rule vector has " + std::to_string(rv.size()) + " entries but width is " + std::to_string(width));
    const unsigned workers = single_worker_count(cfg);

    if (width > graph::kEnumerationCap) {
        bool affine = true;
        for (std::size_t i = 0; i < rv.size(); ++i) affine = affine && ca::is_affine(rv[i]);
        if (!affine)
            throw CliError(kUsage, "width " + std::to_string(width) + " exceeds the enumeration cap of " +
                                       std::to_string(graph::kEnumerationCap) + " and the rules are not affine");
        if (!cfg.dot_path.empty() || !cfg.csv_path.empty())
            throw CliError(kUsage, "DOT and CSV output need width <= " + std::to_string(graph::kEnumerationCap));
        out << affine_summary(rv, boundary, width) << '\n';
        return kOk;
    }

    if (!cfg.dot_path.empty()) check_output_path(cfg.dot_path);
    if (!cfg.csv_path.empty()) check_output_path(cfg.csv_path);
    const auto g = graph::build_graph(rv, boundary, width, workers);
    const auto d = graph::find_cycles(g);
    if (!cfg.dot_path.empty()) write_atomic(cfg.dot_path, std::string_view(graph::export_dot(g, d)));
    if (!cfg.csv_path.empty()) write_atomic(cfg.csv_path, std::string_view(graph::export_csv(g, d)));
    out << graph::summary_line(d) << '\n';
    return kOk;
}

inline int cmd_bench(const CliConfig& cfg, std::ostream& out) {
    bench::BenchConfig bc;
    if (cfg.scheme) bc.schemes = {scheme_of(cfg)};
    bc.key_bits = parse_unsigned_list(cfg.sizes, "--sizes value");
    for (unsigned bits : bc.key_bits)
        if (bits != 128 && bits != 192 && bits != 256) throw CliError(kUsage, "--sizes accepts 128, 192 and 256");
    if (cfg.bytes == 0) throw CliError(kUsage, "--bytes must be positive");
    bc.payload_bytes = cfg.bytes;
    bc.workers = resolve_workers(cfg.threads);
    if (!cfg.csv_path.empty()) check_output_path(cfg.csv_path);

    std::vector<bench::BenchRecord> records;
    try {
        records = bench::run_bench(bc);
    } catch (const std::bad_alloc&) {
        throw CliError(kIo, "cannot allocate a " + std::to_string(cfg.bytes) + "-byte payload");
    }
    out << bench::render_table(records);
    const std::string csv = bench::to_csv(records);
    if (cfg.csv_path.empty()) out << '\n' << csv;
    else write_atomic(cfg.csv_path, std::string_view(csv));
    return kOk;
}

// Dispatches one command and maps failures onto exit codes.
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "encrypt") return cmd_encrypt(cfg);
        if (cfg.command == "decrypt") return cmd_decrypt(cfg);
        if (cfg.command == "analyze") return cmd_analyze(cfg, out);
        if (cfg.command == "bench") return cmd_bench(cfg, out);
        throw CliError(kUsage, "unknown command '" + cfg.command + "'");
    } catch (const CliError& e) {
        err << "pcacrypt: " << e.what() << '\n';
        return e.code();
    } catch (const stream::CorruptCiphertext& e) {
        err << "pcacrypt: corrupt ciphertext: " << e.what() << '\n';
        return kCorrupt;
    } catch (const std::bad_alloc&) {
        err << "pcacrypt: out of memory\n";
        return kIo;
    } catch (const std::logic_error& e) {
        err << "pcacrypt: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "pcacrypt: " << e.what() << '\n';
        return kIo;
    }
}

} // namespace pcacrypt::cli
