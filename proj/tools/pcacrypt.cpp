#include <pcacrypt/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using pcacrypt::cli::CliConfig;

    CLI::App app{"Programmable cellular automata block cipher toolkit"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1, 1);
    CliConfig cfg;

    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "Worker count (bench: comma list); default PCACRYPT_THREADS");
    };
    auto add_crypt = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--scheme", cfg.scheme, "aes or pca (default pca)");
        sub->add_option("--key", cfg.key_path, "Key file: 32, 48 or 64 hex digits")->required();
        sub->add_option("--in", cfg.in_path, "Input file")->required();
        sub->add_option("--out", cfg.out_path, "Output file, written atomically")->required();
        sub->add_option("--mode", cfg.mode, "ecb or ctr (default ecb)");
        add_threads(sub);
        return sub;
    };
    add_crypt("encrypt", "Encrypt a file");
    add_crypt("decrypt", "Decrypt a file");

    CLI::App* analyze = app.add_subcommand("analyze", "State-transition analysis of a rule vector");
    analyze->add_option("--rules", cfg.rules, "Comma-separated rule numbers, or one rule for a uniform CA")->required();
    analyze->add_option("--width", cfg.width, "Cell count (defaults to the rule count)");
    analyze->add_option("--boundary", cfg.boundary, "null or periodic (default null)");
    analyze->add_option("--dot", cfg.dot_path, "Write the transition diagram as DOT");
    analyze->add_option("--csv", cfg.csv_path, "Write the transition table as CSV");
    add_threads(analyze);

    CLI::App* bench = app.add_subcommand("bench", "Time AES against the PCA cipher");
    bench->add_option("--scheme", cfg.scheme, "Restrict to aes or pca");
    bench->add_option("--sizes", cfg.sizes, "Key sizes in bits (default 128,192,256)");
    bench->add_option("--bytes", cfg.bytes, "Payload size in bytes (default 1048576)");
    bench->add_option("--csv", cfg.csv_path, "Write results as CSV");
    add_threads(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return pcacrypt::cli::kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return pcacrypt::cli::run(cfg, std::cout, std::cerr);
}
