// coauthnet: build co-authorship graphs, detect communities, lay them out
// and serve the resulting datasets.
//
// Exit codes: 0 success, 1 input error, 2 internal error.

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coauthnet/coauthnet.h"
#include "serve.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct Options {
    std::string members;
    std::string papers;
    std::optional<int> from;
    std::optional<int> to;
    std::string out = "coauthnet-out";
    std::uint64_t seed = 42;
    std::optional<std::uint32_t> iterations;
    std::optional<double> ka;
    std::optional<double> kr;
    int port = 8080;
};

int exit_code(coauthnet_status status) {
    switch (status) {
    case COAUTHNET_OK: return kExitOk;
    case COAUTHNET_ERR_INPUT:
    case COAUTHNET_ERR_UNDEFINED: return kExitInput;
    default: return kExitInternal;
    }
}

int report_failure(coauthnet_status status) {
    std::cerr << "error: " << coauthnet_last_error() << '\n';
    return exit_code(status);
}

int cmd_validate(const Options& opt) {
    coauthnet_corpus* corpus = nullptr;
    if (const auto status = coauthnet_corpus_load(opt.members.c_str(), opt.papers.c_str(), &corpus);
        status != COAUTHNET_OK)
        return report_failure(status);
    std::unique_ptr<coauthnet_corpus, decltype(&coauthnet_corpus_free)> guard(corpus, coauthnet_corpus_free);

    std::cout << "members: " << coauthnet_corpus_member_count(corpus) << '\n'
              << "papers: " << coauthnet_corpus_paper_count(corpus) << '\n'
              << "papers without co-authorship edges: " << coauthnet_corpus_edgeless_paper_count(corpus) << '\n';
    int first = 0;
    int last = 0;
    if (coauthnet_corpus_year_bounds(corpus, &first, &last) == COAUTHNET_OK)
        std::cout << "years: " << first << "-" << last << '\n';
    const auto warnings = coauthnet_corpus_warning_count(corpus);
    std::cout << "warnings: " << warnings << '\n';
    for (size_t i = 0; i < warnings; ++i) std::cout << "  warning: " << coauthnet_corpus_warning(corpus, i) << '\n';
    return kExitOk;
}

int cmd_analyze(const Options& opt) {
    coauthnet_analyze_config config;
    coauthnet_analyze_config_default(&config);
    config.members_path = opt.members.c_str();
    config.papers_path = opt.papers.c_str();
    config.out_dir = opt.out.c_str();
    config.has_from = opt.from.has_value();
    config.from = opt.from.value_or(0);
    config.has_to = opt.to.has_value();
    config.to = opt.to.value_or(0);
    config.layout.seed = opt.seed;
    if (opt.iterations) config.layout.iterations = *opt.iterations;
    if (opt.ka) config.layout.attraction = *opt.ka;
    if (opt.kr) config.layout.repulsion = *opt.kr;

    char* table = nullptr;
    if (const auto status = coauthnet_analyze(&config, &table); status != COAUTHNET_OK)
        return report_failure(status);
    std::cout << table;
    coauthnet_string_free(table);
    return kExitOk;
}

coauthnet::cli::DatasetServer* active_server = nullptr;

extern "C" void handle_interrupt(int) {
    if (active_server) active_server->stop();
}

int cmd_serve(const Options& opt) {
    if (opt.port < 1 || opt.port > 65535) {
        std::cerr << "error: port must be in 1-65535\n";
        return kExitInput;
    }
    try {
        coauthnet::cli::DatasetServer server(opt.out);
        const int port = server.bind("127.0.0.1", opt.port);
        active_server = &server;
        std::signal(SIGINT, handle_interrupt);
        std::signal(SIGTERM, handle_interrupt);
        std::cout << "serving " << opt.out << " at http://127.0.0.1:" << port << "/" << std::endl;
        server.run();
        active_server = nullptr;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Co-authorship community analysis"};
    app.require_subcommand(1);
    Options opt;

    const auto add_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--members", opt.members, "members CSV (id,name)")->required();
        cmd->add_option("--papers", opt.papers, "papers CSV (paper_id,year,title,author_ids)")->required();
    };
    const auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out, "output directory")->envname("COAUTHNET_OUT")->capture_default_str();
    };

    auto* validate = app.add_subcommand("validate", "Parse the inputs and report counts and warnings");
    add_inputs(validate);

    auto* analyze = app.add_subcommand("analyze", "Write per-range datasets, the manifest and the report");
    add_inputs(analyze);
    add_out(analyze);
    analyze->add_option("--from", opt.from, "first year (default: earliest paper)");
    analyze->add_option("--to", opt.to, "last year (default: latest paper)");
    analyze->add_option("--seed", opt.seed, "layout seed")->capture_default_str();
    analyze->add_option("--iterations", opt.iterations, "layout iterations")->check(CLI::PositiveNumber);
    analyze->add_option("--ka", opt.ka, "attraction coefficient")->check(CLI::PositiveNumber);
    analyze->add_option("--kr", opt.kr, "repulsion coefficient")->check(CLI::PositiveNumber);

    auto* serve = app.add_subcommand("serve", "Serve an output directory over local HTTP");
    add_out(serve);
    serve->add_option("--port", opt.port, "TCP port")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*validate) return cmd_validate(opt);
        if (*analyze) return cmd_analyze(opt);
        if (*serve) return cmd_serve(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
