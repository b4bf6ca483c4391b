// hypermoment: finite-field hypergeometric sums, trace-formula checks, and
// moment statistics from the command line.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hypermoment/cli.hpp"

namespace hm = hypermoment;

int main(int argc, char** argv) {
    CLI::App app{"finite-field hypergeometric functions, Hecke traces, and moment statistics"};
    app.require_subcommand(1);

    hm::cli::RunConfig cfg;
    std::string prime_range;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--datum", cfg.datum, "named datum, e.g. HD(3,1) or HD(2,4,3)");
        sub->add_option("--alpha", cfg.alpha, "explicit alpha list, e.g. 1/3,2/3");
        sub->add_option("--beta", cfg.beta, "explicit beta list, e.g. 1,1");
        sub->add_option("--method", cfg.method, "auto|charsum|dft|curve|algebraic")
            ->default_val("auto");
        sub->add_option("--format", cfg.format, "csv|json")->default_val("csv");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--threads", cfg.threads, "parallel width (or HYPERMOMENT_THREADS)");
    };

    CLI::App* hp = app.add_subcommand("hp", "evaluate H_p(alpha, beta; lambda) for all lambda");
    hp->add_option("--prime", cfg.prime, "odd prime p")->required();
    add_common(hp);

    CLI::App* moments = app.add_subcommand("moments", "per-prime moment sums and normalizations");
    moments->add_option("--primes", prime_range, "prime range lo:hi")->required();
    moments->add_option("--m-max", cfg.m_max, "largest moment exponent")->default_val(6);
    moments->add_flag("--square", cfg.square_argument, "use the lambda^2 argument variant");
    add_common(moments);

    CLI::App* check = app.add_subcommand("check", "run the identity suite over a prime range");
    check->add_option("--primes", prime_range, "prime range lo:hi")->required();
    add_common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : hm::cli::exit_usage;
    }

    if (!prime_range.empty()) {
        size_t colon = prime_range.find(':');
        if (colon == std::string::npos) {
            std::cerr << "error: --primes expects lo:hi\n";
            return hm::cli::exit_usage;
        }
        cfg.prime_lo = std::stoll(prime_range.substr(0, colon));
        cfg.prime_hi = std::stoll(prime_range.substr(colon + 1));
    }
    cfg.command = hp->parsed() ? "hp" : moments->parsed() ? "moments" : "check";

    hm::cli::Output out = hm::cli::run(cfg);
    if (cfg.out.empty()) {
        std::cout << out.text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << cfg.out << "\n";
            return hm::cli::exit_usage;
        }
        f << out.text;
    }
    return out.exit_code;
}
