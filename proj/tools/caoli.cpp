// Command-line front end: keygen / encrypt / decrypt / attack / simulate.
//
// Exit codes: 0 success, 1 usage or validation failure, 2 partial key
// recovery by `attack`, 3 internal assertion (e.g. inexact division while
// factoring a matrix that is not a well-formed public key).

#include "caoli/attack.hpp"
#include "caoli/errors.hpp"
#include "caoli/keyfile.hpp"
#include "caoli/sim.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPartial = 2;
constexpr int kExitInternal = 3;

caoli::Int parse_decimal(const std::string& text, const std::string& what) {
    caoli::Int v;
    if (!caoli::parse_int(text, v)) {
        throw caoli::ParamError(what + ": not a decimal integer: '" + text + "'");
    }
    return v;
}

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

caoli::Vec parse_message_text(const std::string& csv) {
    caoli::Vec out;
    std::istringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        out.push_back(parse_decimal(strip(token), "message entry"));
    }
    if (out.empty()) throw caoli::ParamError("empty message");
    return out;
}

std::string format_message(const caoli::Vec& x) {
    std::ostringstream out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out << ',';
        out << x[i];
    }
    return out.str();
}

std::string read_stdin_line(const std::string& what) {
    std::string line;
    if (!std::getline(std::cin, line)) {
        throw caoli::ParamError("expected " + what + " on standard input");
    }
    return strip(line);
}

std::uint64_t pick_seed(bool have_flag, std::uint64_t flag_value) {
    if (have_flag) return flag_value;
    std::random_device rd;
    std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed " << seed << " (drawn from system entropy; pass --seed to reproduce)\n";
    return seed;
}

std::string format_beta(double beta_log2) {
    char buf[64];
    if (beta_log2 < 1000.0) {
        std::snprintf(buf, sizeof buf, "%.6g", std::exp2(beta_log2));
    } else {
        std::snprintf(buf, sizeof buf, "2^%.2f", beta_log2);
    }
    return buf;
}

std::string status_text(const caoli::PrimeCandidate& c) {
    switch (c.status) {
        case caoli::RecoveryStatus::Exact:
            return "exact";
        case caoli::RecoveryStatus::Cofactor:
            return "cofactor(" + c.cofactor.str() + ")";
        case caoli::RecoveryStatus::Failed:
            break;
    }
    return "failed";
}

std::string attack_report(const caoli::RecoveredKey& rk) {
    std::ostringstream out;
    out << "recovered-key report\n";
    out << "n " << rk.lambdas.size() << "\n";
    out << "lambda:";
    for (const auto& l : rk.lambdas) out << ' ' << l;
    out << "\n";
    out << "P rows:\n";
    for (std::size_t i = 0; i < rk.p.rows(); ++i) {
        out << " ";
        for (std::size_t j = 0; j < rk.p.cols(); ++j) out << ' ' << rk.p.entry(i, j);
        out << "\n";
    }
    std::size_t recovered = 0;
    for (std::size_t i = 0; i < rk.candidates.size(); ++i) {
        const auto& c = rk.candidates[i];
        out << "index " << (i + 1) << ": d=" << c.d;
        if (c.status != caoli::RecoveryStatus::Failed) out << " p=" << c.p_hat;
        out << " status=" << status_text(c) << "\n";
        if (c.status != caoli::RecoveryStatus::Failed) ++recovered;
    }
    out << "recovered " << recovered << "/" << rk.candidates.size() << " primes\n";
    return out.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw caoli::ParamError("cannot write " + path);
    out << text;
    out.flush();
    if (!out) throw caoli::ParamError("write failed for " + path);
}

struct KeygenArgs {
    std::size_t n = 0;
    std::string d = "1";
    unsigned min_prime_bits = 64;
    std::uint64_t seed = 0;
    bool have_seed = false;
    std::string pub_path = "caoli.pub";
    std::string priv_path = "caoli.priv";
};

int cmd_keygen(const KeygenArgs& args) {
    caoli::SchemeParams params;
    params.n = args.n;
    params.d = parse_decimal(args.d, "--d");
    params.min_prime_bits = args.min_prime_bits;
    params.seed = pick_seed(args.have_seed, args.seed);
    auto [sk, pk] = caoli::keygen(params);
    caoli::keyfile::save_private(args.priv_path, sk);
    caoli::keyfile::save_public(args.pub_path, pk);

    const caoli::EntryBound bound = caoli::entry_bound(sk.primes, sk.d);
    std::cerr << "beta ~ " << format_beta(bound.beta_log2) << "\n";
    std::cerr << "entry cap M = " << bound.cap << "\n";
    std::cerr << "prime bits:";
    for (const auto& p : sk.primes) std::cerr << ' ' << caoli::bit_length(p);
    std::cerr << "\n";
    std::cerr << "wrote " << args.pub_path << " and " << args.priv_path << "\n";
    return kExitOk;
}

struct EncryptArgs {
    std::string pub_path;
    std::string message;
    std::string message_file;
};

int cmd_encrypt(const EncryptArgs& args) {
    const caoli::PublicKey pk = caoli::keyfile::load_public(args.pub_path);
    std::string text;
    if (!args.message.empty()) {
        text = args.message;
    } else if (!args.message_file.empty()) {
        std::ifstream in(args.message_file);
        if (!in) throw caoli::ParamError("cannot read " + args.message_file);
        std::getline(in, text);
    } else {
        text = read_stdin_line("a comma-separated message");
    }
    const caoli::Vec x = parse_message_text(text);
    std::cout << caoli::encrypt(pk, x) << "\n";
    return kExitOk;
}

struct DecryptArgs {
    std::string priv_path;
    std::string ciphertext;
};

int cmd_decrypt(const DecryptArgs& args) {
    const caoli::PrivateKey sk = caoli::keyfile::load_private(args.priv_path);
    const std::string text =
        args.ciphertext.empty() ? read_stdin_line("a ciphertext") : args.ciphertext;
    const caoli::Int y = parse_decimal(text, "ciphertext");
    if (y < 0) throw caoli::ParamError("ciphertext must be non-negative");
    std::cout << format_message(caoli::decrypt(sk, y)) << "\n";
    return kExitOk;
}

struct AttackArgs {
    std::string pub_path;
    std::string ciphertexts_path;
    std::string report_path;
    std::uint64_t max_cofactor = 1000;
};

int cmd_attack(const AttackArgs& args) {
    const caoli::PublicKey pk = caoli::keyfile::load_public(args.pub_path);

    std::vector<caoli::Int> ciphertexts;
    if (!args.ciphertexts_path.empty()) {
        std::ifstream in(args.ciphertexts_path);
        if (!in) throw caoli::ParamError("cannot read " + args.ciphertexts_path);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            line = strip(line);
            if (line.empty()) continue;
            caoli::Int y = parse_decimal(line, args.ciphertexts_path + " line " +
                                                   std::to_string(line_no));
            if (y < 0) {
                throw caoli::ParamError(args.ciphertexts_path + " line " +
                                        std::to_string(line_no) + ": negative ciphertext");
            }
            ciphertexts.push_back(std::move(y));
        }
    }

    auto [rk, outcomes] = caoli::full_break(pk, ciphertexts, args.max_cofactor);

    const std::string report = attack_report(rk);
    if (args.report_path.empty()) {
        std::cout << report;
    } else {
        write_text(args.report_path, report);
    }

    for (const auto& outcome : outcomes) {
        if (outcome.message) {
            std::cout << format_message(*outcome.message) << "\n";
        } else if (!outcome.missing_indices.empty()) {
            std::cout << "FAIL indices=";
            for (std::size_t k = 0; k < outcome.missing_indices.size(); ++k) {
                if (k) std::cout << ',';
                std::cout << outcome.missing_indices[k] + 1;
            }
            std::cout << "\n";
        } else {
            std::cout << "FAIL verify\n";
        }
    }
    return rk.complete() ? kExitOk : kExitPartial;
}

struct SimulateArgs {
    std::uint64_t trials = 100;
    std::size_t n = 8;
    std::string d = "1";
    unsigned min_prime_bits = 64;
    std::uint64_t seed = 0;
    bool have_seed = false;
    std::uint64_t max_cofactor = 1000;
    std::string out_path;
    std::string stats_path;
};

int cmd_simulate(const SimulateArgs& args) {
    caoli::TrialConfig cfg;
    cfg.trials = args.trials;
    cfg.n = args.n;
    cfg.d = parse_decimal(args.d, "--d");
    cfg.min_prime_bits = args.min_prime_bits;
    cfg.base_seed = pick_seed(args.have_seed, args.seed);
    cfg.max_cofactor = args.max_cofactor;

    const caoli::TrialStats stats = caoli::run_trials(cfg);
    const std::string report = caoli::render_report(stats);
    if (args.out_path.empty()) {
        std::cout << report;
    } else {
        write_text(args.out_path, report);
    }
    if (!args.stats_path.empty()) {
        write_text(args.stats_path, caoli::render_stats_kv(stats));
    }
    return kExitOk;
}

int exit_code_for(const caoli::Error& e) {
    if (dynamic_cast<const caoli::InexactDivisionError*>(&e) ||
        dynamic_cast<const caoli::MalformedKeyError*>(&e) ||
        dynamic_cast<const caoli::NonResidueError*>(&e)) {
        return kExitInternal;
    }
    if (dynamic_cast<const caoli::ParseError*>(&e) ||
        dynamic_cast<const caoli::ParamError*>(&e) ||
        dynamic_cast<const caoli::RangeError*>(&e) ||
        dynamic_cast<const caoli::DimensionError*>(&e) ||
        dynamic_cast<const caoli::InvalidCiphertextError*>(&e)) {
        return kExitUsage;
    }
    return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cao-Li quadratic-form cryptosystem: key generation, encryption, "
                 "decryption, key-recovery attack and simulation"};
    app.require_subcommand(1);

    KeygenArgs kg;
    auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
    keygen_cmd->add_option("--n", kg.n, "Block length (number of primes)")->required();
    keygen_cmd->add_option("--d", kg.d, "Message bound (decimal)")->capture_default_str();
    keygen_cmd->add_option("--min-prime-bits", kg.min_prime_bits, "Exact prime bit length")
        ->capture_default_str();
    keygen_cmd->add_option("--seed", kg.seed, "64-bit seed for all randomness");
    keygen_cmd->add_option("--pub", kg.pub_path, "Public key output path")->capture_default_str();
    keygen_cmd->add_option("--priv", kg.priv_path, "Private key output path")
        ->capture_default_str();

    EncryptArgs enc;
    auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a message block");
    encrypt_cmd->add_option("--pub", enc.pub_path, "Public key path")->required();
    encrypt_cmd->add_option("--message", enc.message,
                            "Comma-separated message entries (default: read stdin)");
    encrypt_cmd->add_option("--message-file", enc.message_file,
                            "File holding the comma-separated message");

    DecryptArgs dec;
    auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext");
    decrypt_cmd->add_option("--priv", dec.priv_path, "Private key path")->required();
    decrypt_cmd->add_option("--ciphertext", dec.ciphertext,
                            "Ciphertext in decimal (default: read stdin)");

    AttackArgs atk;
    auto* attack_cmd =
        app.add_subcommand("attack", "Recover the private key from a public key");
    attack_cmd->add_option("--pub", atk.pub_path, "Public key path")->required();
    attack_cmd->add_option("--ciphertexts", atk.ciphertexts_path,
                           "File with one decimal ciphertext per line");
    attack_cmd->add_option("--report", atk.report_path,
                           "Recovered-key report path (default: stdout)");
    attack_cmd->add_option("--max-cofactor", atk.max_cofactor,
                           "Trial-division bound for prime refinement")
        ->capture_default_str();

    SimulateArgs sim;
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Measure prime-recovery rates over random keys");
    simulate_cmd->add_option("--trials", sim.trials, "Number of trials")->capture_default_str();
    simulate_cmd->add_option("--n", sim.n, "Block length")->capture_default_str();
    simulate_cmd->add_option("--d", sim.d, "Message bound (decimal)")->capture_default_str();
    simulate_cmd->add_option("--min-prime-bits", sim.min_prime_bits, "Exact prime bit length")
        ->capture_default_str();
    simulate_cmd->add_option("--seed", sim.seed, "Base seed; trial t uses base_seed XOR t");
    simulate_cmd->add_option("--max-cofactor", sim.max_cofactor,
                             "Trial-division bound for prime refinement")
        ->capture_default_str();
    simulate_cmd->add_option("--out", sim.out_path, "Report path (default: stdout)");
    simulate_cmd->add_option("--stats", sim.stats_path, "Machine-readable stats path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    kg.have_seed = keygen_cmd->count("--seed") > 0;
    sim.have_seed = simulate_cmd->count("--seed") > 0;

    try {
        if (keygen_cmd->parsed()) return cmd_keygen(kg);
        if (encrypt_cmd->parsed()) return cmd_encrypt(enc);
        if (decrypt_cmd->parsed()) return cmd_decrypt(dec);
        if (attack_cmd->parsed()) return cmd_attack(atk);
        if (simulate_cmd->parsed()) return cmd_simulate(sim);
    } catch (const caoli::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
