#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stringc/errors.hpp"
#include "stringc/families.hpp"
#include "stringc/presentation_io.hpp"
#include "stringc/report.hpp"
#include "stringc/sggi.hpp"
#include "stringc/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimits = 3;
constexpr int kExitClaimFailed = 4;

struct BuildArgs {
    std::string family;
    std::uint64_t k = 0;
    std::uint64_t b = 0;
    std::uint32_t n = 0;
    std::uint32_t s = 0;
    std::uint32_t t = 0;
    std::uint64_t l1 = 1;
    std::uint64_t l2 = 1;
    std::uint64_t m = 1;
};

struct CertifyArgs {
    std::string file;
    bool json = false;
};

struct VerifyArgs {
    std::string suite;
    std::string jsonl_path;
    std::string explore_file;
    int jobs = 1;
};

void need(const CLI::App& cmd, const char* flag, const std::string& family) {
    if (cmd.count(flag) == 0)
        throw stringc::BadParam("family " + family + " requires " + flag);
}

stringc::Presentation build_family(const CLI::App& cmd, const BuildArgs& args) {
    const std::string& f = args.family;
    if (f == "L1" || f == "L2") {
        need(cmd, "--k", f);
        return stringc::build_degenerate(args.k, f == "L1" ? 1 : 2);
    }
    if (f == "M1" || f == "M2") {
        need(cmd, "--b", f);
        return stringc::build_type44(args.b, f == "M1" ? 1 : 2);
    }
    if (f == "type1") {
        need(cmd, "--n", f);
        need(cmd, "--s", f);
        need(cmd, "--t", f);
        return stringc::build_type1(args.n, args.s, args.t, args.l1, args.l2);
    }
    if (f == "U") return stringc::build_U();
    return stringc::build_type2(stringc::family_from_tag(f), args.m);
}

stringc::Presentation read_presentation(const std::string& path) {
    if (path.empty() || path == "-") {
        std::string text(std::istreambuf_iterator<char>(std::cin), {});
        return stringc::parse_presentation(text);
    }
    std::ifstream in(path);
    if (!in) throw stringc::ParseError("cannot open " + path);
    std::string text(std::istreambuf_iterator<char>(in), {});
    return stringc::parse_presentation(text);
}

void print_certificate(const stringc::Certificate& c, bool json) {
    if (json) {
        std::cout << stringc::certificate_to_json(c).dump() << '\n';
        return;
    }
    std::cout << "order: " << c.order << '\n';
    std::cout << "schlafli: (";
    for (std::size_t i = 0; i < c.schlafli.size(); ++i)
        std::cout << (i > 0 ? "," : "") << c.schlafli[i];
    std::cout << ")\n";
    std::cout << "is_sggi: " << (c.is_sggi ? "true" : "false") << '\n';
    std::cout << "string_ok: " << (c.string_ok ? "true" : "false") << '\n';
    std::cout << "intersection_ok: " << (c.intersection_ok ? "true" : "false") << '\n';
    std::cout << "degenerate: " << (c.degenerate ? "true" : "false") << '\n';
    std::cout << "solvable: " << (c.solvable ? "true" : "false") << '\n';
    std::cout << "derived_length: " << c.derived_length << '\n';
    std::cout << "elapsed_ms: " << c.elapsed_ms << '\n';
}

int run_certify(const CertifyArgs& args, const stringc::EnumerationLimits& limits) {
    stringc::Presentation pres = read_presentation(args.file);
    stringc::Certificate cert = stringc::certify(pres, limits);
    print_certificate(cert, args.json);
    bool accepted = cert.is_sggi && cert.intersection_ok;
    return accepted ? kExitPass : kExitNegative;
}

int run_verify(const VerifyArgs& args, const stringc::EnumerationLimits& limits) {
    if (!args.explore_file.empty()) {
        stringc::Presentation pres = read_presentation(args.explore_file);
        stringc::Certificate cert = stringc::certify(pres, limits);
        std::cout << stringc::certificate_to_json(cert).dump() << '\n';
        return kExitPass;
    }

    stringc::VerifyOptions opts;
    opts.limits = limits;
    opts.jobs = args.jobs;

    std::vector<stringc::ClaimReport> reports;
    if (args.suite == "prop21")
        reports = stringc::verify_prop21(opts);
    else if (args.suite == "prop23")
        reports = stringc::verify_prop23(opts);
    else if (args.suite == "thm4")
        reports = stringc::verify_theorem4(opts);
    else if (args.suite == "thm5")
        reports = stringc::verify_theorem5(opts);
    else if (args.suite == "subgroups")
        reports = stringc::verify_subgroup_structure(opts);
    else if (args.suite == "cor52")
        reports = stringc::verify_cor52(opts);
    else if (args.suite == "all")
        reports = stringc::verify_all(opts);
    else
        throw stringc::BadParam("unknown suite: " + args.suite);

    if (!args.jsonl_path.empty()) {
        std::ofstream out(args.jsonl_path);
        if (!out) throw stringc::ParseError("cannot open " + args.jsonl_path);
        out << stringc::to_jsonl(reports);
    }
    std::cout << stringc::to_csv(reports);

    std::size_t failed = 0;
    std::size_t limited = 0;
    for (const stringc::ClaimReport& r : reports) {
        if (r.pass) continue;
        if (r.observed.rfind("limit: ", 0) == 0)
            ++limited;
        else
            ++failed;
    }
    std::cerr << reports.size() << " claims, " << failed + limited << " failed";
    if (limited > 0) std::cerr << " (" << limited << " at limits)";
    std::cerr << '\n';
    if (failed > 0) return kExitClaimFailed;
    if (limited > 0) return kExitLimits;
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"string C-group construction and certification"};
    app.require_subcommand(1);

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "print a family presentation");
    build->add_option("family", build_args.family, "one of L1, L2, M1, M2, type1, U, G, H, I")
        ->required();
    build->add_option("--k", build_args.k, "dihedral parameter for L1/L2");
    build->add_option("--b", build_args.b, "parameter for M1/M2");
    build->add_option("--n", build_args.n, "total 2-exponent for type1");
    build->add_option("--s", build_args.s, "first local 2-exponent for type1");
    build->add_option("--t", build_args.t, "second local 2-exponent for type1");
    build->add_option("--l1", build_args.l1, "odd part of the first type entry");
    build->add_option("--l2", build_args.l2, "odd part of the second type entry");
    build->add_option("--m", build_args.m, "scaling parameter for G/H/I");

    CertifyArgs certify_args;
    CLI::App* certify = app.add_subcommand("certify", "certify a presentation file");
    certify->add_option("file", certify_args.file, "presentation file (default stdin)");
    certify->add_flag("--json", certify_args.json, "emit the certificate as JSON");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a claim suite");
    verify->add_option("suite", verify_args.suite,
                       "one of prop21, prop23, thm4, thm5, subgroups, cor52, all");
    verify->add_option("--jobs", verify_args.jobs, "worker threads for grid points");
    verify->add_option("--jsonl", verify_args.jsonl_path, "write JSON-lines reports here");
    verify->add_option("--explore", verify_args.explore_file,
                       "certify this presentation file and assert nothing");

    std::uint64_t max_cosets = 0;
    std::uint64_t max_steps = 0;
    for (CLI::App* cmd : {certify, verify}) {
        cmd->add_option("--max-cosets", max_cosets, "coset table row limit");
        cmd->add_option("--max-steps", max_steps, "enumeration step limit");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    stringc::EnumerationLimits limits;
    if (max_cosets > 0) limits.max_cosets = max_cosets;
    if (max_steps > 0) limits.max_steps = max_steps;

    try {
        if (build->parsed()) {
            stringc::Presentation pres = build_family(*build, build_args);
            std::cout << stringc::print_presentation(pres);
            return kExitPass;
        }
        if (certify->parsed()) return run_certify(certify_args, limits);
        if (verify->parsed()) {
            if (verify_args.suite.empty() && verify_args.explore_file.empty())
                throw stringc::BadParam("verify needs a suite or --explore FILE");
            return run_verify(verify_args, limits);
        }
    } catch (const stringc::BadParam& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const stringc::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const stringc::BadWord& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const stringc::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLimits;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNegative;
    }
    return kExitUsage;
}
