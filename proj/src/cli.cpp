#include "clab/cli.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clab/binomial.hpp"
#include "clab/curve.hpp"
#include "clab/modular.hpp"
#include "clab/poly.hpp"
#include "clab/primes.hpp"
#include "clab/quadform.hpp"
#include "clab/report.hpp"
#include "clab/selftest.hpp"
#include "clab/verifier.hpp"

namespace clab {
namespace {

struct ReportArgs {
    std::string primes = "5..10000";
    u64 seed = 0xC0FFEE;
    std::string format = "text";
    std::string out;
    int workers = 0;
};

void add_report_flags(CLI::App* cmd, ReportArgs& args) {
    cmd->add_option("--primes", args.primes, "prime range lo..hi (floor 5)")->capture_default_str();
    cmd->add_option("--seed", args.seed, "seed for sampled checks")->capture_default_str();
    cmd->add_option("--format", args.format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", args.out, "write the report to this file instead of stdout");
    cmd->add_option("--workers", args.workers, "worker threads (0: CONGRUENCE_LAB_WORKERS or hardware)");
}

bool parse_range(const std::string& s, u64& lo, u64& hi) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoull(s);
            return true;
        }
        lo = std::stoull(s.substr(0, pos));
        hi = std::stoull(s.substr(pos + 2));
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

int emit_report(const SweepReport& rep, const ReportArgs& args) {
    std::string body = args.format == "json"  ? emit_json(rep)
                       : args.format == "csv" ? emit_csv(rep)
                                              : emit_text(rep);
    if (args.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(args.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << args.out << "\n";
            return 64;
        }
        f << body;
    }
    return exit_code_for(rep);
}

int run_report_command(const ReportArgs& args, std::vector<std::string> ids) {
    u64 lo, hi;
    if (!parse_range(args.primes, lo, hi)) {
        std::cerr << "bad --primes range: " << args.primes << "\n";
        return 64;
    }
    SweepOptions opt;
    opt.lo = lo;
    opt.hi = hi;
    opt.seed = args.seed;
    opt.workers = args.workers;
    opt.ids = std::move(ids);
    try {
        return emit_report(sweep(opt), args);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 64;
    }
}

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> ids;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string tok = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) ids.push_back(tok);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return ids;
}

Modulus make_modulus(u64 p, int e, std::string& err) {
    if (!is_prime(p) || p < 5) {
        err = "p must be a prime >= 5";
        return Modulus();
    }
    return Modulus(p, e);
}

}  // namespace

int parse_and_run(int argc, char** argv) {
    CLI::App app{"congruence lab: verifies central-binomial congruence identities over prime ranges"};
    app.require_subcommand(1);

    ReportArgs check_args, sweep_args, scan_args;
    std::string check_id;
    std::string sweep_ids;

    auto* check_cmd = app.add_subcommand("check", "run one check over a prime range");
    check_cmd->add_option("--id", check_id, "check id (see `list`)")->required();
    add_report_flags(check_cmd, check_args);

    auto* sweep_cmd = app.add_subcommand("sweep", "run all checks (or --ids) over a prime range");
    sweep_cmd->add_option("--ids", sweep_ids, "comma-separated check ids (default: all)");
    add_report_flags(sweep_cmd, sweep_args);

    auto* scan_cmd = app.add_subcommand("scan-conjectures", "run only the conjecture scans");
    add_report_flags(scan_cmd, scan_args);

    auto* list_cmd = app.add_subcommand("list", "list all check ids");

    u64 st_max = 1000, st_rep_max = 10000;
    auto* selftest_cmd = app.add_subcommand("selftest", "cross-validate internal implementation paths");
    selftest_cmd->add_option("--max-prime", st_max, "bound for the heavy sections")->capture_default_str();
    selftest_cmd->add_option("--rep-max-prime", st_rep_max, "bound for the representation cross-check")
        ->capture_default_str();

    std::string rep_form = "1,15", rep_scale = "p";
    u64 rep_p = 0;
    auto* rep_cmd = app.add_subcommand("represent", "find (x,y) with a*x^2 + b*y^2 = p or 4p");
    rep_cmd->add_option("--form", rep_form, "coefficients a,b")->capture_default_str();
    rep_cmd->add_option("--scale", rep_scale, "p or 4p")->check(CLI::IsMember({"p", "4p"}))
        ->capture_default_str();
    rep_cmd->add_option("-p,--prime", rep_p, "the prime")->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one quantity and print it");
    eval_cmd->require_subcommand(1);
    i64 ev_m = 0, ev_a = 0, ev_b = 0, ev_mc = 0, ev_nc = 0;
    u64 ev_p = 0, ev_x = 0, ev_t = 0, ev_n = 0, ev_klim = 0;
    int ev_e = 1;
    bool ev_has_klim = false;

    auto* ev_sc = eval_cmd->add_subcommand("sum-central", "sum of C(2k,k)^2 C(3k,k) m^-k, k < p");
    ev_sc->add_option("-m", ev_m, "denominator base m")->required();
    ev_sc->add_option("-p", ev_p, "prime")->required();
    ev_sc->add_option("-e", ev_e, "modulus exponent 1..3")->capture_default_str();

    auto* ev_scw = eval_cmd->add_subcommand("sum-central-weighted", "same sum with weight (a*k + b)");
    ev_scw->add_option("-a", ev_a, "weight slope")->required();
    ev_scw->add_option("-b", ev_b, "weight offset")->required();
    ev_scw->add_option("-m", ev_m, "denominator base m")->required();
    ev_scw->add_option("-p", ev_p, "prime")->required();
    ev_scw->add_option("-e", ev_e, "modulus exponent 1..3")->capture_default_str();

    auto* ev_sp = eval_cmd->add_subcommand("sum-pair", "sum of C(2k,k) C(3k,k) x^k");
    ev_sp->add_option("-x", ev_x, "argument residue")->required();
    ev_sp->add_option("-p", ev_p, "prime")->required();
    ev_sp->add_option("-e", ev_e, "modulus exponent 1..3")->capture_default_str();
    auto* klim_opt = ev_sp->add_option("-k,--klim", ev_klim, "inclusive upper index (default p-1)");

    auto* ev_lp = eval_cmd->add_subcommand("legendre-poly", "Legendre polynomial value mod p");
    ev_lp->add_option("-n", ev_n, "degree")->required();
    ev_lp->add_option("-t", ev_t, "argument residue")->required();
    ev_lp->add_option("-p", ev_p, "prime")->required();

    auto* ev_dw = eval_cmd->add_subcommand("deuring", "squared-binomial polynomial value mod p");
    ev_dw->add_option("-n", ev_n, "degree")->required();
    ev_dw->add_option("-x", ev_x, "argument residue")->required();
    ev_dw->add_option("-p", ev_p, "prime")->required();

    auto* ev_jj = eval_cmd->add_subcommand("jacobi-j", "normalized Jacobi-polynomial value mod p");
    ev_jj->add_option("-t", ev_t, "argument residue")->required();
    ev_jj->add_option("-p", ev_p, "prime")->required();

    auto* ev_cs = eval_cmd->add_subcommand("char-sum", "sum of chi(x^3 + mc*x + nc) over x mod p");
    ev_cs->add_option("--mc", ev_mc, "linear coefficient")->required();
    ev_cs->add_option("--nc", ev_nc, "constant coefficient")->required();
    ev_cs->add_option("-p", ev_p, "prime")->required();

    auto* ev_up = eval_cmd->add_subcommand("u-p", "residue-class factor for the squared-binomial identity");
    ev_up->add_option("-x", ev_x, "argument residue")->required();
    ev_up->add_option("-p", ev_p, "prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    if (check_cmd->parsed()) return run_report_command(check_args, {check_id});
    if (sweep_cmd->parsed()) return run_report_command(sweep_args, split_ids(sweep_ids));
    if (scan_cmd->parsed()) {
        std::vector<std::string> ids;
        for (const auto& info : list_checks())
            if (info.kind == "conjecture") ids.push_back(info.id);
        return run_report_command(scan_args, std::move(ids));
    }
    if (list_cmd->parsed()) {
        for (const auto& info : list_checks()) {
            char line[160];
            std::snprintf(line, sizeof line, "%-20s %-11s %s", info.id.c_str(), info.kind.c_str(),
                          info.hypothesis.c_str());
            std::cout << line << "\n";
        }
        return 0;
    }
    if (selftest_cmd->parsed()) {
        auto r = run_selftest(st_max, st_rep_max);
        for (const auto& l : r.lines) std::cout << l << "\n";
        std::cout << (r.ok ? "selftest ok" : "selftest FAILED") << "\n";
        return r.ok ? 0 : 1;
    }
    if (rep_cmd->parsed()) {
        auto comma = rep_form.find(',');
        u64 fa = 0, fb = 0;
        try {
            if (comma == std::string::npos) throw std::invalid_argument("form");
            fa = std::stoull(rep_form.substr(0, comma));
            fb = std::stoull(rep_form.substr(comma + 1));
        } catch (...) {
            std::cerr << "bad --form, expected a,b\n";
            return 64;
        }
        if (!is_prime(rep_p) || rep_p < 5) {
            std::cerr << "p must be a prime >= 5\n";
            return 64;
        }
        auto rep = represent(rep_p, fa, fb, rep_scale == "4p");
        if (rep)
            std::cout << "(" << rep->x << "," << rep->y << ")\n";
        else
            std::cout << "none\n";
        return 0;
    }
    if (eval_cmd->parsed()) {
        std::string err;
        try {
            if (ev_sc->parsed()) {
                Modulus m = make_modulus(ev_p, ev_e, err);
                if (!err.empty()) { std::cerr << err << "\n"; return 64; }
                std::cout << sum_central(ev_m, m) << "\n";
            } else if (ev_scw->parsed()) {
                Modulus m = make_modulus(ev_p, ev_e, err);
                if (!err.empty()) { std::cerr << err << "\n"; return 64; }
                std::cout << sum_central_weighted(ev_a, ev_b, ev_m, m) << "\n";
            } else if (ev_sp->parsed()) {
                Modulus m = make_modulus(ev_p, ev_e, err);
                if (!err.empty()) { std::cerr << err << "\n"; return 64; }
                ev_has_klim = klim_opt->count() > 0;
                std::cout << sum_pair(ev_x, m, ev_has_klim ? ev_klim : m.p - 1) << "\n";
            } else {
                Modulus m = make_modulus(ev_p, 1, err);
                if (!err.empty()) { std::cerr << err << "\n"; return 64; }
                if (ev_lp->parsed()) std::cout << legendre_poly(ev_n, ev_t % m.p, m) << "\n";
                else if (ev_dw->parsed()) std::cout << deuring_poly(ev_n, ev_x % m.p, m) << "\n";
                else if (ev_jj->parsed()) std::cout << jacobi_Jp(ev_t % m.p, m) << "\n";
                else if (ev_cs->parsed()) {
                    QrTable qr(m.p);
                    std::cout << char_sum_cubic(reduce(ev_mc, m.p), reduce(ev_nc, m.p), qr) << "\n";
                } else if (ev_up->parsed()) {
                    std::cout << u_p(ev_x % m.p, m) << "\n";
                }
            }
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 64;
        }
        return 0;
    }
    return 64;
}

}  // namespace clab
