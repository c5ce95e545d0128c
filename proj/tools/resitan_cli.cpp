// resitan: command line front end for the power residue / tangent product
// verification library.
//
//   resitan verify --p 31 --m 3 --a 2
//   resitan scan --pmin 3 --pmax 500 --out report.jsonl
//   resitan residues --p 13 --m 3
//   resitan symbol --a -2 --p 113 --m 4
//   resitan cornacchia --p 113 --d 64
//   resitan pmd --n 9 --x 0.2
//   resitan pmd14 --p 17

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "resitan/cyclotomic.hpp"
#include "resitan/errors.hpp"
#include "resitan/harness.hpp"
#include "resitan/numeric.hpp"
#include "resitan/quadforms.hpp"
#include "resitan/residues.hpp"

namespace {

using namespace resitan;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int print_records(const std::vector<VerificationRecord>& recs) {
    for (const auto& r : recs) std::cout << to_json_line(r) << '\n';
    return all_ok(recs) ? 0 : 1;
}

ScanConfig build_scan_config(std::uint64_t pmin, std::uint64_t pmax, const std::string& m_opt,
                             const std::string& a_opt, const std::string& checks_opt, double tol,
                             bool timing) {
    ScanConfig cfg;
    cfg.p_min = pmin;
    cfg.p_max = pmax;
    cfg.tolerance = tol;
    cfg.record_timing = timing;
    if (m_opt != "all") {
        std::vector<std::uint32_t> ms;
        for (const auto& s : split_list(m_opt)) ms.push_back(static_cast<std::uint32_t>(std::stoul(s)));
        cfg.m_list = ms;
    }
    if (a_opt == "all") {
        cfg.a_all = true;
    } else {
        const long v = std::stol(a_opt);
        if (v < 1) throw InvalidInputError("--a-count must be at least 1");
        cfg.a_count = static_cast<std::uint32_t>(v);
    }
    if (checks_opt != "all") {
        cfg.checks.clear();
        for (const auto& s : split_list(checks_opt)) {
            const auto c = parse_check(s);
            if (!c) throw InvalidInputError("unknown check: " + s);
            cfg.checks.push_back(*c);
        }
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric verification of tangent products over power residues"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Check one (p, m, a) triple");
    std::uint64_t v_p = 0;
    std::uint32_t v_m = 0;
    std::int64_t v_a = 1;
    std::string v_mode = "both";
    double v_tol = kDefaultRelTol;
    verify->add_option("--p", v_p, "odd prime")->required();
    verify->add_option("--m", v_m, "residue index, 2m | p-1")->required();
    verify->add_option("--a", v_a, "multiplier, a != 0 mod p")->capture_default_str();
    verify->add_option("--mode", v_mode)->check(CLI::IsMember({"exact", "numeric", "both"}))->capture_default_str();
    verify->add_option("--tol", v_tol, "relative tolerance")->capture_default_str();

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "Sweep a range of primes and write a report");
    std::uint64_t s_pmin = 3, s_pmax = 0;
    std::string s_m = "all", s_a = "5", s_checks = "all", s_out, s_format = "jsonl";
    double s_tol = kDefaultRelTol;
    bool s_timing = false;
    unsigned s_threads = 0;
    scan_cmd->add_option("--pmin", s_pmin)->required();
    scan_cmd->add_option("--pmax", s_pmax)->required();
    scan_cmd->add_option("--m", s_m, "'all' or comma separated list")->capture_default_str();
    scan_cmd->add_option("--a-count", s_a, "A for a in {1..A} plus p-1, or 'all'")->capture_default_str();
    scan_cmd->add_option("--checks", s_checks, "'all' or comma separated check names")->capture_default_str();
    scan_cmd->add_option("--tol", s_tol)->capture_default_str();
    scan_cmd->add_option("--out", s_out)->required();
    scan_cmd->add_option("--format", s_format)->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
    scan_cmd->add_flag("--timing", s_timing, "keep measured elapsed_ms (reports are then not reproducible)");
    scan_cmd->add_option("--threads", s_threads, "worker threads (default RESITAN_THREADS or all cores)");

    // residues
    auto* res_cmd = app.add_subcommand("residues", "Print R_m(p) and its sum");
    std::uint64_t r_p = 0;
    std::uint32_t r_m = 0;
    res_cmd->add_option("--p", r_p)->required();
    res_cmd->add_option("--m", r_m)->required();

    // symbol
    auto* sym_cmd = app.add_subcommand("symbol", "Print the +-1 symbol (a/p)_{2m}");
    std::int64_t y_a = 0;
    std::uint64_t y_p = 0;
    std::uint32_t y_m = 0;
    sym_cmd->add_option("--a", y_a)->required();
    sym_cmd->add_option("--p", y_p)->required();
    sym_cmd->add_option("--m", y_m)->required();

    // cornacchia
    auto* cor_cmd = app.add_subcommand("cornacchia", "Solve p = x^2 + d y^2");
    std::uint64_t c_p = 0, c_d = 0;
    cor_cmd->add_option("--p", c_p)->required();
    cor_cmd->add_option("--d", c_d)->required();

    // pmd
    auto* pmd_cmd = app.add_subcommand("pmd", "Check the product identity over r = 0..n-1");
    std::uint32_t l_n = 1;
    double l_x = 0.0, l_tol = 1e-9;
    pmd_cmd->add_option("--n", l_n)->required();
    pmd_cmd->add_option("--x", l_x)->required();
    pmd_cmd->add_option("--tol", l_tol)->capture_default_str();

    // pmd14
    auto* pmd14_cmd = app.add_subcommand("pmd14", "Check the quadratic residue tangent product, p = 1 mod 8");
    std::uint64_t q_p = 0;
    std::int64_t q_a = 1;
    double q_tol = kDefaultRelTol;
    pmd14_cmd->add_option("--p", q_p)->required();
    pmd14_cmd->add_option("--a", q_a)->capture_default_str();
    pmd14_cmd->add_option("--tol", q_tol)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            const PrimeContext ctx(v_p);
            std::vector<VerificationRecord> recs;
            if (v_mode != "numeric") {
                recs.push_back(guarded(v_p, v_m, v_a, Check::gi, [&] { return verify_gi(ctx, v_m, v_a); }));
                recs.push_back(
                    guarded(v_p, v_m, v_a, Check::gi_plus, [&] { return verify_gi_plus(ctx, v_m, v_a); }));
                recs.push_back(guarded(v_p, v_m, v_a, Check::thm_main_exact,
                                       [&] { return verify_tan_cross(ctx, v_m, v_a); }));
            }
            if (v_mode != "exact") {
                recs.push_back(guarded(v_p, v_m, v_a, Check::thm_main_numeric,
                                       [&] { return verify_theorem_main_numeric(ctx, v_m, v_a, v_tol); }));
            }
            return print_records(recs);
        }
        if (*scan_cmd) {
            const auto fmt = parse_format(s_format);
            auto cfg = build_scan_config(s_pmin, s_pmax, s_m, s_a, s_checks, s_tol, s_timing);
            cfg.threads = s_threads;
            const auto recs = scan(cfg);
            emit_report(recs, *fmt, s_out);
            std::size_t fail = 0, err = 0, skip = 0;
            for (const auto& r : recs) {
                fail += r.status == Status::fail;
                err += r.status == Status::error;
                skip += r.status == Status::skipped;
            }
            std::cerr << recs.size() << " records, " << fail << " fail, " << err << " error, " << skip
                      << " skipped -> " << s_out << '\n';
            return (fail == 0 && err == 0) ? 0 : 1;
        }
        if (*res_cmd) {
            const PrimeContext ctx(r_p);
            const auto set = residue_set(ctx, r_m);
            for (std::size_t i = 0; i < set.members.size(); ++i) std::cout << (i ? " " : "") << set.members[i];
            std::cout << "\nsum " << set.sum() << '\n';
            return 0;
        }
        if (*sym_cmd) {
            const PrimeContext ctx(y_p);
            const auto s = symbol_sign(y_a, ctx, y_m);
            std::cout << (s.value > 0 ? "+1" : "-1") << '\n';
            return 0;
        }
        if (*cor_cmd) {
            const PrimeContext ctx(c_p);
            const auto rep = cornacchia(ctx, c_d);
            if (rep) {
                std::cout << rep->x << ' ' << rep->y << '\n';
            } else {
                std::cout << "none\n";
            }
            return 0;
        }
        if (*pmd_cmd) {
            return print_records({guarded(l_n, 0, 0, Check::pmd_lemma, [&] { return pmd_lemma_identity(l_n, l_x, l_tol); })});
        }
        if (*pmd14_cmd) {
            const PrimeContext ctx(q_p);
            return print_records(
                {guarded(q_p, 2, q_a, Check::pmd_thm14, [&] { return pmd_theorem14_numeric(ctx, q_a, q_tol); })});
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
