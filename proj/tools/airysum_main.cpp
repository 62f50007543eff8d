// airysum: verification laboratory for the spectral sum-rule identities of
// the symmetric linear potential, the quantum bouncer, and the half
// harmonic oscillator.  Subcommands: zeros, verify, moments, stark, fig1,
// report.  Exit codes: 0 success, 1 verification/accuracy failure, 2 usage.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "airysum/config.hpp"
#include "airysum/errors.hpp"
#include "airysum/identities.hpp"
#include "airysum/moments.hpp"
#include "airysum/report_io.hpp"
#include "airysum/stark.hpp"
#include "airysum/zeros.hpp"

namespace {

using namespace airysum;

struct NRange {
    int lo = 1;
    int hi = 1;
};

NRange parse_range(const std::string& text) {
    NRange r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n", "expected N or LO..HI");
    }
    if (r.hi < r.lo) throw CLI::ValidationError("--n", "range upper bound below lower");
    return r;
}

int write_out(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << cfg.output << "\n";
        return 2;
    }
    out << text;
    return 0;
}

int run_zeros(const RunConfig& cfg, const std::string& kind_name, int count, int refine_upto) {
    const ZeroKind kind = (kind_name == "ai") ? ZeroKind::AiZero : ZeroKind::AiPrimeZero;
    const ZeroTable table = zero_table(kind, count, std::min(refine_upto, count));

    std::ostringstream os;
    if (cfg.format == "csv") {
        os << zero_table_csv(table);
    } else if (cfg.format == "json") {
        for (int k = 1; k <= table.count(); ++k) {
            os << "{\"kind\":\"" << kind_name << "\",\"k\":" << k << ",\"value\":"
               << csv_double(table.value(k)) << ",\"refined\":"
               << (table.refined(k) ? "true" : "false") << "}\n";
        }
    } else {
        os << (kind == ZeroKind::AiZero ? "zeros of Ai\n" : "zeros of Ai'\n");
        char buf[64];
        for (int k = 1; k <= table.count(); ++k) {
            std::snprintf(buf, sizeof buf, "%6d  %.17g%s\n", k, table.value(k),
                          table.refined(k) ? "" : "  (asymptotic)");
            os << buf;
        }
    }
    return write_out(cfg, os.str());
}

int run_verify(const RunConfig& cfg, const std::string& id, bool all, const NRange& range) {
    std::vector<const IdentityRecord*> records;
    if (all) {
        for (const auto& rec : registry()) records.push_back(&rec);
    } else {
        const IdentityRecord* rec = find_identity(id);
        if (rec == nullptr) {
            std::cerr << "error: unknown identity id '" << id << "'\n";
            return 2;
        }
        if (range.lo < rec->min_n) {
            std::cerr << "error: family " << id << " starts at n = " << rec->min_n << "\n";
            return 2;
        }
        records.push_back(rec);
    }

    std::vector<VerificationReport> reports;
    bool all_pass = true;
    for (const IdentityRecord* rec : records) {
        std::optional<double> tol;
        const auto it = cfg.tol_overrides.find(rec->id);
        if (it != cfg.tol_overrides.end()) tol = it->second;
        for (int n = std::max(range.lo, rec->min_n); n <= range.hi; ++n) {
            reports.push_back(verify_identity(rec->id, n, cfg.sum, tol));
            all_pass = all_pass && reports.back().pass;
        }
    }

    std::ostringstream os;
    if (cfg.format == "csv") {
        os << report_csv_header() << '\n';
        for (const auto& r : reports) os << report_csv_row(r) << '\n';
    } else if (cfg.format == "json") {
        for (const auto& r : reports) os << report_json_line(r) << '\n';
    } else {
        for (const auto& r : reports) os << report_table_row(r) << '\n';
        os << (all_pass ? "all identities verified\n" : "FAILURES present\n");
    }
    const int wr = write_out(cfg, os.str());
    if (wr != 0) return wr;
    return all_pass ? 0 : 1;
}

int run_moments(const RunConfig& cfg, const std::string& parity_name, int max_p, int n_at) {
    const Parity parity = (parity_name == "odd") ? Parity::Odd : Parity::Even;
    const auto exprs = moment_recursion_airy(parity, max_p);
    const ZeroKind kind = (parity == Parity::Odd) ? ZeroKind::AiZero : ZeroKind::AiPrimeZero;
    const double lambda = shared_zero_table(kind, n_at)->value(n_at);

    std::ostringstream os;
    if (cfg.format == "json") {
        for (const auto& e : exprs) os << moment_json(e) << '\n';
    } else if (cfg.format == "csv") {
        os << "parity,p,num,den,exp\n";
        for (const auto& e : exprs)
            for (const auto& t : e.terms)
                os << parity_name << ',' << e.power << ','
                   << boost::multiprecision::numerator(t.coeff) << ','
                   << boost::multiprecision::denominator(t.coeff) << ',' << t.exponent << '\n';
    } else {
        char buf[64];
        os << "<y^p> for " << parity_name << " states, l = "
           << (parity == Parity::Odd ? "zeta_n" : "eta_n") << "; values at n = " << n_at << '\n';
        for (const auto& e : exprs) {
            std::snprintf(buf, sizeof buf, "%.17g", e.eval(lambda));
            os << "p=" << e.power << ":  " << e.to_pretty() << "  =  " << buf << '\n';
        }
    }
    return write_out(cfg, os.str());
}

int run_stark(const RunConfig& cfg, int n_max) {
    std::ostringstream os;
    char buf[200];
    const bool csv = cfg.format == "csv";
    if (csv)
        os << "system,parity,n,closed_or_wkb,pt2,coefficient\n";
    else
        os << "second-order Stark shifts: closed form / WKB vs perturbation-theory sum\n";

    bool ok = true;
    for (int n = 1; n <= std::max(1, n_max); ++n) {
        for (Parity parity : {Parity::Odd, Parity::Even}) {
            const StarkResult cf = stark_linear_closed_form(parity, n);
            const StarkResult pt = pt2_shift(SystemId::SymmetricLinear, parity, n, cfg.sum);
            const double coeff = pt.value / (cf.value / ((parity == Parity::Odd ? -7.0 : -5.0) / 9.0));
            ok = ok && std::fabs(pt.value - cf.value) <= 1e-6 * std::fabs(cf.value);
            if (csv)
                std::snprintf(buf, sizeof buf, "linear,%s,%d,%s,%s,%s\n",
                              parity == Parity::Odd ? "odd" : "even", n,
                              csv_double(cf.value).c_str(), csv_double(pt.value).c_str(),
                              csv_double(coeff).c_str());
            else
                std::snprintf(buf, sizeof buf,
                              "linear %-4s n=%-3d closed=%-22.15g pt2=%-22.15g coeff=%.12g\n",
                              parity == Parity::Odd ? "odd" : "even", n, cf.value, pt.value,
                              coeff);
            os << buf;
        }
    }
    for (int n = 0; n <= std::max(0, n_max); ++n) {
        const StarkResult wkb = wkb_half_sho(n, 2);
        const StarkResult pt = pt2_shift(SystemId::HalfSHO, Parity::None, n, cfg.sum);
        if (csv)
            std::snprintf(buf, sizeof buf, "halfsho,none,%d,%s,%s,%s\n", n,
                          csv_double(wkb.value).c_str(), csv_double(pt.value).c_str(),
                          csv_double(wkb.value / pt.value).c_str());
        else
            std::snprintf(buf, sizeof buf,
                          "halfsho    n=%-3d wkb2=%-22.15g pt2=%-22.15g ratio=%.12g\n", n,
                          wkb.value, pt.value, wkb.value / pt.value);
        os << buf;
    }
    const int wr = write_out(cfg, os.str());
    if (wr != 0) return wr;
    return ok ? 0 : 1;
}

int run_fig1(const RunConfig& cfg, int n_max) {
    const auto rows = fig1_series(n_max, cfg.sum);
    std::ostringstream os;
    if (cfg.format == "json") {
        for (const auto& r : rows)
            os << "{\"n\":" << r.n << ",\"r1\":" << csv_double(r.r1) << ",\"r2\":"
               << csv_double(r.r2) << ",\"pt2_terms\":" << r.pt2_terms << ",\"pt2_tail\":"
               << csv_double(r.pt2_tail) << "}\n";
    } else {
        os << fig1_csv(rows);
    }
    return write_out(cfg, os.str());
}

int run_report(const RunConfig& cfg, int n_max) {
    std::ostringstream os;
    bool ok = true;
    int families = 0, rows = 0;
    for (const auto& rec : registry()) {
        ++families;
        bool family_ok = true;
        for (int n = rec.min_n; n <= n_max; ++n) {
            const VerificationReport r = verify_identity(rec.id, n, cfg.sum);
            family_ok = family_ok && r.pass;
            ++rows;
        }
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-28s [%s]\n", rec.id.c_str(),
                      family_ok ? "pass" : "FAIL");
        os << buf;
        ok = ok && family_ok;
    }
    // Stark coefficient checks ride along: -7/9 and -5/9 within 1e-6.
    for (int n = 1; n <= std::min(n_max, 10); ++n) {
        for (Parity parity : {Parity::Odd, Parity::Even}) {
            const double want = (parity == Parity::Odd) ? -7.0 / 9.0 : -5.0 / 9.0;
            const StarkResult pt = pt2_shift(SystemId::SymmetricLinear, parity, n, cfg.sum);
            const StarkResult cf = stark_linear_closed_form(parity, n);
            const double coeff = pt.value / (cf.value / want);
            ok = ok && std::fabs(coeff - want) <= 1e-6 * std::fabs(want);
        }
    }
    os << "stark.pt2_coefficients      [" << (ok ? "pass" : "FAIL") << "]\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d identity families, %d reports, n up to %d\n", families,
                  rows, n_max);
    os << buf;
    const int wr = write_out(cfg, os.str());
    if (wr != 0) return wr;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-rule verification laboratory for Airy-spectrum and half-oscillator systems"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value configuration file");

    // zeros
    auto* zeros_cmd = app.add_subcommand("zeros", "tabulate zeros of Ai or Ai'");
    std::string kind = "ai";
    int count = 10;
    int refine_upto = 200;
    zeros_cmd->add_option("--kind", kind, "ai | aiprime")
        ->check(CLI::IsMember({"ai", "aiprime"}));
    zeros_cmd->add_option("--count", count, "number of zeros")->check(CLI::PositiveNumber);
    zeros_cmd->add_option("--refine-upto", refine_upto, "Newton-refined prefix length");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify sum-rule identities");
    std::string id;
    bool all = false;
    std::string range_text = "1..10";
    verify_cmd->add_option("--id", id, "identity id (see README for the catalog)");
    verify_cmd->add_flag("--all", all, "run the whole registry");
    verify_cmd->add_option("--n", range_text, "index or LO..HI range");
    verify_cmd->add_option("--terms", cfg.sum.explicit_terms, "explicit terms per sum");
    verify_cmd->add_option("--refine-upto", cfg.sum.refine_upto, "Newton-refined zeros");

    // moments
    auto* moments_cmd = app.add_subcommand("moments", "exact diagonal moments <y^p>");
    std::string parity_name = "odd";
    int max_p = 5;
    int n_at = 1;
    moments_cmd->add_option("--parity", parity_name, "odd | even")
        ->check(CLI::IsMember({"odd", "even"}));
    moments_cmd->add_option("--max-p", max_p, "highest power")->check(CLI::PositiveNumber);
    moments_cmd->add_option("--n", n_at, "state index for the numeric column")
        ->check(CLI::PositiveNumber);

    // stark
    auto* stark_cmd = app.add_subcommand("stark", "Stark shifts: closed forms vs PT2 sums");
    int stark_n_max = 5;
    stark_cmd->add_option("--n-max", stark_n_max, "highest state index");
    stark_cmd->add_option("--terms", cfg.sum.explicit_terms, "explicit terms per sum");

    // fig1
    auto* fig1_cmd = app.add_subcommand("fig1", "WKB/PT comparison series for the half oscillator");
    int fig1_n_max = 16;
    fig1_cmd->add_option("--n-max", fig1_n_max, "highest state index (>= 4)");
    fig1_cmd->add_option("--terms", cfg.sum.explicit_terms, "explicit terms per sum");

    // report
    auto* report_cmd = app.add_subcommand("report", "full verification sweep with summary");
    int report_n_max = 10;
    report_cmd->add_option("--n-max", report_n_max, "highest state index per family");
    report_cmd->add_option("--terms", cfg.sum.explicit_terms, "explicit terms per sum");

    for (auto* sub : {zeros_cmd, verify_cmd, moments_cmd, stark_cmd, fig1_cmd, report_cmd}) {
        sub->add_option("--format", cfg.format, "table | csv | json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        sub->add_option("--output", cfg.output, "write to file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) {
            // Flags win over the file: reload flag values after the file.
            RunConfig file_cfg;
            load_config_file(config_path, file_cfg);
            const RunConfig flag_cfg = cfg;
            cfg = file_cfg;
            for (auto* opt : {verify_cmd->get_option("--terms"), stark_cmd->get_option("--terms"),
                              fig1_cmd->get_option("--terms"), report_cmd->get_option("--terms")})
                if (opt->count() > 0) cfg.sum.explicit_terms = flag_cfg.sum.explicit_terms;
            if (verify_cmd->get_option("--refine-upto")->count() > 0)
                cfg.sum.refine_upto = flag_cfg.sum.refine_upto;
            bool format_given = false, output_given = false;
            for (auto* sub : {zeros_cmd, verify_cmd, moments_cmd, stark_cmd, fig1_cmd, report_cmd}) {
                format_given = format_given || sub->get_option("--format")->count() > 0;
                output_given = output_given || sub->get_option("--output")->count() > 0;
            }
            if (format_given) cfg.format = flag_cfg.format;
            if (output_given) cfg.output = flag_cfg.output;
        }

        if (app.got_subcommand(zeros_cmd)) return run_zeros(cfg, kind, count, refine_upto);
        if (app.got_subcommand(verify_cmd)) {
            if (!all && id.empty()) {
                std::cerr << "error: verify needs --id or --all\n";
                return 2;
            }
            return run_verify(cfg, id, all, parse_range(range_text));
        }
        if (app.got_subcommand(moments_cmd)) return run_moments(cfg, parity_name, max_p, n_at);
        if (app.got_subcommand(stark_cmd)) return run_stark(cfg, stark_n_max);
        if (app.got_subcommand(fig1_cmd)) return run_fig1(cfg, fig1_n_max);
        if (app.got_subcommand(report_cmd)) return run_report(cfg, report_n_max);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DivergentSumError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AccuracyError& e) {
        std::cerr << "error: " << e.what() << " (achieved " << e.achieved() << ", requested "
                  << e.requested() << ")\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
