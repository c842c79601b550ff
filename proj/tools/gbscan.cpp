// Command-line front end: single-target inspection (classify, gsystem,
// partitions, bounds, audit) and bulk range scans with checkpoint/resume.
//
// Exit codes: 0 success / scan clean, 1 scan found violations, 2 usage,
// 3 resource limit, 4 internal or integrity error.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gb/bounds.hpp"
#include "gb/checkpoint.hpp"
#include "gb/classify.hpp"
#include "gb/gsystem.hpp"
#include "gb/report.hpp"
#include "gb/scan.hpp"
#include "gb/sieve.hpp"

namespace {

using namespace gb;

struct CommonOptions {
    u64 target = 0;
    u64 sieve_limit = 0;    // 0: derived from target/end
    u64 spf_limit = 0;      // 0: derived
    u64 memory_budget = u64(2) << 30;
    bool strict_constants = false;
};

SieveTable build_sieve_for(const CommonOptions& opt, u64 needed) {
    SieveTable::Options sieve_opts;
    sieve_opts.memory_budget_bytes = opt.memory_budget;
    const u64 limit = std::max<u64>(opt.sieve_limit ? opt.sieve_limit : needed, 3);
    return SieveTable::build(limit, sieve_opts);
}

SpfTable build_spf_for(const CommonOptions& opt, u64 needed) {
    const u64 auto_limit = std::min<u64>(needed, u64(4) << 20);
    const u64 limit = std::max<u64>(opt.spf_limit ? opt.spf_limit : auto_limit, 2);
    return SpfTable::build(limit, opt.memory_budget);
}

void append_list(std::string& out, const std::vector<u64>& values) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    out += ']';
}

int run_classify(const CommonOptions& opt) {
    const EvenTarget t(opt.target);
    const SieveTable sieve = build_sieve_for(opt, t.value);
    const SpfTable spf = build_spf_for(opt, t.value);
    const Classification cls = classify(sieve, spf, t);

    std::string out = "{\"two_n\":" + std::to_string(t.value);
    out += ",\"h\":" + std::to_string(cls.h());
    out += ",\"s\":" + std::to_string(cls.s());
    out += ",\"q_primes\":";
    append_list(out, cls.q_primes);
    out += ",\"p_primes\":";
    append_list(out, cls.p_primes);
    out += ",\"x_composites\":";
    append_list(out, cls.x_composites);
    out += ",\"a_integers\":";
    append_list(out, cls.a_integers);
    out += "}";
    std::cout << out << "\n";
    return 0;
}

int run_gsystem(const CommonOptions& opt) {
    const EvenTarget t(opt.target);
    const SieveTable sieve = build_sieve_for(opt, t.value);
    const SpfTable spf = build_spf_for(opt, t.value);
    const GSystem gsys = build_gsystem(sieve, classify(sieve, spf, t));

    std::string out = "{\"two_n\":" + std::to_string(t.value) + ",\"equations\":[";
    for (std::size_t i = 0; i < gsys.equations.size(); ++i) {
        const GEquation& eq = gsys.equations[i];
        if (i) out += ',';
        out += "{\"j\":" + std::to_string(eq.index);
        out += ",\"p\":" + std::to_string(eq.p);
        out += ",\"complement\":" + std::to_string(eq.complement);
        out += ",\"complement_is_prime\":";
        out += eq.complement_is_prime ? "true" : "false";
        out += "}";
    }
    out += "]}";
    std::cout << out << "\n";
    return 0;
}

int run_partitions(const CommonOptions& opt) {
    const EvenTarget t(opt.target);
    const SieveTable sieve = build_sieve_for(opt, t.value);
    const PartitionCount pc = count_partitions(sieve, t);
    std::cout << "{\"two_n\":" << t.value << ",\"r\":" << pc.r
              << ",\"r_star\":" << pc.r_star << "}\n";
    return 0;
}

int run_bounds(const CommonOptions& opt) {
    const EvenTarget t(opt.target);
    const SieveTable sieve = build_sieve_for(opt, t.value);
    const SpfTable spf = build_spf_for(opt, t.value);
    const CountSummary counts = fast_counts(sieve, spf, t);

    std::string out = "{\"two_n\":" + std::to_string(t.value);
    out += ",\"h\":" + std::to_string(counts.h);
    out += ",\"s\":" + std::to_string(counts.s);
    out += ",\"phi_2n\":" + std::to_string(counts.phi_2n);
    out += ",\"pi_bound_holds\":";
    out += check_pi_bound(sieve, t.value) ? "true" : "false";
    out += ",\"phi_bound_holds\":";
    out += check_phi_bound_value(t.value, counts.phi_2n) ? "true" : "false";
    if (t.value >= 16) {
        const BoundReport report = check_eq1(counts, opt.strict_constants);
        out += ",\"f_value\":" + format_double(report.f_value);
        out += ",\"s_minus_h\":" + std::to_string(report.s_minus_h);
        out += ",\"eq1_holds\":";
        out += report.eq1_holds ? "true" : "false";
        out += ",\"eq1_marginal\":";
        out += report.eq1_marginal ? "true" : "false";
    } else {
        out += ",\"f_value\":null,\"s_minus_h\":" +
               std::to_string(static_cast<i64>(counts.s) - static_cast<i64>(counts.h)) +
               ",\"eq1_holds\":null,\"eq1_marginal\":null";
    }
    out += "}";
    std::cout << out << "\n";
    return 0;
}

int run_audit(const CommonOptions& opt) {
    const EvenTarget t(opt.target);
    const SieveTable sieve = build_sieve_for(opt, t.value);
    const SpfTable spf = build_spf_for(opt, t.value);
    const Classification cls = classify(sieve, spf, t);

    std::string out = "{\"two_n\":" + std::to_string(t.value);
    out += ",\"h\":" + std::to_string(cls.h());
    out += ",\"s\":" + std::to_string(cls.s());
    if (cls.s() == 0 || cls.h() == 0) {
        out += ",\"audit_applicable\":false}";
        std::cout << out << "\n";
        return 0;
    }
    const ChainAuditReport report = audit_chain(cls, build_gsystem(sieve, cls));
    out += ",\"audit_applicable\":true";
    out += ",\"top_relation_holds\":";
    out += report.top_relation_holds ? "true" : "false";
    out += ",\"forward_violations\":";
    append_list(out, report.forward_violations);
    out += ",\"backward_violations\":";
    append_list(out, report.backward_violations);
    out += ",\"forward_not_applicable\":" + std::to_string(report.forward_not_applicable);
    out += ",\"backward_not_applicable\":" + std::to_string(report.backward_not_applicable);
    out += ",\"floor_last_holds\":";
    out += report.floor_last_holds ? "true" : "false";
    out += ",\"floor_prev_holds\":";
    out += report.floor_prev_holds ? (*report.floor_prev_holds ? "true" : "false") : "null";
    out += ",\"h_minus_s_plus_1\":" + std::to_string(report.h_minus_s_plus_1);
    out += "}";
    std::cout << out << "\n";
    return 0;
}

int run_scan(const CommonOptions& opt, ScanConfig config) {
    config.strict_constants = opt.strict_constants;
    validate(config);

    const SieveTable sieve = build_sieve_for(opt, config.end);
    const u64 spf_needed =
        (config.mode == ScanMode::theorem_checks || config.mode == ScanMode::audit_chain)
            ? config.end
            : 100;
    const SpfTable spf = build_spf_for(opt, spf_needed);

    Checkpoint resume;
    bool have_resume = false;
    if (!config.checkpoint_path.empty() &&
        std::filesystem::exists(config.checkpoint_path)) {
        resume = checkpoint_load(config.checkpoint_path);
        have_resume = true;
        std::cerr << "scan: resuming after 2N=" << resume.last_completed << "\n";
    }

    ReportEmitter emitter(std::cout, config.mode, config.format);
    EmitterSink sink(emitter);
    const ScanTables tables{sieve, spf};
    const ScanSummary summary =
        scan_range(tables, config, sink, have_resume ? &resume : nullptr, &std::cerr);

    std::cerr << "scan: mode=" << to_string(config.mode) << " range=[" << config.start
              << "," << config.end << "] processed=" << summary.targets_processed
              << " resumed-past=" << summary.targets_skipped
              << " violations=" << summary.violations.size()
              << " wall=" << summary.wall_seconds << "s\n";
    if (!summary.violations.empty()) {
        std::cerr << "scan: violating targets:";
        const std::size_t shown = std::min<std::size_t>(summary.violations.size(), 32);
        for (std::size_t i = 0; i < shown; ++i) std::cerr << " " << summary.violations[i];
        if (shown < summary.violations.size())
            std::cerr << " ... (" << summary.violations.size() - shown << " more)";
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goldbach partition and type-P structure toolkit"};
    app.require_subcommand(1);

    CommonOptions opt;
    ScanConfig scan_config;
    std::string mode_name = "verify-very-strong";
    std::string format_name = "json-lines";

    auto add_common = [&](CLI::App* cmd, bool with_target) {
        if (with_target)
            cmd->add_option("--target", opt.target, "even target 2N")->required();
        cmd->add_option("--sieve-limit", opt.sieve_limit,
                        "primality table limit (default: derived)");
        cmd->add_option("--spf-limit", opt.spf_limit,
                        "smallest-prime-factor table limit (default: derived)");
        cmd->add_option("--memory-budget", opt.memory_budget,
                        "table memory budget in bytes");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "Q/P/X/A sets for one target");
    add_common(classify_cmd, true);

    CLI::App* gsystem_cmd = app.add_subcommand("gsystem", "G-system equations for one target");
    add_common(gsystem_cmd, true);

    CLI::App* partitions_cmd =
        app.add_subcommand("partitions", "Goldbach partition counts r and r* for one target");
    add_common(partitions_cmd, true);

    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "f(2N), explicit pi/phi bound checks, s-h report");
    add_common(bounds_cmd, true);
    bounds_cmd->add_flag("--strict-constants", opt.strict_constants,
                         "use e^gamma and 2*1.25506 instead of the rounded literals");

    CLI::App* audit_cmd = app.add_subcommand("audit", "inequality-chain audit for one target");
    add_common(audit_cmd, true);

    CLI::App* scan_cmd = app.add_subcommand("scan", "range scan over even targets");
    add_common(scan_cmd, false);
    scan_cmd->add_option("--start", scan_config.start, "first even target")->required();
    scan_cmd->add_option("--end", scan_config.end, "last even target")->required();
    scan_cmd->add_option("--mode", mode_name,
                         "verify-very-strong | count-partitions | theorem-checks | audit-chain");
    scan_cmd->add_option("--workers", scan_config.workers, "worker threads (default 1)");
    scan_cmd->add_option("--segment", scan_config.segment, "even targets per work unit");
    scan_cmd->add_option("--format", format_name, "json-lines | csv");
    scan_cmd->add_option("--checkpoint", scan_config.checkpoint_path,
                         "checkpoint file for interrupt/resume");
    scan_cmd->add_flag("--strict-constants", opt.strict_constants,
                       "use e^gamma and 2*1.25506 instead of the rounded literals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*classify_cmd) return run_classify(opt);
        if (*gsystem_cmd) return run_gsystem(opt);
        if (*partitions_cmd) return run_partitions(opt);
        if (*bounds_cmd) return run_bounds(opt);
        if (*audit_cmd) return run_audit(opt);
        if (*scan_cmd) {
            const auto mode = parse_scan_mode(mode_name);
            const auto format = parse_output_format(format_name);
            if (!mode || !format) {
                std::cerr << "error: unknown mode or format\n";
                return 2;
            }
            scan_config.mode = *mode;
            scan_config.format = *format;
            return run_scan(opt, scan_config);
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: allocation failed\n";
        return 3;
    } catch (const ResumeRefusedError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: delete the checkpoint or rerun with the original flags\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
