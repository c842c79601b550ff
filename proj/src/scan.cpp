#include "gb/scan.hpp"

#include <chrono>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "gb/bounds.hpp"
#include "gb/gsystem.hpp"

namespace gb {
namespace {

struct UnitResult {
    std::vector<ScanRecord> records;
    std::vector<u64> violations;
};

ScanRecord compute_verify(const ScanTables& tables, EvenTarget t, bool& violation) {
    const bool ok = has_distinct_odd_partition(tables.sieve, t);
    violation = !ok;
    return VerifyRecord{t.value, ok};
}

ScanRecord compute_count(const ScanTables& tables, EvenTarget t, bool& violation) {
    const PartitionCount pc = count_partitions(tables.sieve, t);
    violation = pc.r == 0;
    return CountRecord{t.value, pc.r, pc.r_star};
}

ScanRecord compute_theorem(const ScanTables& tables, const ScanConfig& config,
                           EvenTarget t, bool& violation) {
    const CountSummary counts = fast_counts(tables.sieve, tables.spf, t);
    TheoremRecord rec{t.value, counts.h, counts.s, {}, false, false, {}, {}};

    if (t.value > 6) {
        // A missing witness is a finding here, not an abort: the scan's whole
        // point is to report it (and fail the run with a violation).
        try {
            bertrand_witness(tables.sieve, t);
            rec.bertrand_ok = counts.h >= 2;
        } catch (const InternalInconsistencyError&) {
            rec.bertrand_ok = false;
        }
    }
    rec.pi_bound_holds = check_pi_bound(tables.sieve, t.value);
    rec.phi_bound_holds = check_phi_bound_value(t.value, counts.phi_2n);
    if (t.value >= 16) {
        const BoundReport report = check_eq1(counts, config.strict_constants);
        rec.f_value = report.f_value;
        rec.eq1_holds = report.eq1_holds;
    }

    violation = (rec.bertrand_ok && !*rec.bertrand_ok) || !rec.pi_bound_holds ||
                !rec.phi_bound_holds;
    return rec;
}

ScanRecord compute_audit(const ScanTables& tables, EvenTarget t, bool& violation) {
    violation = false;
    const Classification cls = classify(tables.sieve, tables.spf, t);
    AuditRecord rec{t.value, cls.h(), cls.s(), false, {}, 0, 0, 0, 0, {}, {}, {}};
    if (cls.s() == 0 || cls.h() == 0) return rec;

    const GSystem gsys = build_gsystem(tables.sieve, cls);
    const ChainAuditReport report = audit_chain(cls, gsys);
    rec.audit_applicable = true;
    rec.top_relation_holds = report.top_relation_holds;
    rec.forward_violations = report.forward_violations.size();
    rec.backward_violations = report.backward_violations.size();
    rec.forward_not_applicable = report.forward_not_applicable;
    rec.backward_not_applicable = report.backward_not_applicable;
    rec.floor_last_holds = report.floor_last_holds;
    rec.floor_prev_holds = report.floor_prev_holds;
    rec.h_minus_s_plus_1 = report.h_minus_s_plus_1;
    return rec;
}

UnitResult compute_unit(const ScanTables& tables, const ScanConfig& config,
                        u64 first, u64 last) {
    UnitResult out;
    out.records.reserve((last - first) / 2 + 1);
    for (u64 two_n = first; two_n <= last; two_n += 2) {
        const EvenTarget t(two_n);
        bool violation = false;
        ScanRecord rec = [&] {
            switch (config.mode) {
                case ScanMode::verify_very_strong: return compute_verify(tables, t, violation);
                case ScanMode::count_partitions: return compute_count(tables, t, violation);
                case ScanMode::theorem_checks: return compute_theorem(tables, config, t, violation);
                case ScanMode::audit_chain: return compute_audit(tables, t, violation);
            }
            throw std::logic_error("scan: unknown mode");
        }();
        out.records.push_back(std::move(rec));
        if (violation) out.violations.push_back(two_n);
    }
    return out;
}

}  // namespace

u64 config_digest(const ScanConfig& config) {
    std::string canonical = "start=" + std::to_string(config.start) +
                            ";end=" + std::to_string(config.end) +
                            ";mode=" + to_string(config.mode) +
                            ";segment=" + std::to_string(config.segment) +
                            ";format=" + to_string(config.format);
    return fnv1a64(canonical);
}

void validate(const ScanConfig& config) {
    if (config.start < 4 || (config.start & 1) || (config.end & 1))
        throw std::invalid_argument("scan: start and end must be even, start >= 4");
    if (config.start > config.end)
        throw std::invalid_argument("scan: start must be <= end");
    if (config.workers < 1) throw std::invalid_argument("scan: workers must be >= 1");
    if (config.segment < 1) throw std::invalid_argument("scan: segment must be >= 1");
}

ScanSummary scan_range(const ScanTables& tables, const ScanConfig& config,
                       RecordSink& sink, const Checkpoint* resume,
                       std::ostream* progress) {
    validate(config);
    if (config.end > tables.sieve.limit())
        throw std::out_of_range("scan: end exceeds sieve limit");

    const auto t0 = std::chrono::steady_clock::now();
    ScanSummary summary;
    u64 scan_start = config.start;

    if (resume) {
        if (resume->config_digest != config_digest(config))
            throw ResumeRefusedError(
                "scan: checkpoint was written by a different configuration");
        if (resume->last_completed < config.start || resume->last_completed > config.end ||
            (resume->last_completed & 1))
            throw CheckpointCorruptError("scan: checkpoint target outside scan range");
        summary.violations = resume->violations;
        summary.targets_skipped = (resume->last_completed - config.start) / 2 + 1;
        if (resume->last_completed == config.end) {
            summary.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return summary;
        }
        scan_start = resume->last_completed + 2;
    }

    const u64 total_targets = (config.end - scan_start) / 2 + 1;
    const u64 unit_targets = config.segment;
    const u64 total_units = (total_targets + unit_targets - 1) / unit_targets;
    const unsigned worker_count =
        static_cast<unsigned>(std::min<u64>(config.workers, total_units));
    const u64 window = std::max<u64>(4, u64(2) * worker_count);

    std::mutex mu;
    std::condition_variable cv_claim, cv_done;
    u64 next_unit = 0;
    u64 merged_units = 0;
    std::map<u64, UnitResult> done;
    bool failed = false;
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            u64 unit;
            {
                std::unique_lock lock(mu);
                cv_claim.wait(lock, [&] {
                    return failed || next_unit >= total_units ||
                           next_unit < merged_units + window;
                });
                if (failed || next_unit >= total_units) return;
                unit = next_unit++;
            }
            const u64 first = scan_start + 2 * unit * unit_targets;
            const u64 last = std::min(config.end, first + 2 * (unit_targets - 1));
            try {
                UnitResult result = compute_unit(tables, config, first, last);
                std::unique_lock lock(mu);
                done.emplace(unit, std::move(result));
                cv_done.notify_all();
            } catch (...) {
                std::unique_lock lock(mu);
                if (!failed) {
                    failed = true;
                    error = std::current_exception();
                }
                cv_done.notify_all();
                cv_claim.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(worker_count);
    for (unsigned i = 0; i < worker_count; ++i) threads.emplace_back(worker);

    auto last_progress = t0;
    while (merged_units < total_units) {
        UnitResult result;
        {
            std::unique_lock lock(mu);
            cv_done.wait(lock, [&] { return failed || done.count(merged_units) > 0; });
            if (failed) break;
            auto it = done.find(merged_units);
            result = std::move(it->second);
            done.erase(it);
        }

        try {
            sink.consume(result.records);
            summary.targets_processed += result.records.size();
            summary.violations.insert(summary.violations.end(),
                                      result.violations.begin(), result.violations.end());
            const u64 unit_last = record_two_n(result.records.back());
            if (!config.checkpoint_path.empty()) {
                checkpoint_save(config.checkpoint_path,
                                Checkpoint{config_digest(config), unit_last,
                                           summary.violations});
            }
        } catch (...) {
            std::unique_lock lock(mu);
            if (!failed) {
                failed = true;
                error = std::current_exception();
            }
            cv_claim.notify_all();
            break;
        }

        {
            std::unique_lock lock(mu);
            ++merged_units;
            cv_claim.notify_all();
        }

        if (progress) {
            const auto now = std::chrono::steady_clock::now();
            if (now - last_progress > std::chrono::seconds(2)) {
                last_progress = now;
                *progress << "scan: " << merged_units << "/" << total_units
                          << " units merged\n";
                progress->flush();
            }
        }
    }

    for (std::thread& t : threads) t.join();
    if (error) std::rethrow_exception(error);

    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

}  // namespace gb
