#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>

#include "gb/common.hpp"

namespace gb {

enum class ScanMode {
    verify_very_strong,
    count_partitions,
    theorem_checks,
    audit_chain,
};

enum class OutputFormat {
    json_lines,
    csv,
};

const char* to_string(ScanMode mode);
const char* to_string(OutputFormat format);
std::optional<ScanMode> parse_scan_mode(const std::string& name);
std::optional<OutputFormat> parse_output_format(const std::string& name);

struct VerifyRecord {
    u64 two_n;
    bool has_distinct_odd_partition;
};

struct CountRecord {
    u64 two_n;
    u64 r;
    u64 r_star;
};

struct TheoremRecord {
    u64 two_n;
    u64 h;
    u64 s;
    std::optional<bool> bertrand_ok;  // empty for 2N <= 6 where the theorem is silent
    bool pi_bound_holds;
    bool phi_bound_holds;
    std::optional<double> f_value;    // empty below the f domain cutoff
    std::optional<bool> eq1_holds;
};

struct AuditRecord {
    u64 two_n;
    u64 h;
    u64 s;
    bool audit_applicable;  // false when s == 0
    std::optional<bool> top_relation_holds;
    u64 forward_violations;
    u64 backward_violations;
    u64 forward_not_applicable;
    u64 backward_not_applicable;
    std::optional<bool> floor_last_holds;
    std::optional<bool> floor_prev_holds;
    std::optional<i64> h_minus_s_plus_1;
};

using ScanRecord = std::variant<VerifyRecord, CountRecord, TheoremRecord, AuditRecord>;

u64 record_two_n(const ScanRecord& record);

// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double value);

// Streaming record writer with a fixed field order per mode. Enforces the
// ascending-two_n contract and writes the csv header up front.
class ReportEmitter {
public:
    ReportEmitter(std::ostream& out, ScanMode mode, OutputFormat format);

    void write(const ScanRecord& record);
    void flush();

private:
    std::ostream& out_;
    ScanMode mode_;
    OutputFormat format_;
    std::optional<u64> last_two_n_;
};

// One-shot emission of a full record span (records must be ascending).
void emit_report(std::span<const ScanRecord> records, ScanMode mode,
                 OutputFormat format, std::ostream& out);

}  // namespace gb
