#include "gb/report.hpp"

#include <cstdio>

namespace gb {
namespace {

// Stream-state-independent rendering; every writer below goes through these.
void put_u64(std::string& line, u64 v) { line += std::to_string(v); }
void put_i64(std::string& line, i64 v) { line += std::to_string(v); }
void put_bool(std::string& line, bool v) { line += v ? "true" : "false"; }

void put_opt_bool(std::string& line, const std::optional<bool>& v, bool json) {
    if (v)
        put_bool(line, *v);
    else
        line += json ? "null" : "";
}

void put_opt_double(std::string& line, const std::optional<double>& v, bool json) {
    if (v)
        line += format_double(*v);
    else
        line += json ? "null" : "";
}

void put_opt_i64(std::string& line, const std::optional<i64>& v, bool json) {
    if (v)
        put_i64(line, *v);
    else
        line += json ? "null" : "";
}

struct FieldWriter {
    std::string& line;
    bool json;
    bool first = true;

    void sep(const char* name) {
        if (!first) line += ',';
        if (json) {
            line += '"';
            line += name;
            line += "\":";
        }
        first = false;
    }

    void field(const char* name, u64 v) { sep(name); put_u64(line, v); }
    void field(const char* name, i64 v) { sep(name); put_i64(line, v); }
    void field(const char* name, bool v) { sep(name); put_bool(line, v); }
    void field(const char* name, const std::optional<bool>& v) { sep(name); put_opt_bool(line, v, json); }
    void field(const char* name, const std::optional<double>& v) { sep(name); put_opt_double(line, v, json); }
    void field(const char* name, const std::optional<i64>& v) { sep(name); put_opt_i64(line, v, json); }
};

template <typename Record>
void write_fields(FieldWriter& w, const Record& r);

template <>
void write_fields(FieldWriter& w, const VerifyRecord& r) {
    w.field("two_n", r.two_n);
    w.field("has_distinct_odd_partition", r.has_distinct_odd_partition);
}

template <>
void write_fields(FieldWriter& w, const CountRecord& r) {
    w.field("two_n", r.two_n);
    w.field("r", r.r);
    w.field("r_star", r.r_star);
}

template <>
void write_fields(FieldWriter& w, const TheoremRecord& r) {
    w.field("two_n", r.two_n);
    w.field("h", r.h);
    w.field("s", r.s);
    w.field("bertrand_ok", r.bertrand_ok);
    w.field("pi_bound_holds", r.pi_bound_holds);
    w.field("phi_bound_holds", r.phi_bound_holds);
    w.field("f_value", r.f_value);
    w.field("eq1_holds", r.eq1_holds);
}

template <>
void write_fields(FieldWriter& w, const AuditRecord& r) {
    w.field("two_n", r.two_n);
    w.field("h", r.h);
    w.field("s", r.s);
    w.field("audit_applicable", r.audit_applicable);
    w.field("top_relation_holds", r.top_relation_holds);
    w.field("forward_violations", r.forward_violations);
    w.field("backward_violations", r.backward_violations);
    w.field("forward_not_applicable", r.forward_not_applicable);
    w.field("backward_not_applicable", r.backward_not_applicable);
    w.field("floor_last_holds", r.floor_last_holds);
    w.field("floor_prev_holds", r.floor_prev_holds);
    w.field("h_minus_s_plus_1", r.h_minus_s_plus_1);
}

const char* csv_header(ScanMode mode) {
    switch (mode) {
        case ScanMode::verify_very_strong:
            return "two_n,has_distinct_odd_partition";
        case ScanMode::count_partitions:
            return "two_n,r,r_star";
        case ScanMode::theorem_checks:
            return "two_n,h,s,bertrand_ok,pi_bound_holds,phi_bound_holds,f_value,eq1_holds";
        case ScanMode::audit_chain:
            return "two_n,h,s,audit_applicable,top_relation_holds,forward_violations,"
                   "backward_violations,forward_not_applicable,backward_not_applicable,"
                   "floor_last_holds,floor_prev_holds,h_minus_s_plus_1";
    }
    return "";
}

}  // namespace

const char* to_string(ScanMode mode) {
    switch (mode) {
        case ScanMode::verify_very_strong: return "verify-very-strong";
        case ScanMode::count_partitions: return "count-partitions";
        case ScanMode::theorem_checks: return "theorem-checks";
        case ScanMode::audit_chain: return "audit-chain";
    }
    return "?";
}

const char* to_string(OutputFormat format) {
    return format == OutputFormat::json_lines ? "json-lines" : "csv";
}

std::optional<ScanMode> parse_scan_mode(const std::string& name) {
    if (name == "verify-very-strong") return ScanMode::verify_very_strong;
    if (name == "count-partitions") return ScanMode::count_partitions;
    if (name == "theorem-checks") return ScanMode::theorem_checks;
    if (name == "audit-chain") return ScanMode::audit_chain;
    return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(const std::string& name) {
    if (name == "json-lines") return OutputFormat::json_lines;
    if (name == "csv") return OutputFormat::csv;
    return std::nullopt;
}

u64 record_two_n(const ScanRecord& record) {
    return std::visit([](const auto& r) { return r.two_n; }, record);
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

ReportEmitter::ReportEmitter(std::ostream& out, ScanMode mode, OutputFormat format)
    : out_(out), mode_(mode), format_(format) {
    if (format_ == OutputFormat::csv) out_ << csv_header(mode_) << '\n';
    if (!out_) throw std::runtime_error("report: write failed");
}

void ReportEmitter::write(const ScanRecord& record) {
    const u64 two_n = record_two_n(record);
    if (last_two_n_ && two_n <= *last_two_n_)
        throw std::invalid_argument("report: records must be strictly ascending by two_n");
    last_two_n_ = two_n;

    std::string line;
    const bool json = format_ == OutputFormat::json_lines;
    if (json) line += '{';
    FieldWriter w{line, json};
    std::visit([&](const auto& r) { write_fields(w, r); }, record);
    if (json) line += '}';
    line += '\n';
    out_ << line;
    if (!out_) throw std::runtime_error("report: write failed");
}

void ReportEmitter::flush() {
    out_.flush();
    if (!out_) throw std::runtime_error("report: flush failed");
}

void emit_report(std::span<const ScanRecord> records, ScanMode mode,
                 OutputFormat format, std::ostream& out) {
    ReportEmitter emitter(out, mode, format);
    for (const ScanRecord& record : records) emitter.write(record);
    emitter.flush();
}

}  // namespace gb
