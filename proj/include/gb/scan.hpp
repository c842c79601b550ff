#pragma once

#include <span>
#include <string>
#include <vector>

#include "gb/checkpoint.hpp"
#include "gb/classify.hpp"
#include "gb/common.hpp"
#include "gb/report.hpp"
#include "gb/sieve.hpp"

namespace gb {

struct ScanConfig {
    u64 start = 0;
    u64 end = 0;
    ScanMode mode = ScanMode::verify_very_strong;
    unsigned workers = 1;
    u64 segment = u64(1) << 16;  // even targets per work unit
    OutputFormat format = OutputFormat::json_lines;
    std::string checkpoint_path;  // empty: no checkpointing
    bool strict_constants = false;
};

// Digest over the fields that define the scan result: start, end, mode,
// segment, format. Worker count cannot change results (merge order is
// pinned) and the checkpoint path is where the digest lives, so neither is
// hashed.
u64 config_digest(const ScanConfig& config);

void validate(const ScanConfig& config);

struct ScanSummary {
    u64 targets_processed = 0;          // targets computed by this run
    u64 targets_skipped = 0;            // targets restored from a checkpoint
    std::vector<u64> violations;        // ascending, includes checkpointed ones
    double wall_seconds = 0.0;
};

// Receives merged records strictly in ascending two_n order, one work unit
// at a time, on the caller's thread.
class RecordSink {
public:
    virtual ~RecordSink() = default;
    virtual void consume(std::span<const ScanRecord> records) = 0;
};

class NullSink final : public RecordSink {
public:
    void consume(std::span<const ScanRecord>) override {}
};

class EmitterSink final : public RecordSink {
public:
    explicit EmitterSink(ReportEmitter& emitter) : emitter_(emitter) {}
    void consume(std::span<const ScanRecord> records) override {
        for (const ScanRecord& r : records) emitter_.write(r);
        emitter_.flush();
    }

private:
    ReportEmitter& emitter_;
};

struct ScanTables {
    const SieveTable& sieve;
    const SpfTable& spf;
};

// Processes every even target in [start, end] exactly once, fanning work
// units out to `workers` threads and merging results back in target order,
// so the record stream and violation list do not depend on scheduling.
// With a checkpoint path set, progress is persisted after each merged unit;
// pass `resume` to continue an interrupted run (digest must match).
ScanSummary scan_range(const ScanTables& tables, const ScanConfig& config,
                       RecordSink& sink, const Checkpoint* resume = nullptr,
                       std::ostream* progress = nullptr);

}  // namespace gb
