#pragma once

#include <string>
#include <vector>

#include "gb/common.hpp"

namespace gb {

// Scan progress snapshot. `config_digest` pins the scan parameters that
// define the result (range, mode, segmentation, format); a resume against a
// different digest is refused rather than silently restarted.
struct Checkpoint {
    u64 config_digest = 0;
    u64 last_completed = 0;             // last even target fully merged
    std::vector<u64> violations;        // ascending

    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

u64 fnv1a64(const std::string& data);

// Atomic save (write to a temp file, then rename over the target).
void checkpoint_save(const std::string& path, const Checkpoint& checkpoint);

// Raises CheckpointCorruptError on truncated, malformed, or checksum-failing
// files.
Checkpoint checkpoint_load(const std::string& path);

}  // namespace gb
