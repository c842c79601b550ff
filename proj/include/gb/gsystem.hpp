#pragma once

#include <optional>
#include <vector>

#include "gb/classify.hpp"
#include "gb/common.hpp"
#include "gb/sieve.hpp"

namespace gb {

// One equation of the G-system: 2N - P_j = complement.
struct GEquation {
    u64 index;  // j, 1-based
    u64 p;
    u64 complement;
    bool complement_is_prime;

    friend bool operator==(const GEquation&, const GEquation&) = default;
};

struct GSystem {
    EvenTarget target;
    std::vector<GEquation> equations;  // exactly h entries, j ascending
};

struct PartitionCount {
    EvenTarget target;
    u64 r;       // unordered prime pairs p <= q with p + q = 2N (2 and p = q allowed)
    u64 r_star;  // pairs of distinct odd primes p < q with p + q = 2N
};

// Unconditional evaluation of the inequality rows the proof-by-contradiction
// derives. Rows indexed past min(s, h) have no defined operand pair and are
// counted as not-applicable rather than evaluated.
struct ChainAuditReport {
    EvenTarget target;
    bool top_relation_holds;                // 2N - X_1 == P_1
    std::vector<u64> forward_violations;    // j in [2, min(s,h)] with 2N - X_j > P_j
    std::vector<u64> backward_violations;   // j in [0, min(s,h)-1] with 2N - X_{s-j} < P_{h-j}
    u64 forward_not_applicable;             // forward rows beyond min(s,h), out of h
    u64 backward_not_applicable;            // backward rows beyond min(s,h), out of s
    bool floor_last_holds;                  // 2N - P_h >= X_s
    std::optional<bool> floor_prev_holds;   // 2N - P_{h-1} >= X_{s-1}, when s,h >= 2
    i64 h_minus_s_plus_1;
};

GSystem build_gsystem(const SieveTable& table, const Classification& classification);

PartitionCount count_partitions(const SieveTable& table, EvenTarget target);

// Counting variant that stops once `cap` partitions are found; returns
// min(r(2N), cap). Lets range scans decide r == 0 / r == 1 / r >= 2 cheaply.
u64 count_partitions_up_to(const SieveTable& table, EvenTarget target, u64 cap);

// True iff r_star >= 1, with early exit on the first witness pair.
bool has_distinct_odd_partition(const SieveTable& table, EvenTarget target);

ChainAuditReport audit_chain(const Classification& classification, const GSystem& gsystem);

}  // namespace gb
