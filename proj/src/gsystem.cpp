#include "gb/gsystem.hpp"

#include <algorithm>

namespace gb {

GSystem build_gsystem(const SieveTable& table, const Classification& classification) {
    const u64 two_n = classification.target.value;
    if (classification.h() == 0)
        throw EmptySystemError("build_gsystem: no primes of type P for 2N=" +
                               std::to_string(two_n));

    GSystem out{classification.target, {}};
    out.equations.reserve(classification.h());
    for (u64 j = 0; j < classification.h(); ++j) {
        const u64 p = classification.p_primes[j];
        const u64 complement = two_n - p;
        out.equations.push_back({j + 1, p, complement, table.is_prime(complement)});
    }
    return out;
}

PartitionCount count_partitions(const SieveTable& table, EvenTarget target) {
    const u64 two_n = target.value;
    if (two_n > table.limit())
        throw std::out_of_range("count_partitions: target exceeds sieve limit");

    const u64 n = target.half();
    u64 r = 0, r_star = 0;
    for (u32 p : table.primes()) {
        if (p > n) break;
        if (!table.is_prime(two_n - p)) continue;
        ++r;
        if (p >= 3 && p < n) ++r_star;  // q = 2N - p is then an odd prime > p
    }
    return PartitionCount{target, r, r_star};
}

u64 count_partitions_up_to(const SieveTable& table, EvenTarget target, u64 cap) {
    const u64 two_n = target.value;
    if (two_n > table.limit())
        throw std::out_of_range("count_partitions_up_to: target exceeds sieve limit");

    const u64 n = target.half();
    u64 r = 0;
    for (u32 p : table.primes()) {
        if (p > n || r == cap) break;
        if (table.is_prime(two_n - p)) ++r;
    }
    return r;
}

bool has_distinct_odd_partition(const SieveTable& table, EvenTarget target) {
    const u64 two_n = target.value;
    if (two_n > table.limit())
        throw std::out_of_range("has_distinct_odd_partition: target exceeds sieve limit");

    const u64 n = target.half();
    const auto& primes = table.primes();
    for (std::size_t i = 1; i < primes.size(); ++i) {  // skip 2
        const u64 p = primes[i];
        if (p >= n) break;  // p == n would pair a prime with itself
        if (table.is_prime(two_n - p)) return true;
    }
    return false;
}

ChainAuditReport audit_chain(const Classification& classification, const GSystem& gsystem) {
    const u64 two_n = classification.target.value;
    if (gsystem.target.value != two_n)
        throw std::invalid_argument("audit_chain: classification and gsystem targets differ");
    const u64 h = classification.h();
    const u64 s = classification.s();
    if (s == 0)
        throw AuditNotApplicableError("audit_chain: no composite of type P for 2N=" +
                                      std::to_string(two_n));
    if (h == 0)
        throw AuditNotApplicableError("audit_chain: no prime of type P for 2N=" +
                                      std::to_string(two_n));

    const auto& P = classification.p_primes;
    const auto& X = classification.x_composites;
    const u64 m = std::min(s, h);

    ChainAuditReport report{classification.target, false, {}, {}, 0, 0, false, {}, 0};
    report.top_relation_holds = (two_n - X[0] == P[0]);

    for (u64 j = 2; j <= m; ++j)
        if (two_n - X[j - 1] > P[j - 1]) report.forward_violations.push_back(j);
    report.forward_not_applicable = h - m;

    for (u64 j = 0; j + 1 <= m; ++j)
        if (two_n - X[s - 1 - j] < P[h - 1 - j]) report.backward_violations.push_back(j);
    report.backward_not_applicable = s - m;

    report.floor_last_holds = (two_n - P[h - 1] >= X[s - 1]);
    if (s >= 2 && h >= 2)
        report.floor_prev_holds = (two_n - P[h - 2] >= X[s - 2]);

    report.h_minus_s_plus_1 = static_cast<i64>(h) - static_cast<i64>(s) + 1;
    return report;
}

}  // namespace gb
