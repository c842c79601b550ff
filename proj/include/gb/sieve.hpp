#pragma once

#include <bit>
#include <vector>

#include "gb/common.hpp"

namespace gb {

// Primality table over [0, limit], odd numbers only (one bit per odd integer,
// 2 special-cased). Built with a segmented sieve so the construction working
// set per segment stays bounded and cache-resident regardless of limit.
// Immutable after construction; safe to share across threads.
class SieveTable {
public:
    struct Options {
        // Odd-number flags sieved per segment. Rounded up to a multiple of 64.
        u64 segment_flags = u64(1) << 20;
        // Upper bound on the table's total allocation (flags + rank index +
        // prime list). Exceeding it raises ResourceLimitError.
        u64 memory_budget_bytes = u64(2) << 30;
    };

    static SieveTable build(u64 limit);
    static SieveTable build(u64 limit, const Options& options);

    u64 limit() const { return limit_; }

    // True iff n is prime. n must be <= limit(). Hot path, kept inline: the
    // partition counters and classifiers call this billions of times per scan.
    bool is_prime(u64 n) const {
        if (n > limit_) throw std::out_of_range("SieveTable::is_prime: n > limit");
        if (n < 2) return false;
        if ((n & 1) == 0) return n == 2;
        return odd_bit(n);
    }

    // Number of primes <= x. x must be <= limit(). O(1) via per-word ranks.
    u64 pi(u64 x) const {
        if (x > limit_) throw std::out_of_range("SieveTable::pi: x > limit");
        if (x < 2) return 0;
        if (x == 2) return 1;
        const u64 i = ((x & 1) ? x : x - 1) >> 1;  // bit of largest odd <= x
        const u64 w = i >> 6;
        const u64 b = i & 63;
        const u64 mask = b == 63 ? ~u64(0) : (u64(1) << (b + 1)) - 1;
        return 1 + word_rank_[w] + std::popcount(bits_[w] & mask);
    }

    // Largest prime <= x, or 0 if none (x < 2). x must be <= limit().
    u64 prev_prime(u64 x) const;

    // All primes <= limit, ascending.
    const std::vector<u32>& primes() const { return primes_; }

    // Raw flag words: bit i of word i>>6 is set iff the odd integer 2i+1 is
    // prime. Exposed so bulk consumers (classification counting) can combine
    // whole words instead of probing one integer at a time.
    const std::vector<u64>& odd_prime_words() const { return bits_; }

private:
    SieveTable() = default;

    bool odd_bit(u64 n) const {  // n odd, 1 <= n <= limit
        u64 i = n >> 1;
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }

    u64 limit_ = 0;
    std::vector<u64> bits_;      // bit i set <=> 2i+1 is prime
    std::vector<u32> word_rank_; // word_rank_[w] = count of odd primes in words [0, w)
    std::vector<u32> primes_;
};

// Smallest-prime-factor table over [2, limit]. spf(p) == p exactly for primes.
class SpfTable {
public:
    static SpfTable build(u64 limit, u64 memory_budget_bytes = u64(2) << 30);

    u64 limit() const { return limit_; }

    // Smallest prime factor of n, 2 <= n <= limit().
    u64 spf(u64 n) const;

private:
    SpfTable() = default;

    u64 limit_ = 0;
    std::vector<u32> spf_;
};

struct PrimePower {
    u64 prime;
    u32 exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete prime factorization, primes strictly ascending.
struct Factorization {
    u64 base = 0;
    std::vector<PrimePower> factors;

    u64 product() const;
    u64 distinct_odd_primes() const;
};

Factorization factorize(const SpfTable& spf, u64 n);
// Trial division against the table's primes; works for any 2 <= n <= table.limit().
Factorization factorize(const SieveTable& table, u64 n);

u64 totient(const SpfTable& spf, u64 n);
u64 totient(const SieveTable& table, u64 n);
u64 totient(const Factorization& f);

}  // namespace gb
