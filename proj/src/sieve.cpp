#include "gb/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace gb {
namespace {

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Plain odd-only sieve; used for the base primes (up to sqrt(limit)).
std::vector<u32> small_odd_primes(u64 up_to) {
    std::vector<u32> out;
    if (up_to < 3) return out;
    std::vector<char> composite((up_to + 1) / 2, 0);  // index i -> 2i+1
    for (u64 n = 3; n * n <= up_to; n += 2) {
        if (composite[n >> 1]) continue;
        for (u64 m = n * n; m <= up_to; m += 2 * n) composite[m >> 1] = 1;
    }
    for (u64 n = 3; n <= up_to; n += 2)
        if (!composite[n >> 1]) out.push_back(static_cast<u32>(n));
    return out;
}

}  // namespace

SieveTable SieveTable::build(u64 limit) { return build(limit, Options{}); }

SieveTable SieveTable::build(u64 limit, const Options& options) {
    if (limit < 3) throw std::invalid_argument("SieveTable: limit must be >= 3");
    if (limit > std::numeric_limits<u32>::max())
        throw std::invalid_argument("SieveTable: limit must fit in 32 bits");

    const u64 nbits = (limit + 1) >> 1;  // flags for odd 1..limit
    const u64 nwords = (nbits + 63) >> 6;
    const double pi_estimate = limit < 17 ? 8.0 : 1.26 * double(limit) / std::log(double(limit));
    const u64 estimated_bytes =
        nwords * 8 + nwords * 4 + static_cast<u64>(pi_estimate) * 4;
    if (estimated_bytes > options.memory_budget_bytes)
        throw ResourceLimitError("SieveTable: limit " + std::to_string(limit) +
                                 " needs ~" + std::to_string(estimated_bytes) +
                                 " bytes, budget is " +
                                 std::to_string(options.memory_budget_bytes));

    SieveTable t;
    t.limit_ = limit;
    t.bits_.assign(nwords, 0);

    const std::vector<u32> base = small_odd_primes(isqrt(limit));
    const u64 segment_words = std::max<u64>(1, (options.segment_flags + 63) >> 6);

    for (u64 word_lo = 0; word_lo < nwords; word_lo += segment_words) {
        const u64 word_hi = std::min(nwords, word_lo + segment_words);
        const u64 bit_lo = word_lo << 6;
        const u64 bit_hi = std::min(nbits, word_hi << 6);
        const u64 value_lo = 2 * bit_lo + 1;       // first odd in segment
        const u64 value_hi = 2 * (bit_hi - 1) + 1; // last odd in segment

        std::fill(t.bits_.begin() + word_lo, t.bits_.begin() + word_hi, ~u64(0));

        for (u32 p : base) {
            u64 start = u64(p) * p;
            if (start > value_hi) break;
            if (start < value_lo) {
                u64 q = (value_lo + p - 1) / p;
                q |= 1;  // odd multiplier -> odd multiple
                start = q * p;
                if (start > value_hi) continue;
            }
            for (u64 i = start >> 1; i < bit_hi; i += p)
                t.bits_[i >> 6] &= ~(u64(1) << (i & 63));
        }
    }

    t.bits_[0] &= ~u64(1);  // 1 is not prime
    // Clear flag positions past the limit so word-level counts stay exact.
    if (nbits & 63) t.bits_[nwords - 1] &= (u64(1) << (nbits & 63)) - 1;

    t.word_rank_.assign(nwords + 1, 0);
    u64 running = 0;
    for (u64 w = 0; w < nwords; ++w) {
        t.word_rank_[w] = static_cast<u32>(running);
        running += std::popcount(t.bits_[w]);
    }
    t.word_rank_[nwords] = static_cast<u32>(running);

    t.primes_.reserve(running + 1);
    t.primes_.push_back(2);
    for (u64 w = 0; w < nwords; ++w) {
        u64 word = t.bits_[w];
        while (word) {
            u64 b = static_cast<u64>(std::countr_zero(word));
            t.primes_.push_back(static_cast<u32>(2 * ((w << 6) + b) + 1));
            word &= word - 1;
        }
    }
    return t;
}

u64 SieveTable::prev_prime(u64 x) const {
    if (x > limit_) throw std::out_of_range("SieveTable::prev_prime: x > limit");
    if (x < 2) return 0;
    if (x == 2) return 2;
    u64 i = ((x | 1) == x ? x : x - 1) >> 1;
    u64 w = i >> 6;
    u64 b = i & 63;
    u64 word = bits_[w] & (b == 63 ? ~u64(0) : (u64(1) << (b + 1)) - 1);
    for (;;) {
        if (word) {
            u64 top = 63 - static_cast<u64>(std::countl_zero(word));
            return 2 * ((w << 6) + top) + 1;
        }
        if (w == 0) return 2;
        word = bits_[--w];
    }
}

SpfTable SpfTable::build(u64 limit, u64 memory_budget_bytes) {
    if (limit < 2) throw std::invalid_argument("SpfTable: limit must be >= 2");
    if (limit > std::numeric_limits<u32>::max())
        throw std::invalid_argument("SpfTable: limit must fit in 32 bits");
    if ((limit + 1) * 4 > memory_budget_bytes)
        throw ResourceLimitError("SpfTable: limit " + std::to_string(limit) +
                                 " needs " + std::to_string((limit + 1) * 4) +
                                 " bytes, budget is " + std::to_string(memory_budget_bytes));

    SpfTable t;
    t.limit_ = limit;
    t.spf_.assign(limit + 1, 0);
    for (u64 n = 2; n <= limit; ++n) {
        if (t.spf_[n] != 0) continue;
        for (u64 m = n; m <= limit; m += n)
            if (t.spf_[m] == 0) t.spf_[m] = static_cast<u32>(n);
    }
    return t;
}

u64 SpfTable::spf(u64 n) const {
    if (n > limit_) throw std::out_of_range("SpfTable::spf: n > limit");
    if (n < 2) throw std::invalid_argument("SpfTable::spf: n must be >= 2");
    return spf_[n];
}

u64 Factorization::product() const {
    u64 p = 1;
    for (const auto& f : factors)
        for (u32 e = 0; e < f.exponent; ++e) p *= f.prime;
    return p;
}

u64 Factorization::distinct_odd_primes() const {
    u64 count = 0;
    for (const auto& f : factors)
        if (f.prime != 2) ++count;
    return count;
}

Factorization factorize(const SpfTable& spf, u64 n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    if (n > spf.limit()) throw std::out_of_range("factorize: n > spf limit");
    Factorization out;
    out.base = n;
    while (n > 1) {
        const u64 p = spf.spf(n);
        u32 e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    return out;
}

Factorization factorize(const SieveTable& table, u64 n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    if (n > table.limit()) throw std::out_of_range("factorize: n > sieve limit");
    Factorization out;
    out.base = n;
    for (u32 p : table.primes()) {
        if (u64(p) * p > n) break;
        if (n % p != 0) continue;
        u32 e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    if (n > 1) out.factors.push_back({n, 1});  // leftover cofactor is prime
    return out;
}

u64 totient(const Factorization& f) {
    u64 phi = 1;
    for (const auto& pe : f.factors) {
        for (u32 e = 1; e < pe.exponent; ++e) phi *= pe.prime;
        phi *= pe.prime - 1;
    }
    return phi;
}

u64 totient(const SpfTable& spf, u64 n) {
    if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
    if (n == 1) return 1;
    return totient(factorize(spf, n));
}

u64 totient(const SieveTable& table, u64 n) {
    if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
    if (n == 1) return 1;
    return totient(factorize(table, n));
}

}  // namespace gb
