#include "gb/classify.hpp"

#include <algorithm>
#include <bit>

namespace gb {
namespace {

Factorization factor_target(const SieveTable& table, const SpfTable& spf, u64 n) {
    return n <= spf.limit() ? factorize(spf, n) : factorize(table, n);
}

// Bitmap over the odd integers (bit i covers 2i+1, same layout as the sieve)
// with a set bit on every odd multiple of an odd prime divisor of 2N. An odd
// a is coprime to 2N exactly when its bit is clear.
struct CoprimeBitmap {
    std::vector<u64>& words;

    CoprimeBitmap(std::vector<u64>& scratch, u64 two_n, const Factorization& f)
        : words(scratch) {
        const u64 nbits = two_n >> 1;
        words.assign((nbits + 63) >> 6, 0);
        for (const auto& pe : f.factors) {
            const u64 q = pe.prime;
            if (q == 2) continue;
            for (u64 m = q; m < two_n; m += 2 * q) {
                const u64 i = m >> 1;
                words[i >> 6] |= u64(1) << (i & 63);
            }
        }
    }
};

std::vector<u64>& scratch_words() {
    thread_local std::vector<u64> words;
    return words;
}

// The A members live at bit indices [1, N-2] (odd a in [3, 2N-3]). This
// returns the coprime survivors of one word, masked to that range.
u64 live_mask(const std::vector<u64>& marked, u64 w, u64 lo_bit, u64 hi_bit) {
    u64 live = ~marked[w];
    if (w == lo_bit >> 6) live &= ~u64(0) << (lo_bit & 63);
    if (w == hi_bit >> 6 && (hi_bit & 63) != 63)
        live &= (u64(1) << ((hi_bit & 63) + 1)) - 1;
    return live;
}

}  // namespace

Classification classify(const SieveTable& table, const SpfTable& spf, EvenTarget target) {
    const u64 two_n = target.value;
    if (two_n > table.limit())
        throw std::out_of_range("classify: target exceeds sieve limit");

    const Factorization f = factor_target(table, spf, two_n);

    Classification out{target, {}, {}, {}, {}};
    out.q_primes.reserve(f.factors.size());
    for (const auto& pe : f.factors) out.q_primes.push_back(pe.prime);

    if (two_n <= 6) return out;  // no integer of type P below 2N-2

    const u64 phi = totient(f);
    const u64 h = table.pi(two_n - 3) - 1 - f.distinct_odd_primes();
    out.a_integers.reserve(phi - 2);
    out.p_primes.reserve(h);
    out.x_composites.reserve(phi - 2 - h);

    const CoprimeBitmap marked(scratch_words(), two_n, f);
    const auto& prime_words = table.odd_prime_words();
    const u64 lo = 1, hi = (two_n >> 1) - 2;

    // Descending walk so A and X come out largest-first, P gets reversed.
    for (u64 w = (hi >> 6) + 1; w-- > (lo >> 6);) {
        u64 live = live_mask(marked.words, w, lo, hi);
        const u64 primes_here = prime_words[w];
        while (live) {
            const u64 b = 63 - static_cast<u64>(std::countl_zero(live));
            live &= ~(u64(1) << b);
            const u64 a = 2 * ((w << 6) + b) + 1;
            out.a_integers.push_back(a);
            if ((primes_here >> b) & 1)
                out.p_primes.push_back(a);
            else
                out.x_composites.push_back(a);
        }
    }
    std::reverse(out.p_primes.begin(), out.p_primes.end());
    return out;
}

TypePCounts count_type_p(const SieveTable& table, const SpfTable& spf, EvenTarget target) {
    const u64 two_n = target.value;
    if (two_n > table.limit())
        throw std::out_of_range("count_type_p: target exceeds sieve limit");
    if (two_n <= 6) return TypePCounts{0, 0};

    const Factorization f = factor_target(table, spf, two_n);
    const CoprimeBitmap marked(scratch_words(), two_n, f);
    const auto& prime_words = table.odd_prime_words();
    const u64 lo = 1, hi = (two_n >> 1) - 2;

    u64 total = 0, prime_count = 0;
    for (u64 w = lo >> 6; w <= hi >> 6; ++w) {
        const u64 live = live_mask(marked.words, w, lo, hi);
        total += std::popcount(live);
        prime_count += std::popcount(live & prime_words[w]);
    }
    return TypePCounts{prime_count, total - prime_count};
}

u64 count_a_integers(const SieveTable& table, const SpfTable& spf, EvenTarget target) {
    const TypePCounts counts = count_type_p(table, spf, target);
    return counts.h + counts.s;
}

CountSummary fast_counts(const SieveTable& table, const SpfTable& spf, EvenTarget target) {
    const u64 two_n = target.value;
    if (two_n > table.limit())
        throw std::out_of_range("fast_counts: target exceeds sieve limit");

    const Factorization f = factor_target(table, spf, two_n);
    const u64 phi = totient(f);
    const u64 omega_odd = f.distinct_odd_primes();

    // pi(2N-3) counts 2 and every odd prime divisor of 2N once 2N >= 6;
    // for 2N = 4 there are no primes below 2N-2 at all.
    const u64 pi_val = table.pi(two_n - 3);
    const u64 h = two_n == 4 ? 0 : pi_val - 1 - omega_odd;
    const u64 s = phi - 2 - h;
    return CountSummary{target, h, s, phi, pi_val, omega_odd};
}

u64 bertrand_witness(const SieveTable& table, EvenTarget target) {
    const u64 two_n = target.value;
    if (two_n <= 6)
        throw std::invalid_argument("bertrand_witness: requires 2N > 6");
    if (two_n > table.limit())
        throw std::out_of_range("bertrand_witness: target exceeds sieve limit");

    const u64 p = table.prev_prime(two_n - 3);
    if (p > target.half() && two_n % p != 0) return p;
    throw InternalInconsistencyError(
        "bertrand_witness: no prime in (N, 2N-2) for 2N=" + std::to_string(two_n) +
        "; this contradicts Bertrand's postulate and indicates a sieve bug");
}

}  // namespace gb
