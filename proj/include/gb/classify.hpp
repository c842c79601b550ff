#pragma once

#include <vector>

#include "gb/common.hpp"
#include "gb/sieve.hpp"

namespace gb {

// An even target 2N, N >= 2.
struct EvenTarget {
    u64 value;

    explicit EvenTarget(u64 v) : value(v) {
        if (v < 4 || (v & 1))
            throw std::invalid_argument("EvenTarget: value must be even and >= 4");
    }

    u64 half() const { return value / 2; }

    friend bool operator==(const EvenTarget&, const EvenTarget&) = default;
};

// The four sets attached to an even target 2N:
//   q_primes     primes dividing 2N, ascending
//   p_primes     primes < 2N-2 not dividing 2N, ascending (P_1 < ... < P_h)
//   x_composites composites < 2N-2 coprime to 2N, descending (X_1 > ... > X_s)
//   a_integers   union of the previous two, descending (a_1 > ... > a_{h+s})
struct Classification {
    EvenTarget target;
    std::vector<u64> q_primes;
    std::vector<u64> p_primes;
    std::vector<u64> x_composites;
    std::vector<u64> a_integers;

    u64 h() const { return p_primes.size(); }
    u64 s() const { return x_composites.size(); }
};

struct CountSummary {
    EvenTarget target;
    u64 h;
    u64 s;
    u64 phi_2n;
    u64 pi_2n_minus_3;
    u64 omega_odd;  // distinct odd prime divisors of 2N
};

// Materializes all four sets. Requires target.value <= table.limit(). The
// spf table is used to factor 2N when it is in range; otherwise 2N is
// factored by trial division against the sieve's primes.
Classification classify(const SieveTable& table, const SpfTable& spf, EvenTarget target);

struct TypePCounts {
    u64 h;
    u64 s;
};

// h and s by element-wise membership counting: the classify walk collapsed
// to word popcounts, never touching the pi/phi identities that fast_counts
// is built on.
TypePCounts count_type_p(const SieveTable& table, const SpfTable& spf, EvenTarget target);

// Cardinality of the a_integers set (h + s), same counting route.
u64 count_a_integers(const SieveTable& table, const SpfTable& spf, EvenTarget target);

// h and s without materializing anything:
//   h = pi(2N-3) - 1 - omega_odd(2N),  s = phi(2N) - 2 - h.
CountSummary fast_counts(const SieveTable& table, const SpfTable& spf, EvenTarget target);

// A prime P_r with N < P_r < 2N-2 and P_r not dividing 2N. Exists for every
// even 2N > 6; failure to find one means this program is broken and raises
// InternalInconsistencyError.
u64 bertrand_witness(const SieveTable& table, EvenTarget target);

}  // namespace gb
