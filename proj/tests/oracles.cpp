#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<char> prime_flags(u64 limit) {
    std::vector<char> flags(limit + 1);
    for (u64 n = 0; n <= limit; ++n) flags[n] = is_prime(n) ? 1 : 0;
    return flags;
}

std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 gcd_count_totient(u64 n) {
    u64 count = 0;
    for (u64 k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

std::vector<u64> totient_table(u64 limit) {
    // Linear sieve: phi(p) = p-1; phi(ip) = phi(i)*p if p | i, else phi(i)*(p-1).
    std::vector<u64> phi(limit + 1, 0);
    std::vector<u64> primes;
    if (limit >= 1) phi[1] = 1;
    for (u64 i = 2; i <= limit; ++i) {
        if (phi[i] == 0) {
            phi[i] = i - 1;
            primes.push_back(i);
        }
        for (u64 p : primes) {
            if (i * p > limit) break;
            if (i % p == 0) {
                phi[i * p] = phi[i] * p;
                break;
            }
            phi[i * p] = phi[i] * (p - 1);
        }
    }
    return phi;
}

Classification classify(u64 two_n) {
    Classification cls;
    for (u64 p = 2; p < two_n; ++p)
        if (is_prime(p) && two_n % p == 0) cls.q_primes.push_back(p);

    for (u64 a = two_n - 3; a >= 3 && two_n > 6; --a) {
        if (is_prime(a)) {
            if (two_n % a != 0) {
                cls.p_primes.push_back(a);
                cls.a_integers.push_back(a);
            }
            continue;
        }
        const auto factors = distinct_prime_factors(a);
        if (factors.empty()) continue;  // a == 1
        bool all_type_p = true;
        for (u64 q : factors)
            if (two_n % q == 0 || q >= two_n - 2) all_type_p = false;
        if (all_type_p) {
            cls.x_composites.push_back(a);
            cls.a_integers.push_back(a);
        }
    }
    std::reverse(cls.p_primes.begin(), cls.p_primes.end());
    return cls;
}

PartitionCount count_partitions(u64 two_n) {
    PartitionCount pc{0, 0};
    for (u64 p = 2; p <= two_n / 2; ++p) {
        const u64 q = two_n - p;
        if (!is_prime(p) || !is_prime(q)) continue;
        ++pc.r;
        if (p >= 3 && p != q) ++pc.r_star;
    }
    return pc;
}

std::vector<GEquation> gsystem(const Classification& cls, u64 two_n) {
    std::vector<GEquation> out;
    for (u64 p : cls.p_primes) out.push_back({p, two_n - p, is_prime(two_n - p)});
    return out;
}

ChainAudit audit(const Classification& cls, u64 two_n) {
    const u64 h = cls.p_primes.size();
    const u64 s = cls.x_composites.size();
    const u64 m = std::min(s, h);
    ChainAudit out{};

    out.top_relation_holds = (two_n - cls.x_composites.at(0) == cls.p_primes.at(0));
    for (u64 j = 2; j <= m; ++j)
        if (two_n - cls.x_composites.at(j - 1) > cls.p_primes.at(j - 1))
            out.forward_violations.push_back(j);
    for (u64 j = 0; j + 1 <= m; ++j)
        if (two_n - cls.x_composites.at(s - 1 - j) < cls.p_primes.at(h - 1 - j))
            out.backward_violations.push_back(j);

    out.floor_last_holds = (two_n - cls.p_primes.at(h - 1) >= cls.x_composites.at(s - 1));
    out.floor_prev_evaluated = (s >= 2 && h >= 2);
    out.floor_prev_holds =
        out.floor_prev_evaluated &&
        (two_n - cls.p_primes.at(h - 2) >= cls.x_composites.at(s - 2));
    out.h_minus_s_plus_1 = static_cast<i64>(h) - static_cast<i64>(s) + 1;
    return out;
}

}  // namespace oracle
