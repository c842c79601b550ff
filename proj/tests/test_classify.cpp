#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gb/classify.hpp"
#include "oracles.hpp"

using namespace gb;

namespace {

struct Fixture {
    SieveTable sieve = SieveTable::build(200'000);
    SpfTable spf = SpfTable::build(200'000);
};

const Fixture& fixture() {
    static Fixture f;
    return f;
}

void check_against_oracle(u64 two_n) {
    const auto& f = fixture();
    const Classification got = classify(f.sieve, f.spf, EvenTarget(two_n));
    const oracle::Classification want = oracle::classify(two_n);
    CAPTURE(two_n);
    REQUIRE(got.q_primes == want.q_primes);
    REQUIRE(got.p_primes == want.p_primes);
    REQUIRE(got.x_composites == want.x_composites);
    REQUIRE(got.a_integers == want.a_integers);
}

}  // namespace

TEST_CASE("EvenTarget validation") {
    CHECK_THROWS_AS(EvenTarget(3), std::invalid_argument);
    CHECK_THROWS_AS(EvenTarget(2), std::invalid_argument);
    CHECK_THROWS_AS(EvenTarget(7), std::invalid_argument);
    CHECK(EvenTarget(4).half() == 2);
    CHECK(EvenTarget(20).half() == 10);
}

TEST_CASE("classify matches the worked examples") {
    const auto& f = fixture();

    const Classification c20 = classify(f.sieve, f.spf, EvenTarget(20));
    CHECK(c20.q_primes == std::vector<u64>{2, 5});
    CHECK(c20.p_primes == std::vector<u64>{3, 7, 11, 13, 17});
    CHECK(c20.x_composites == std::vector<u64>{9});
    CHECK(c20.a_integers == std::vector<u64>{17, 13, 11, 9, 7, 3});
    CHECK(c20.h() == 5);
    CHECK(c20.s() == 1);

    const Classification c8 = classify(f.sieve, f.spf, EvenTarget(8));
    CHECK(c8.q_primes == std::vector<u64>{2});
    CHECK(c8.p_primes == std::vector<u64>{3, 5});
    CHECK(c8.x_composites.empty());

    const Classification c22 = classify(f.sieve, f.spf, EvenTarget(22));
    CHECK(c22.p_primes == std::vector<u64>{3, 5, 7, 13, 17, 19});
    CHECK(c22.x_composites == std::vector<u64>{15, 9});
}

TEST_CASE("classify at the degenerate targets 4 and 6") {
    const auto& f = fixture();

    // No integer of type P exists below 2N-2 here, but the Q primes (the
    // divisors of 2N) still do; h = s = 0 and phi(2N) - 2 = 0 both hold.
    const Classification c4 = classify(f.sieve, f.spf, EvenTarget(4));
    CHECK(c4.q_primes == std::vector<u64>{2});
    CHECK(c4.p_primes.empty());
    CHECK(c4.x_composites.empty());
    CHECK(c4.a_integers.empty());

    const Classification c6 = classify(f.sieve, f.spf, EvenTarget(6));
    CHECK(c6.q_primes == std::vector<u64>{2, 3});
    CHECK(c6.h() == 0);
    CHECK(c6.s() == 0);
}

TEST_CASE("classify range errors") {
    const SieveTable tiny = SieveTable::build(100);
    const SpfTable tiny_spf = SpfTable::build(100);
    CHECK_THROWS_AS(classify(tiny, tiny_spf, EvenTarget(102)), std::out_of_range);
    CHECK_THROWS_AS(fast_counts(tiny, tiny_spf, EvenTarget(102)), std::out_of_range);
    CHECK_THROWS_AS(count_a_integers(tiny, tiny_spf, EvenTarget(102)), std::out_of_range);
}

TEST_CASE("classify agrees with the brute-force oracle") {
    for (u64 two_n = 4; two_n <= 600; two_n += 2) check_against_oracle(two_n);

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<u64> dist(301, 5'000);
    for (int i = 0; i < 60; ++i) check_against_oracle(dist(rng) * 2);
}

TEST_CASE("classify works when 2N exceeds the spf table") {
    const auto& f = fixture();
    const SpfTable small_spf = SpfTable::build(50);  // forces trial-division fallback
    for (u64 two_n : {20ull, 22ull, 9240ull, 199'998ull}) {
        const Classification a = classify(f.sieve, f.spf, EvenTarget(two_n));
        const Classification b = classify(f.sieve, small_spf, EvenTarget(two_n));
        CAPTURE(two_n);
        REQUIRE(a.q_primes == b.q_primes);
        REQUIRE(a.a_integers == b.a_integers);
        REQUIRE(fast_counts(f.sieve, f.spf, EvenTarget(two_n)).h ==
                fast_counts(f.sieve, small_spf, EvenTarget(two_n)).h);
    }
}

TEST_CASE("fast_counts worked examples") {
    const auto& f = fixture();

    const CountSummary c20 = fast_counts(f.sieve, f.spf, EvenTarget(20));
    CHECK(c20.h == 5);
    CHECK(c20.s == 1);
    CHECK(c20.phi_2n == 8);
    CHECK(c20.pi_2n_minus_3 == 7);
    CHECK(c20.omega_odd == 1);

    const CountSummary c4 = fast_counts(f.sieve, f.spf, EvenTarget(4));
    CHECK(c4.h == 0);
    CHECK(c4.s == 0);

    const CountSummary c6 = fast_counts(f.sieve, f.spf, EvenTarget(6));
    CHECK(c6.h == 0);
    CHECK(c6.s == 0);
}

TEST_CASE("classification identities over a dense range") {
    const auto& f = fixture();
    std::string failure;

    for (u64 two_n = 8; two_n <= 20'000 && failure.empty(); two_n += 2) {
        const EvenTarget t(two_n);
        const Classification cls = classify(f.sieve, f.spf, t);
        const CountSummary counts = fast_counts(f.sieve, f.spf, t);
        const u64 h = cls.h(), s = cls.s();
        const auto& A = cls.a_integers;

        auto fail = [&](const char* what) {
            failure = std::string(what) + " at 2N=" + std::to_string(two_n);
        };

        // count-only paths agree with the materialization
        if (counts.h != h || counts.s != s) fail("fast_counts mismatch");
        if (count_a_integers(f.sieve, f.spf, t) != h + s) fail("count_a_integers mismatch");

        // card A = phi(2N) - 2
        if (h + s != totient(f.spf, two_n) - 2) fail("card A != phi - 2");

        // membership: a in A <=> 3 <= a <= 2N-3 and gcd(a, 2N) = 1
        if (two_n <= 4'000) {
            u64 expected_card = 0;
            std::vector<u64> expected;
            for (u64 a = two_n - 3; a >= 3; --a)
                if (std::gcd(a, two_n) == 1) {
                    ++expected_card;
                    expected.push_back(a);
                }
            if (A != expected) fail("membership characterization");
            (void)expected_card;
        }

        // A is sorted descending and the involution a -> 2N - a maps A onto A
        if (!std::is_sorted(A.rbegin(), A.rend())) fail("A not descending");
        for (std::size_t i = 0; i < A.size(); ++i)
            if (A[i] + A[A.size() - 1 - i] != two_n) {
                fail("involution broken");
                break;
            }

        // P and Q partition the primes below 2N-2
        u64 q_below = 0;
        for (u64 q : cls.q_primes)
            if (q < two_n - 2) ++q_below;
        if (h + q_below != f.sieve.pi(two_n - 3)) fail("P/Q partition count");

        if (s >= 1) {
            if (cls.x_composites.back() != cls.p_primes[0] * cls.p_primes[0])
                fail("X_s != P_1^2");
            if (!std::is_sorted(cls.x_composites.rbegin(), cls.x_composites.rend()))
                fail("X not descending");
        }
        if (h >= 1 && A[0] != two_n - cls.p_primes[0]) fail("a_1 != 2N - P_1");
    }
    CHECK_MESSAGE(failure.empty(), failure);
}

TEST_CASE("classify and fast_counts agree at 3e6") {
    const SieveTable sieve = SieveTable::build(3'000'000);
    const SpfTable spf = SpfTable::build(1'000);  // forces fallback factorization
    const EvenTarget t(3'000'000);

    const CountSummary counts = fast_counts(sieve, spf, t);
    CHECK(counts.phi_2n == 800'000);
    CHECK(counts.omega_odd == 2);
    CHECK(counts.h == 216'812);
    CHECK(counts.s == 583'186);
    CHECK(counts.s > counts.h);

    const Classification cls = classify(sieve, spf, t);
    CHECK(cls.h() == counts.h);
    CHECK(cls.s() == counts.s);
    CHECK(cls.a_integers.size() == counts.phi_2n - 2);
}

TEST_CASE("bertrand witness") {
    const auto& f = fixture();

    CHECK(bertrand_witness(f.sieve, EvenTarget(8)) == 5);

    const u64 w20 = bertrand_witness(f.sieve, EvenTarget(20));
    CHECK((w20 == 11 || w20 == 13 || w20 == 17));

    const u64 w22 = bertrand_witness(f.sieve, EvenTarget(22));
    CHECK((w22 == 13 || w22 == 17 || w22 == 19));
    CHECK(22 % w22 != 0);

    CHECK_THROWS_AS(bertrand_witness(f.sieve, EvenTarget(6)), std::invalid_argument);
    CHECK_THROWS_AS(bertrand_witness(f.sieve, EvenTarget(4)), std::invalid_argument);

    for (u64 two_n = 8; two_n <= 100'000; two_n += 2) {
        const u64 w = bertrand_witness(f.sieve, EvenTarget(two_n));
        const bool ok = w > two_n / 2 && w < two_n - 2 && two_n % w != 0;
        if (!ok) {
            CAPTURE(two_n);
            REQUIRE(ok);
        }
    }
}

TEST_CASE("h >= 2 for all even 2N > 6 up to 1e5") {
    const auto& f = fixture();
    for (u64 two_n = 8; two_n <= 100'000; two_n += 2) {
        const CountSummary c = fast_counts(f.sieve, f.spf, EvenTarget(two_n));
        if (c.h < 2) {
            CAPTURE(two_n);
            REQUIRE(c.h >= 2);
        }
    }
    CHECK(true);
}
