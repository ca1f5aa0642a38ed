#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "jpcert/arith.hpp"

using namespace jpcert;

namespace {

// Brute-force inverse by exhaustive search over residues.
long inverse_oracle(long a, long c) {
    for (long b = 0; b < c; ++b)
        if (((a % c) * b % c + c) % c == 1 % c) return b;
    return -1;
}

// Kronecker oracle built literally from the definitional extension:
// Legendre symbol at odd primes by quadratic-residue search, (a|2) by the
// mod-8 table, (a|-1) by sign, multiplicative over the factorization of b.
int legendre_oracle(long a, long p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    for (long x = 1; x < p; ++x)
        if (x * x % p == a) return 1;
    return -1;
}

int kronecker_oracle(long a, long b) {
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (b < 0) {
        b = -b;
        if (a < 0) result = -result;
    }
    while (b % 2 == 0) {
        if (a % 2 == 0) return 0;
        long m = ((a % 8) + 8) % 8;
        result *= (m == 1 || m == 7) ? 1 : -1;
        b /= 2;
    }
    for (long p = 3; b > 1; p += 2) {
        while (b % p == 0) {
            result *= legendre_oracle(a, p);
            b /= p;
        }
    }
    return result;
}

}  // namespace

TEST_CASE("mod_inverse matches exhaustive search") {
    CHECK(mod_inverse(3, 7).value == 5);  // frozen from the oracle
    for (long c = 2; c <= 120; ++c)
        for (long a = 1; a < c; ++a) {
            if (std::gcd(a, c) != 1) continue;
            CHECK(mod_inverse(a, c).value == inverse_oracle(a, c));
        }
}

TEST_CASE("mod_inverse identity and failure cases") {
    for (long c : {2L, 3L, 10L, 101L, 1000003L}) CHECK(mod_inverse(1, c).value == 1);
    CHECK(mod_inverse(1, 1).value == 0);
    CHECK_THROWS_AS(mod_inverse(2, 4), NotCoprime);
    CHECK_THROWS_AS(mod_inverse(0, 5), NotCoprime);
}

TEST_CASE("mod_inverse property a*b == 1 mod c on large moduli") {
    for (long c : {9973L, 10000L}) {
        for (long a = 1; a < c; a += 97) {
            if (std::gcd(a, c) != 1) continue;
            Int b = mod_inverse(a, c).value;
            CHECK(mod_reduce(Int(a) * b, c) == 1);
        }
    }
}

TEST_CASE("kronecker_symbol fixed values") {
    CHECK(kronecker_symbol(-4, 3) == -1);  // brute force mod 3
    CHECK(kronecker_symbol(2, 7) == 1);    // 7 == 7 mod 8
    CHECK(kronecker_symbol(4, 6) == 0);    // shared factor 2
}

TEST_CASE("kronecker_symbol matches definitional oracle") {
    for (long b = -30; b <= 60; ++b)
        for (long a = -30; a <= 30; ++a)
            CHECK(kronecker_symbol(a, b) == kronecker_oracle(a, b));
}

TEST_CASE("kronecker multiplicativity and reciprocity") {
    for (long b = 1; b <= 60; ++b)
        for (long a1 = -12; a1 <= 12; ++a1)
            for (long a2 = -12; a2 <= 12; ++a2)
                CHECK(kronecker_symbol(Int(a1) * a2, b) ==
                      kronecker_symbol(a1, b) * kronecker_symbol(a2, b));
    // quadratic reciprocity for odd positive coprime pairs
    for (long a = 1; a <= 51; a += 2)
        for (long b = 1; b <= 51; b += 2) {
            if (std::gcd(a, b) != 1) continue;
            int sign = ((a - 1) / 2 * ((b - 1) / 2)) % 2 == 0 ? 1 : -1;
            CHECK(kronecker_symbol(a, b) * kronecker_symbol(b, a) == sign);
        }
}

TEST_CASE("epsilon_factor definition and identities") {
    CHECK(epsilon_factor(5).i_power == 0);
    CHECK(epsilon_factor(7).i_power == 1);
    CHECK_THROWS_AS(epsilon_factor(4), EvenInput);
    for (long d = -99; d <= 99; d += 2) {
        int e = epsilon_factor(d).i_power;
        // eps^2 = (-4|d): i^(2e) = (-1)^e
        CHECK((e == 0 ? 1 : -1) == kronecker_symbol(-4, d));
        // eps^4 = 1 holds trivially with e in {0,1}
        CHECK((e == 0 || e == 1));
    }
}

TEST_CASE("divisor_stats") {
    auto st = divisor_stats(12);
    CHECK(st.omega == 2);
    CHECK(st.sigma0 == 6);
    CHECK(st.divisors == std::vector<Int>{1, 2, 3, 4, 6, 12});

    auto one = divisor_stats(1);
    CHECK(one.omega == 0);
    CHECK(one.sigma0 == 1);

    auto st30 = divisor_stats(30);  // trial-division oracle: 2*3*5
    CHECK(st30.omega == 3);
    CHECK(st30.sigma0 == 8);

    for (long v = 1; v <= 400; ++v) {
        auto s = divisor_stats(v);
        long count = 0;
        for (long d = 1; d <= v; ++d)
            if (v % d == 0) ++count;
        CHECK(s.sigma0 == count);
        for (const Int& d : s.divisors) CHECK(Int(v) % d == 0);
        CHECK(s.sigma0 == static_cast<long>(s.divisors.size()));
    }
}

TEST_CASE("euler_phi against direct count") {
    for (long c = 1; c <= 300; ++c) {
        long count = 0;
        for (long a = 1; a <= c; ++a)
            if (std::gcd(a, c) == 1) ++count;
        CHECK(euler_phi(c) == count);
    }
}
