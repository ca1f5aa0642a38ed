#include "jpcert/arith.hpp"

#include <algorithm>

namespace jpcert {

Int mod_reduce(const Int& a, const Int& c) {
    Int r = a % c;
    if (r < 0) r += c;
    return r;
}

UnitResidue mod_inverse(const Int& a, const Int& c) {
    if (c < 1) throw DomainError("mod_inverse: modulus must be positive");
    // extended Euclid on (a mod c, c)
    Int r0 = mod_reduce(a, c), r1 = c;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw NotCoprime("mod_inverse: arguments share a factor");
    return UnitResidue{mod_reduce(s0, c), c};
}

int kronecker_symbol(const Int& a_in, const Int& b_in) {
    Int a = a_in, b = b_in;
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    // (a|2) table by a mod 8
    auto sym2 = [](const Int& x) -> int {
        if (x % 2 == 0) return 0;
        Int m = mod_reduce(x, 8);
        return (m == 1 || m == 7) ? 1 : -1;
    };
    int result = 1;
    if (b < 0) {
        b = -b;
        if (a < 0) result = -result;
    }
    if (b % 2 == 0 && a % 2 == 0) return 0;
    // strip factors of 2 from b
    while (b % 2 == 0) {
        b /= 2;
        result *= sym2(a);
    }
    // now b odd positive; Jacobi symbol by reciprocity
    a = mod_reduce(a, b);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int m = mod_reduce(b, 8);
            if (m == 3 || m == 5) result = -result;
        }
        std::swap(a, b);
        if (mod_reduce(a, 4) == 3 && mod_reduce(b, 4) == 3) result = -result;
        a = mod_reduce(a, b);
    }
    if (b != 1) return 0;
    return result;
}

EpsilonFactor epsilon_factor(const Int& delta) {
    if (delta % 2 == 0) throw EvenInput("epsilon_factor: delta must be odd");
    Int m = mod_reduce(delta, 4);
    return EpsilonFactor{m == 1 ? 0 : 1};
}

DivisorStats divisor_stats(const Int& v) {
    if (v < 1) throw DomainError("divisor_stats: argument must be >= 1");
    DivisorStats st;
    st.omega = 0;
    st.divisors = {1};
    Int rest = v;
    Int p = 2;
    while (p * p <= rest) {
        if (rest % p == 0) {
            st.omega += 1;
            std::vector<Int> block = st.divisors;
            Int pe = 1;
            while (rest % p == 0) {
                rest /= p;
                pe *= p;
                for (const Int& d : block) st.divisors.push_back(d * pe);
            }
        }
        p += (p == 2) ? 1 : 2;
    }
    if (rest > 1) {
        st.omega += 1;
        std::vector<Int> block = st.divisors;
        for (const Int& d : block) st.divisors.push_back(d * rest);
    }
    std::sort(st.divisors.begin(), st.divisors.end());
    st.sigma0 = static_cast<long>(st.divisors.size());
    return st;
}

Int euler_phi(const Int& c) {
    if (c < 1) throw DomainError("euler_phi: argument must be >= 1");
    Int result = c;
    Int rest = c;
    Int p = 2;
    while (p * p <= rest) {
        if (rest % p == 0) {
            result -= result / p;
            while (rest % p == 0) rest /= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

}  // namespace jpcert
