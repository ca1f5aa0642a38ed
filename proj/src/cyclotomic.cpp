#include "jpcert/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "jpcert/errors.hpp"

namespace jpcert {

void CycVec::add_root(long e, const Int& m) {
    long idx = e % modulus;
    if (idx < 0) idx += modulus;
    coeff[static_cast<size_t>(idx)] += m;
}

CycVec cyc_add(const CycVec& a, const CycVec& b) {
    if (a.modulus != b.modulus) throw DimensionMismatch("cyc_add: modulus mismatch");
    CycVec r(a.modulus);
    for (size_t j = 0; j < r.coeff.size(); ++j) r.coeff[j] = a.coeff[j] + b.coeff[j];
    return r;
}

CycVec cyc_sub(const CycVec& a, const CycVec& b) {
    if (a.modulus != b.modulus) throw DimensionMismatch("cyc_sub: modulus mismatch");
    CycVec r(a.modulus);
    for (size_t j = 0; j < r.coeff.size(); ++j) r.coeff[j] = a.coeff[j] - b.coeff[j];
    return r;
}

CycVec cyc_neg(const CycVec& a) {
    CycVec r(a.modulus);
    for (size_t j = 0; j < r.coeff.size(); ++j) r.coeff[j] = -a.coeff[j];
    return r;
}

CycVec cyc_scale(const CycVec& a, const Int& s) {
    CycVec r(a.modulus);
    for (size_t j = 0; j < r.coeff.size(); ++j) r.coeff[j] = a.coeff[j] * s;
    return r;
}

CycVec cyc_rotate(const CycVec& a, long shift) {
    CycVec r(a.modulus);
    long n = a.modulus;
    long s = shift % n;
    if (s < 0) s += n;
    for (long j = 0; j < n; ++j) {
        long k = j + s;
        if (k >= n) k -= n;
        r.coeff[static_cast<size_t>(k)] = a.coeff[static_cast<size_t>(j)];
    }
    return r;
}

CycVec cyc_embed(const CycVec& a, long new_modulus) {
    if (new_modulus % a.modulus != 0)
        throw DimensionMismatch("cyc_embed: old modulus must divide new one");
    long stride = new_modulus / a.modulus;
    CycVec r(new_modulus);
    for (long j = 0; j < a.modulus; ++j)
        r.coeff[static_cast<size_t>(j * stride)] = a.coeff[static_cast<size_t>(j)];
    return r;
}

CycVec cyc_mul(const CycVec& a, const CycVec& b) {
    if (a.modulus != b.modulus) throw DimensionMismatch("cyc_mul: modulus mismatch");
    long n = a.modulus;
    CycVec r(n);
    for (long i = 0; i < n; ++i) {
        const Int& ai = a.coeff[static_cast<size_t>(i)];
        if (ai == 0) continue;
        for (long j = 0; j < n; ++j) {
            const Int& bj = b.coeff[static_cast<size_t>(j)];
            if (bj == 0) continue;
            long k = i + j;
            if (k >= n) k -= n;
            r.coeff[static_cast<size_t>(k)] += ai * bj;
        }
    }
    return r;
}

bool cyc_raw_equal(const CycVec& a, const CycVec& b) {
    return a.modulus == b.modulus && a.coeff == b.coeff;
}

namespace {

// quotient of exact division of polynomial a by monic polynomial b
std::vector<Int> poly_divide_exact(std::vector<Int> a, const std::vector<Int>& b) {
    const size_t db = b.size() - 1;
    if (a.size() < b.size()) throw DomainError("poly_divide_exact: degree underflow");
    std::vector<Int> q(a.size() - db);
    for (size_t j = a.size(); j-- > db;) {
        Int c = a[j];
        q[j - db] = c;
        if (c == 0) continue;
        for (size_t i = 0; i <= db; ++i) a[j - db + i] -= c * b[i];
    }
    for (const Int& c : a)
        if (c != 0) throw DomainError("poly_divide_exact: division not exact");
    return q;
}

std::map<long, std::vector<Int>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<Int> compute_cyclotomic(long n);

const std::vector<Int>& cyclotomic_locked(long n) {
    auto it = g_phi_cache.find(n);
    if (it == g_phi_cache.end())
        it = g_phi_cache.emplace(n, compute_cyclotomic(n)).first;
    return it->second;
}

std::vector<Int> compute_cyclotomic(long n) {
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> poly(static_cast<size_t>(n) + 1);
    poly[0] = -1;
    poly[static_cast<size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = poly_divide_exact(std::move(poly), cyclotomic_locked(d));
    }
    return poly;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return cyclotomic_locked(n);
}

bool cyc_is_zero(const CycVec& a) {
    bool all_zero = true;
    for (const Int& c : a.coeff)
        if (c != 0) { all_zero = false; break; }
    if (all_zero) return true;

    const long n = a.modulus;
    if (n % 2 == 0) {
        // v[j] == v[j + n/2] for all j means pairwise cancellation
        bool antipodal = true;
        const long h = n / 2;
        for (long j = 0; j < h; ++j) {
            if (a.coeff[static_cast<size_t>(j)] != a.coeff[static_cast<size_t>(j + h)]) {
                antipodal = false;
                break;
            }
        }
        if (antipodal) return true;
    }

    // reduce a copy modulo Phi_n
    std::vector<Int> rem = a.coeff;
    std::vector<std::pair<size_t, Int>> phi_terms;
    size_t deg;
    {
        const std::vector<Int>& phi = cyclotomic_polynomial(n);
        deg = phi.size() - 1;
        for (size_t i = 0; i < deg; ++i)
            if (phi[i] != 0) phi_terms.emplace_back(i, phi[i]);
    }
    for (size_t j = rem.size(); j-- > deg;) {
        Int c = std::move(rem[j]);
        rem[j] = 0;
        if (c == 0) continue;
        for (const auto& [i, pc] : phi_terms) rem[j - deg + i] -= c * pc;
    }
    for (const Int& c : rem)
        if (c != 0) return false;
    return true;
}

bool exact_equal(const ExactValue& a, const ExactValue& b) {
    return exact_is_zero(exact_sub(a, b));
}

ExactValue exact_sub(const ExactValue& a, const ExactValue& b) {
    long n = std::lcm(a.vec.modulus, b.vec.modulus);
    CycVec av = cyc_embed(a.vec, n);
    CycVec bv = cyc_embed(b.vec, n);
    ExactValue r;
    r.vec = cyc_sub(cyc_scale(av, b.denom), cyc_scale(bv, a.denom));
    r.denom = a.denom * b.denom;
    return r;
}

bool exact_is_zero(const ExactValue& a) { return cyc_is_zero(a.vec); }

}  // namespace jpcert
