#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "numbers.hpp"

namespace zchelp {

// Element of Z[zeta_n], stored as an integer vector over the exponents
// 0..n-1 of zeta_n.  The stored vector is not unique; equality and the
// canonical form reduce modulo the n-th cyclotomic polynomial.  All
// coefficient arithmetic is arbitrary precision.
struct CycElt {
    int64_t n = 1;
    std::vector<mpz_class> c;  // size n

    CycElt() : c(1, 0) {}
    explicit CycElt(int64_t n_) : n(n_), c(static_cast<size_t>(n_), 0) {
        if (n_ < 1) throw std::invalid_argument("degenerate modulus");
    }

    static CycElt monomial(int64_t n, int64_t e, const mpz_class& coeff = 1);
    static CycElt constant(int64_t n, const mpz_class& v);

    mpz_class& at(int64_t e);              // coefficient of zeta^e, e mod n
    const mpz_class& at(int64_t e) const;

    CycElt& add(const CycElt& o, const mpz_class& scale = 1);
    CycElt operator+(const CycElt& o) const;
    CycElt operator-(const CycElt& o) const;
    CycElt negated() const;
    CycElt scaled(const mpz_class& s) const;
    CycElt rotated(int64_t k) const;       // multiply by zeta^k
    CycElt conjugated() const;             // zeta -> zeta^-1

    bool is_zero() const;                  // as a field element
    bool operator==(const CycElt& o) const;
    bool operator!=(const CycElt& o) const;

    // Coordinates in the power basis 1, zeta, ..., zeta^(phi(n)-1).
    std::vector<mpz_class> canonical() const;
};

// Coefficient vector of the n-th cyclotomic polynomial, low degree first,
// size phi(n)+1.  Cached; computed by iterated exact polynomial division.
const std::vector<mpz_class>& cyclotomic_poly(int64_t n);

// zeta_n^x + zeta_n^-x.
CycElt alpha_elt(int64_t n, int64_t x);

// Trace of zeta_n^(n/d) from Q(zeta_n) down to Q, i.e. of a primitive d-th
// root of unity inside Q(zeta_n): mu(d) * phi(n) / phi(d).  Requires d | n.
mpz_class trace_of_root(int64_t n, int64_t d);

// Trace from Q(zeta_m) to Q of an element given over any ambient modulus,
// provided every monomial with nonzero coefficient has root order dividing
// m.  Computed monomial-wise from trace_of_root.
mpz_class trace_q(int64_t m, const CycElt& e);

// trace_q with a range check into int64.
int64_t trace_q_i64(int64_t m, const CycElt& e);

}  // namespace zchelp
