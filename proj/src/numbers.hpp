#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zchelp {

using std::int64_t;

// Factored modulus n >= 1.  Keeps the prime decomposition around because
// almost every residue computation below needs the p-parts n_p = p^v_p(n).
struct Modulus {
    int64_t n = 1;
    struct PrimePart {
        int64_t p;      // prime divisor of n
        int64_t e;      // exponent
        int64_t part;   // p^e
    };
    std::vector<PrimePart> primes;  // ascending by p

    explicit Modulus(int64_t n);

    int64_t radical() const;              // product of distinct primes
    int64_t two_part() const;             // n_2 (1 if n odd)
    int64_t part_of(int64_t p) const;     // n_p, throws if p does not divide n
    int64_t smallest_odd_prime() const;   // throws if n is a power of 2
    bool is_two_power() const;            // n == n_2 (true for n == 1)
};

int64_t euler_phi(int64_t n);
int moebius(int64_t n);

// Representative of x mod n in the half-open interval (-n/2, n/2].
int64_t centered_rep(int64_t x, int64_t n);
// |centered_rep|, a canonical representative of the pair {x, -x} in [0, n/2].
int64_t abs_rep(int64_t x, int64_t n);

// x and y agree up to sign mod n.
bool sign_equiv(int64_t n, int64_t x, int64_t y);

// Fold weight of the residue pair {x, -x}: 2 when the pair collapses
// (x = 0 or x = n/2 mod n), else 1.
int kappa_weight(int64_t n, int64_t x);

// Product of the primes p | n whose p-part sees x close to zero:
// gamma collects p with |x : n_p| < n_p/(2p), gamma_bar relaxes to <=.
// The two differ exactly by a factor 2 when |x : n_2| = n_2/4.
int64_t radical_gamma(const Modulus& n, int64_t x);
int64_t radical_gamma_bar(const Modulus& n, int64_t x);

// Sign attached to the pair (b, x).  It is -1 exactly when n is not a
// 2-power, |x : n_2| = n_2/4, and x mod n_2 and b mod n_{p0} point in
// opposite directions (p0 the smallest odd prime divisor of n).
int beta_sign(const Modulus& n, int64_t b, int64_t x);

int64_t gcd64(int64_t a, int64_t b);
bool is_odd_prime_power(int64_t q, int64_t* prime = nullptr, int64_t* exp = nullptr);

}  // namespace zchelp
