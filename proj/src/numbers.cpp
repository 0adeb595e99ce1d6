#include "numbers.hpp"

#include <numeric>

namespace zchelp {

Modulus::Modulus(int64_t m) : n(m) {
    if (m < 1) throw std::invalid_argument("degenerate modulus");
    for (int64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        PrimePart pp{p, 0, 1};
        while (m % p == 0) {
            m /= p;
            ++pp.e;
            pp.part *= p;
        }
        primes.push_back(pp);
    }
    if (m > 1) primes.push_back({m, 1, m});
}

int64_t Modulus::radical() const {
    int64_t r = 1;
    for (const auto& pp : primes) r *= pp.p;
    return r;
}

int64_t Modulus::two_part() const {
    return (!primes.empty() && primes[0].p == 2) ? primes[0].part : 1;
}

int64_t Modulus::part_of(int64_t p) const {
    for (const auto& pp : primes)
        if (pp.p == p) return pp.part;
    throw std::invalid_argument("prime does not divide modulus");
}

int64_t Modulus::smallest_odd_prime() const {
    for (const auto& pp : primes)
        if (pp.p != 2) return pp.p;
    throw std::domain_error("modulus has no odd prime divisor");
}

bool Modulus::is_two_power() const {
    return primes.empty() || (primes.size() == 1 && primes[0].p == 2);
}

int64_t euler_phi(int64_t n) {
    if (n < 1) throw std::invalid_argument("degenerate modulus");
    int64_t r = n;
    for (const auto& pp : Modulus(n).primes) r -= r / pp.p;
    return r;
}

int moebius(int64_t n) {
    if (n < 1) throw std::invalid_argument("degenerate modulus");
    Modulus m(n);
    for (const auto& pp : m.primes)
        if (pp.e > 1) return 0;
    return (m.primes.size() % 2) ? -1 : 1;
}

int64_t centered_rep(int64_t x, int64_t n) {
    if (n < 1) throw std::invalid_argument("degenerate modulus");
    int64_t r = ((x % n) + n) % n;
    if (2 * r > n) r -= n;
    return r;
}

int64_t abs_rep(int64_t x, int64_t n) {
    int64_t r = centered_rep(x, n);
    return r < 0 ? -r : r;
}

bool sign_equiv(int64_t n, int64_t x, int64_t y) {
    return abs_rep(x, n) == abs_rep(y, n);
}

int kappa_weight(int64_t n, int64_t x) {
    int64_t r = ((x % n) + n) % n;
    return (r == 0 || 2 * r == n) ? 2 : 1;
}

// Shared helper: product of primes where |x : n_p| compares against
// n_p/(2p).  Comparisons are done with integers (2p*|x:n_p| vs n_p).
static int64_t radical_where(const Modulus& n, int64_t x, bool strict) {
    int64_t r = 1;
    for (const auto& pp : n.primes) {
        int64_t lhs = 2 * pp.p * abs_rep(x, pp.part);
        if (strict ? (lhs < pp.part) : (lhs <= pp.part)) r *= pp.p;
    }
    return r;
}

int64_t radical_gamma(const Modulus& n, int64_t x) {
    return radical_where(n, x, true);
}

int64_t radical_gamma_bar(const Modulus& n, int64_t x) {
    return radical_where(n, x, false);
}

int beta_sign(const Modulus& n, int64_t b, int64_t x) {
    if (n.is_two_power()) return 1;
    int64_t n2 = n.two_part();
    if (4 * abs_rep(x, n2) != n2) return 1;
    int64_t np0 = n.part_of(n.smallest_odd_prime());
    return (centered_rep(x, n2) * centered_rep(b, np0) < 0) ? -1 : 1;
}

int64_t gcd64(int64_t a, int64_t b) {
    return std::gcd(a, b);
}

bool is_odd_prime_power(int64_t q, int64_t* prime, int64_t* exp) {
    if (q < 3 || q % 2 == 0) return false;
    Modulus m(q);
    if (m.primes.size() != 1) return false;
    if (prime) *prime = m.primes[0].p;
    if (exp) *exp = m.primes[0].e;
    return true;
}

}  // namespace zchelp
