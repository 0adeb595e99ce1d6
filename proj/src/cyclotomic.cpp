#include "cyclotomic.hpp"

#include <map>
#include <mutex>

namespace zchelp {

CycElt CycElt::monomial(int64_t n, int64_t e, const mpz_class& coeff) {
    CycElt r(n);
    r.at(e) = coeff;
    return r;
}

CycElt CycElt::constant(int64_t n, const mpz_class& v) {
    return monomial(n, 0, v);
}

static size_t wrap(int64_t e, int64_t n) {
    return static_cast<size_t>(((e % n) + n) % n);
}

mpz_class& CycElt::at(int64_t e) { return c[wrap(e, n)]; }
const mpz_class& CycElt::at(int64_t e) const { return c[wrap(e, n)]; }

CycElt& CycElt::add(const CycElt& o, const mpz_class& scale) {
    if (o.n != n) throw std::invalid_argument("mixed moduli");
    for (int64_t e = 0; e < n; ++e)
        if (o.c[e] != 0) c[e] += o.c[e] * scale;
    return *this;
}

CycElt CycElt::operator+(const CycElt& o) const {
    CycElt r = *this;
    r.add(o);
    return r;
}

CycElt CycElt::operator-(const CycElt& o) const {
    CycElt r = *this;
    r.add(o, -1);
    return r;
}

CycElt CycElt::negated() const { return scaled(-1); }

CycElt CycElt::scaled(const mpz_class& s) const {
    CycElt r(n);
    for (int64_t e = 0; e < n; ++e)
        if (c[e] != 0) r.c[e] = c[e] * s;
    return r;
}

CycElt CycElt::rotated(int64_t k) const {
    CycElt r(n);
    for (int64_t e = 0; e < n; ++e)
        if (c[e] != 0) r.at(e + k) = c[e];
    return r;
}

CycElt CycElt::conjugated() const {
    CycElt r(n);
    for (int64_t e = 0; e < n; ++e)
        if (c[e] != 0) r.at(-e) = c[e];
    return r;
}

// Phi_n cache.  Build order guarantees Phi_d is present for d | n first.
static std::map<int64_t, std::vector<mpz_class>> g_phi;
static std::mutex g_phi_mutex;

// Exact division of polynomials with integer coefficients, num / den,
// den monic-leading after sign normalization.  Remainder must vanish.
static std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                                const std::vector<mpz_class>& den) {
    size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("bad cyclotomic division");
    std::vector<mpz_class> quot(num.size() - dd, 0);
    const mpz_class& lead = den[dd];
    for (size_t top = num.size() - 1;; --top) {
        if (num[top] != 0) {
            mpz_class q = num[top] / lead;
            if (q * lead != num[top]) throw std::logic_error("inexact cyclotomic division");
            quot[top - dd] = q;
            for (size_t j = 0; j <= dd; ++j) num[top - dd + j] -= q * den[j];
        }
        if (top == dd) break;
    }
    for (const auto& v : num)
        if (v != 0) throw std::logic_error("nonzero remainder in cyclotomic division");
    return quot;
}

static const std::vector<mpz_class>& phi_locked(int64_t n) {
    auto it = g_phi.find(n);
    if (it != g_phi.end()) return it->second;
    std::vector<mpz_class> res;
    if (n == 1) {
        res = {-1, 1};  // x - 1
    } else {
        // (x^n - 1) / prod_{d | n, d < n} Phi_d
        std::vector<mpz_class> num(static_cast<size_t>(n) + 1, 0);
        num[0] = -1;
        num[static_cast<size_t>(n)] = 1;
        for (int64_t d = 1; d < n; ++d)
            if (n % d == 0) num = poly_divide_exact(std::move(num), phi_locked(d));
        res = std::move(num);
    }
    return g_phi.emplace(n, std::move(res)).first->second;
}

const std::vector<mpz_class>& cyclotomic_poly(int64_t n) {
    if (n < 1) throw std::invalid_argument("degenerate modulus");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return phi_locked(n);
}

std::vector<mpz_class> CycElt::canonical() const {
    const auto& phi = cyclotomic_poly(n);
    size_t deg = phi.size() - 1;  // phi(n)
    std::vector<mpz_class> r = c;
    for (size_t top = r.size(); top-- > deg;) {
        if (r[top] == 0) continue;
        mpz_class q = r[top];  // phi is monic
        for (size_t j = 0; j <= deg; ++j) r[top - deg + j] -= q * phi[j];
    }
    r.resize(deg);
    return r;
}

bool CycElt::is_zero() const {
    for (const auto& v : canonical())
        if (v != 0) return false;
    return true;
}

bool CycElt::operator==(const CycElt& o) const {
    if (n != o.n) return false;
    return (*this - o).is_zero();
}

bool CycElt::operator!=(const CycElt& o) const { return !(*this == o); }

CycElt alpha_elt(int64_t n, int64_t x) {
    CycElt r(n);
    r.at(x) += 1;
    r.at(-x) += 1;
    return r;
}

mpz_class trace_of_root(int64_t n, int64_t d) {
    if (n < 1 || d < 1 || n % d != 0)
        throw std::invalid_argument("root order does not divide modulus");
    return mpz_class(moebius(d)) * euler_phi(n) / euler_phi(d);
}

mpz_class trace_q(int64_t m, const CycElt& e) {
    if (m < 1) throw std::invalid_argument("degenerate modulus");
    mpz_class total = 0;
    for (int64_t k = 0; k < e.n; ++k) {
        if (e.c[k] == 0) continue;
        int64_t order = e.n / gcd64(e.n, k);
        if (m % order != 0) throw std::domain_error("element outside subfield");
        total += e.c[k] * trace_of_root(m, order);
    }
    return total;
}

int64_t trace_q_i64(int64_t m, const CycElt& e) {
    mpz_class t = trace_q(m, e);
    if (!t.fits_slong_p()) throw std::overflow_error("trace exceeds int64");
    return t.get_si();
}

}  // namespace zchelp
