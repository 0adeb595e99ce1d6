#include "realbasis.hpp"

#include <mutex>

namespace zchelp {

mpz_class RealElt::coeff(const BasisLabel& l) const {
    auto it = coeffs.find(l);
    return it == coeffs.end() ? mpz_class(0) : it->second;
}

CycElt RealElt::to_cyc() const {
    CycElt r(n);
    for (const auto& [label, v] : coeffs) {
        if (label.is_one)
            r.at(0) += v;
        else
            r.add(alpha_elt(n, label.rep), v);
    }
    return r;
}

bool basis_residue_member(const Modulus& n, int64_t x) {
    for (const auto& pp : n.primes) {
        int64_t far = 2 * pp.p * abs_rep(x, pp.part);
        if (far > pp.part) continue;  // far region at p: condition met
        if (pp.p != 2 || n.is_two_power()) return false;
        // Boundary alternative, available at p = 2 only: x sits exactly at
        // n_2/4 and points the same way as its odd-part companion.
        int64_t n2 = pp.part;
        if (4 * abs_rep(x, n2) != n2) return false;
        int64_t np0 = n.part_of(n.smallest_odd_prime());
        if (x % np0 == 0) return false;
        if (centered_rep(x, n2) * centered_rep(x, np0) <= 0) return false;
    }
    return true;
}

static RealBasis build_real_basis(int64_t n) {
    RealBasis rb;
    rb.n = n;
    if (n <= 2) {
        rb.residues = {0};
        rb.labels = {BasisLabel{true, 0}};
        return rb;
    }
    Modulus m(n);
    for (int64_t x = 0; x < n; ++x)
        if (basis_residue_member(m, x)) rb.residues.push_back(x);
    if (m.is_two_power()) rb.labels.push_back(BasisLabel{true, 0});
    for (int64_t b : rb.residues) {
        int64_t r = abs_rep(b, n);
        if (2 * r == n) continue;  // the rational pair sum; replaced by "1"
        if (b == r) rb.labels.push_back(BasisLabel{false, r});
    }
    return rb;
}

static std::map<int64_t, RealBasis> g_basis;
static std::mutex g_basis_mutex;

const RealBasis& real_basis(int64_t n) {
    if (n < 1) throw std::invalid_argument("degenerate modulus");
    std::lock_guard<std::mutex> lock(g_basis_mutex);
    auto it = g_basis.find(n);
    if (it != g_basis.end()) return it->second;
    return g_basis.emplace(n, build_real_basis(n)).first->second;
}

bool RealBasis::has_residue(int64_t b) const {
    return std::binary_search(residues.begin(), residues.end(), ((b % n) + n) % n);
}

std::vector<MonomialTerm> expand_monomial(int64_t n, int64_t e) {
    if (n < 1) throw std::invalid_argument("degenerate modulus");
    if (n <= 2) return {{0, (n == 2 && (e % 2 + 2) % 2 == 1) ? -1 : 1}};
    Modulus m(n);
    int64_t gbar = radical_gamma_bar(m, e);
    int mu = moebius(radical_gamma(m, e));
    int64_t step = n / gbar;
    std::vector<MonomialTerm> terms;
    for (int64_t b : real_basis(n).residues)
        if (((b - e) % step + step) % step == 0)
            terms.push_back({b, mu * beta_sign(m, b, e)});
    return terms;
}

RealElt expand_to_basis(const CycElt& x) {
    if (x != x.conjugated()) throw std::invalid_argument("element is not real");
    int64_t n = x.n;
    RealElt out;
    out.n = n;
    if (n <= 2) {
        mpz_class v = x.c[0];
        if (n == 2) v -= x.c[1];
        if (v != 0) out.coeffs[BasisLabel{true, 0}] = v;
        return out;
    }
    std::vector<mpz_class> acc(static_cast<size_t>(n), 0);
    for (int64_t e = 0; e < n; ++e) {
        if (x.c[e] == 0) continue;
        for (const auto& t : expand_monomial(n, e))
            acc[t.b] += x.c[e] * t.sign;
    }
    const RealBasis& rb = real_basis(n);
    for (const BasisLabel& label : rb.labels) {
        mpz_class v;
        if (label.is_one) {
            // Only the residue n/2 (2-power n) lands on a rational root.
            v = -acc[static_cast<size_t>(n / 2)];
        } else {
            v = acc[static_cast<size_t>(label.rep)];
            if (v != acc[static_cast<size_t>(n - label.rep)])
                throw std::logic_error("asymmetric expansion of a real element");
        }
        if (v != 0) out.coeffs[label] = v;
    }
    return out;
}

mpz_class closed_form_coeff(int64_t n, int64_t i, const BasisLabel& label) {
    if (n < 3) throw std::invalid_argument("degenerate modulus");
    Modulus m(n);
    int64_t step = n / radical_gamma_bar(m, i);
    int mu = moebius(radical_gamma(m, i));
    // Coefficient picked up at residue b from each of zeta^i and zeta^-i.
    // When i and -i coincide mod n the two passes agree and correctly
    // produce the doubled coefficient of the collapsed pair.
    auto at_residue = [&](int64_t b) {
        mpz_class v = 0;
        for (int64_t s : {i, -i})
            if (((b - s) % step + step) % step == 0) v += mu * beta_sign(m, b, s);
        return v;
    };
    if (label.is_one) {
        if (!m.is_two_power()) return 0;
        return -at_residue(n / 2);
    }
    return at_residue(label.rep);
}

int64_t compact_coeff(int64_t n, int64_t i, int64_t b) {
    if (n < 3) throw std::invalid_argument("degenerate modulus");
    Modulus m(n);
    int64_t step = n / radical_gamma_bar(m, i);
    bool delta = ((b - i) % step + step) % step == 0 ||
                 ((b + i) % step + step) % step == 0;
    if (!delta) return 0;
    return kappa_weight(n, i) * moebius(radical_gamma(m, i)) * beta_sign(m, b, i);
}

BasisSolver::BasisSolver(int64_t n, const std::vector<CycElt>& candidates)
    : n_(n), ncols_(candidates.size()) {
    nrows_ = static_cast<size_t>(euler_phi(n));
    reduced_.assign(nrows_, std::vector<mpq_class>(ncols_, 0));
    for (size_t j = 0; j < ncols_; ++j) {
        if (candidates[j].n != n) throw std::invalid_argument("mixed moduli");
        auto coords = candidates[j].canonical();
        for (size_t i = 0; i < nrows_; ++i) reduced_[i][j] = coords[i];
    }
    transform_.assign(nrows_, std::vector<mpq_class>(nrows_, 0));
    for (size_t i = 0; i < nrows_; ++i) transform_[i][i] = 1;

    rank_ = 0;
    for (size_t col = 0; col < ncols_ && rank_ < nrows_; ++col) {
        size_t piv = rank_;
        while (piv < nrows_ && reduced_[piv][col] == 0) ++piv;
        if (piv == nrows_) continue;
        std::swap(reduced_[piv], reduced_[rank_]);
        std::swap(transform_[piv], transform_[rank_]);
        mpq_class inv = 1 / reduced_[rank_][col];
        for (auto& v : reduced_[rank_]) v *= inv;
        for (auto& v : transform_[rank_]) v *= inv;
        for (size_t r = 0; r < nrows_; ++r) {
            if (r == rank_ || reduced_[r][col] == 0) continue;
            mpq_class f = reduced_[r][col];
            for (size_t j = 0; j < ncols_; ++j) reduced_[r][j] -= f * reduced_[rank_][j];
            for (size_t j = 0; j < nrows_; ++j) transform_[r][j] -= f * transform_[rank_][j];
        }
        pivot_col_.push_back(col);
        ++rank_;
    }
}

std::optional<std::vector<mpq_class>> BasisSolver::solve(const CycElt& x) const {
    if (!is_independent()) throw std::domain_error("not a basis");
    if (x.n != n_) throw std::invalid_argument("mixed moduli");
    auto coords = x.canonical();
    // y = T * coords; consistent iff rows beyond the rank vanish.
    std::vector<mpq_class> sol(ncols_, 0);
    for (size_t r = 0; r < nrows_; ++r) {
        mpq_class y = 0;
        for (size_t i = 0; i < nrows_; ++i)
            if (coords[i] != 0) y += transform_[r][i] * coords[i];
        if (r < rank_) {
            sol[pivot_col_[r]] = y;
        } else if (y != 0) {
            return std::nullopt;
        }
    }
    return sol;
}

std::optional<std::vector<mpz_class>> BasisSolver::solve_integral(const CycElt& x) const {
    auto q = solve(x);
    if (!q) return std::nullopt;
    std::vector<mpz_class> z(q->size());
    for (size_t j = 0; j < q->size(); ++j) {
        if ((*q)[j].get_den() != 1) return std::nullopt;
        z[j] = (*q)[j].get_num();
    }
    return z;
}

static std::map<int64_t, BasisSolver> g_oracle;
static std::mutex g_oracle_mutex;

const BasisSolver& basis_oracle(int64_t n) {
    std::lock_guard<std::mutex> lock(g_oracle_mutex);
    auto it = g_oracle.find(n);
    if (it != g_oracle.end()) return it->second;
    const RealBasis& rb = real_basis(n);
    std::vector<CycElt> cands;
    for (const auto& label : rb.labels) {
        RealElt unit;
        unit.n = n;
        unit.coeffs[label] = 1;
        cands.push_back(unit.to_cyc());
    }
    auto [pos, inserted] = g_oracle.emplace(n, BasisSolver(n, cands));
    if (!pos->second.is_independent()) throw std::domain_error("not a basis");
    return pos->second;
}

std::vector<mpz_class> oracle_expand(const CycElt& x) {
    if (x != x.conjugated()) throw std::invalid_argument("element is not real");
    auto z = basis_oracle(x.n).solve_integral(x);
    if (!z) throw std::domain_error("element outside the integral span");
    return *z;
}

}  // namespace zchelp
