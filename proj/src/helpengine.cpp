#include "helpengine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclotomic.hpp"
#include "numbers.hpp"

namespace zchelp {

namespace {

constexpr int64_t kDefaultNodeCap = 10000000;
constexpr int64_t kBoxLimit = 1000000000;

struct Row {
    int64_t m = 0;
    int64_t l = -1;
    std::vector<int64_t> a;
    int64_t c = 0;
    int64_t lo = 0;
    int64_t hi = 0;
    int64_t mod = 1;
};

struct System {
    int64_t n = 0;
    std::vector<int64_t> vars;
    std::vector<Row> rows;
};

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

mpz_class q_floor(const mpq_class& v) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return r;
}

mpz_class q_ceil(const mpq_class& v) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return r;
}

// Trace coefficient attached to the unknown eps_x in the eigenvalue row
// (m, l): Tr of chi_m(g0^x) * zeta^-l over the full cyclotomic field.
int64_t row_coeff(int64_t n, int64_t m, int64_t x, int64_t l) {
    return trace_q_i64(n, brauer_value(m, n, x).rotated(-l));
}

// Contribution of the known powers u^d to the row constant.
int64_t row_constant(int64_t n, int64_t m, int64_t l, const PowerData& powers) {
    int64_t c = 0;
    for (const auto& [d, eps] : powers) {
        for (const auto& [y, v] : eps) {
            if (v == 0) continue;
            c += v * trace_q_i64(n / d, brauer_value(m, n, y).rotated(-l * d));
        }
    }
    return c;
}

PowerData validated_powers(const HelpProblem& p) {
    PowerData powers =
        p.powers.empty() ? power_data_of_element(p.n, 1) : p.powers;
    for (int64_t d = 2; d <= p.n; ++d) {
        if (p.n % d != 0) continue;
        if (!powers.count(d))
            throw std::invalid_argument("power data missing a divisor");
    }
    for (const auto& [d, eps] : powers) {
        if (d <= 1 || p.n % d != 0)
            throw std::invalid_argument("power data keyed by a non-divisor");
        int64_t aug = 0;
        for (const auto& [y, v] : eps) {
            if (y < 0 || 2 * y > p.n)
                throw std::invalid_argument("power data class out of range");
            if (v != 0 && gcd64(p.n, y) % d != 0)
                throw std::invalid_argument("power data incompatible with the power map");
            aug += v;
        }
        if (aug != 1)
            throw std::invalid_argument("power data must have augmentation 1");
    }
    return powers;
}

System build_system(const HelpProblem& p, const PowerData& powers) {
    System sys;
    sys.n = p.n;
    for (int64_t x = 1; 2 * x < p.n; ++x) sys.vars.push_back(x);
    const size_t nv = sys.vars.size();

    Row aug;
    aug.a.assign(nv, 1);
    aug.lo = aug.hi = 1;
    sys.rows.push_back(aug);

    for (const ExtraEquality& eq : p.extra) {
        Row row;
        row.a.assign(nv, 0);
        for (const auto& [x, coeff] : eq.coeff) {
            auto it = std::find(sys.vars.begin(), sys.vars.end(), x);
            if (it == sys.vars.end())
                throw std::invalid_argument("equality touches a pinned class");
            row.a[it - sys.vars.begin()] = coeff;
        }
        row.lo = row.hi = eq.rhs;
        sys.rows.push_back(row);
    }

    std::vector<int64_t> chars = p.effective_chars();
    if (p.normalize &&
        std::find(chars.begin(), chars.end(), 1) == chars.end())
        throw std::invalid_argument("normalization requires character 1");

    for (int64_t m : chars) {
        if (m < 1) throw std::invalid_argument("character degree must be positive");
        for (int64_t l = 0; 2 * l <= p.n; ++l) {
            if (p.row_filter && !p.row_filter->count({m, l})) continue;
            Row row;
            row.m = m;
            row.l = l;
            row.a.resize(nv);
            for (size_t i = 0; i < nv; ++i)
                row.a[i] = row_coeff(p.n, m, sys.vars[i], l);
            row.c = row_constant(p.n, m, l, powers);
            if (p.normalize && m == 1) {
                row.lo = row.hi = (l == 1) ? p.n : 0;
            } else {
                row.lo = 0;
                row.hi = p.n * (m + 1);
            }
            row.mod = p.n;
            sys.rows.push_back(row);
        }
    }
    return sys;
}

// Expresses each unit coordinate as a rational combination of the row
// coefficient vectors and turns the row bounds into a finite box for the
// unknowns.  Fails when the rows leave a direction unconstrained.
bool initial_box(const System& sys, std::vector<int64_t>& lo,
                 std::vector<int64_t>& hi, std::string& reason) {
    const size_t nv = sys.vars.size();
    const size_t nr = sys.rows.size();
    std::vector<std::vector<mpq_class>> M(nv, std::vector<mpq_class>(nr));
    for (size_t r = 0; r < nr; ++r)
        for (size_t v = 0; v < nv; ++v) M[v][r] = sys.rows[r].a[v];
    std::vector<std::vector<mpq_class>> T(nv, std::vector<mpq_class>(nv));
    for (size_t i = 0; i < nv; ++i) T[i][i] = 1;

    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < nr && rank < nv; ++col) {
        size_t pr = rank;
        while (pr < nv && M[pr][col] == 0) ++pr;
        if (pr == nv) continue;
        std::swap(M[pr], M[rank]);
        std::swap(T[pr], T[rank]);
        mpq_class lead = M[rank][col];
        for (size_t cc = col; cc < nr; ++cc) M[rank][cc] /= lead;
        for (size_t cc = 0; cc < nv; ++cc) T[rank][cc] /= lead;
        for (size_t i = 0; i < nv; ++i) {
            if (i == rank) continue;
            mpq_class f = M[i][col];
            if (f == 0) continue;
            for (size_t cc = col; cc < nr; ++cc)
                if (M[rank][cc] != 0) M[i][cc] -= f * M[rank][cc];
            for (size_t cc = 0; cc < nv; ++cc)
                if (T[rank][cc] != 0) T[i][cc] -= f * T[rank][cc];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank < nv) {
        reason = "rows do not bound the solution set";
        return false;
    }

    lo.assign(nv, 0);
    hi.assign(nv, 0);
    for (size_t v = 0; v < nv; ++v) {
        mpq_class qlo = 0, qhi = 0;
        for (size_t k = 0; k < nv; ++k) {
            const mpq_class& w = T[k][v];
            if (w == 0) continue;
            const Row& row = sys.rows[pivot_col[k]];
            mpq_class t1 = w * (row.lo - row.c);
            mpq_class t2 = w * (row.hi - row.c);
            qlo += std::min(t1, t2);
            qhi += std::max(t1, t2);
        }
        mpz_class zlo = q_ceil(qlo);
        mpz_class zhi = q_floor(qhi);
        if (!zlo.fits_slong_p() || !zhi.fits_slong_p() ||
            abs(zlo) > kBoxLimit || abs(zhi) > kBoxLimit) {
            reason = "solution box too large to enumerate";
            return false;
        }
        lo[v] = zlo.get_si();
        hi[v] = zhi.get_si();
    }
    return true;
}

// Interval propagation over the rows; returns false on proven emptiness.
bool shave_box(const System& sys, std::vector<int64_t>& lo,
               std::vector<int64_t>& hi) {
    const size_t nv = sys.vars.size();
    for (int pass = 0; pass < 256; ++pass) {
        bool changed = false;
        for (const Row& row : sys.rows) {
            __int128 smin = row.c, smax = row.c;
            for (size_t i = 0; i < nv; ++i) {
                if (lo[i] > hi[i]) return false;
                int64_t a = row.a[i];
                if (a == 0) continue;
                __int128 t1 = (__int128)a * lo[i];
                __int128 t2 = (__int128)a * hi[i];
                smin += std::min(t1, t2);
                smax += std::max(t1, t2);
            }
            if (smin > row.hi || smax < row.lo) return false;
            for (size_t i = 0; i < nv; ++i) {
                int64_t a = row.a[i];
                if (a == 0) continue;
                __int128 t1 = (__int128)a * lo[i];
                __int128 t2 = (__int128)a * hi[i];
                __int128 rest_lo = smin - std::min(t1, t2);
                __int128 rest_hi = smax - std::max(t1, t2);
                int64_t num_lo = (int64_t)(row.lo - rest_hi);
                int64_t num_hi = (int64_t)(row.hi - rest_lo);
                int64_t nlo, nhi;
                if (a > 0) {
                    nlo = ceil_div(num_lo, a);
                    nhi = floor_div(num_hi, a);
                } else {
                    nlo = ceil_div(num_hi, a);
                    nhi = floor_div(num_lo, a);
                }
                if (nlo > lo[i]) { lo[i] = nlo; changed = true; }
                if (nhi < hi[i]) { hi[i] = nhi; changed = true; }
                if (lo[i] > hi[i]) return false;
            }
        }
        if (!changed) break;
    }
    return true;
}

struct Search {
    const System& sys;
    std::vector<int64_t> lo, hi;
    std::vector<size_t> ord;
    std::vector<std::vector<int64_t>> A;
    std::vector<std::vector<int64_t>> sfx_lo, sfx_hi, sfx_gcd;
    std::vector<int64_t> partial;
    std::vector<int64_t> value;
    std::vector<std::vector<size_t>> rows_at;
    int64_t nodes = 0;
    int64_t cap = 0;
    bool truncated = false;
    std::vector<std::vector<int64_t>> found;

    Search(const System& s, std::vector<int64_t> lo_, std::vector<int64_t> hi_,
           int64_t cap_)
        : sys(s), lo(std::move(lo_)), hi(std::move(hi_)), cap(cap_) {
        const size_t nv = sys.vars.size();
        const size_t nr = sys.rows.size();
        ord.resize(nv);
        for (size_t i = 0; i < nv; ++i) ord[i] = i;
        std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) {
            int64_t wa = hi[a] - lo[a], wb = hi[b] - lo[b];
            return wa != wb ? wa < wb : a < b;
        });
        A.assign(nr, std::vector<int64_t>(nv));
        sfx_lo.assign(nr, std::vector<int64_t>(nv + 1, 0));
        sfx_hi.assign(nr, std::vector<int64_t>(nv + 1, 0));
        sfx_gcd.assign(nr, std::vector<int64_t>(nv + 1, 0));
        rows_at.assign(nv, {});
        partial.assign(nr, 0);
        value.assign(nv, 0);
        for (size_t r = 0; r < nr; ++r) {
            const Row& row = sys.rows[r];
            partial[r] = row.c;
            sfx_gcd[r][nv] = row.mod;
            for (size_t k = nv; k-- > 0;) {
                int64_t a = row.a[ord[k]];
                A[r][k] = a;
                int64_t t1 = a * lo[ord[k]], t2 = a * hi[ord[k]];
                sfx_lo[r][k] = sfx_lo[r][k + 1] + std::min(t1, t2);
                sfx_hi[r][k] = sfx_hi[r][k + 1] + std::max(t1, t2);
                sfx_gcd[r][k] = gcd64(sfx_gcd[r][k + 1], a < 0 ? -a : a);
                if (a != 0) rows_at[k].push_back(r);
            }
        }
    }

    void run() { descend(0); }

    void descend(size_t k) {
        const size_t nv = sys.vars.size();
        if (k == nv) {
            for (size_t r = 0; r < sys.rows.size(); ++r) {
                const Row& row = sys.rows[r];
                if (partial[r] < row.lo || partial[r] > row.hi) return;
                if (row.mod > 1 && partial[r] % row.mod != 0) return;
            }
            std::vector<int64_t> sol(nv);
            for (size_t i = 0; i < nv; ++i) sol[ord[i]] = value[i];
            found.push_back(std::move(sol));
            return;
        }
        int64_t vlo = lo[ord[k]], vhi = hi[ord[k]];
        for (size_t r : rows_at[k]) {
            const Row& row = sys.rows[r];
            int64_t a = A[r][k];
            int64_t num_lo = row.lo - partial[r] - sfx_hi[r][k + 1];
            int64_t num_hi = row.hi - partial[r] - sfx_lo[r][k + 1];
            int64_t nlo, nhi;
            if (a > 0) {
                nlo = ceil_div(num_lo, a);
                nhi = floor_div(num_hi, a);
            } else {
                nlo = ceil_div(num_hi, a);
                nhi = floor_div(num_lo, a);
            }
            vlo = std::max(vlo, nlo);
            vhi = std::min(vhi, nhi);
            if (vlo > vhi) return;
        }
        for (int64_t v = vlo; v <= vhi; ++v) {
            if (truncated) return;
            if (++nodes > cap) {
                truncated = true;
                return;
            }
            value[k] = v;
            bool ok = true;
            for (size_t r : rows_at[k]) {
                partial[r] += A[r][k] * v;
                int64_t g = sfx_gcd[r][k + 1];
                if (g > 1 && partial[r] % g != 0) ok = false;
            }
            if (ok) descend(k + 1);
            for (size_t r : rows_at[k]) partial[r] -= A[r][k] * v;
        }
    }
};

std::string join_reason(const std::string& what, int64_t m, int64_t l) {
    std::ostringstream os;
    os << what << " at character " << m << ", exponent " << l;
    return os.str();
}

}  // namespace

int64_t character_row_weight(int64_t n, int64_t m, int64_t x, int64_t l) {
    return row_coeff(n, m, x, l);
}

int64_t character_row_offset(int64_t n, int64_t m, int64_t l,
                             const PowerData& powers) {
    return row_constant(n, m, l, powers);
}

PAVector PAVector::indicator(int64_t n, int64_t x) {
    PAVector v;
    v.n = n;
    v.eps[abs_rep(x, n)] = 1;
    return v;
}

int64_t PAVector::at(int64_t x) const {
    auto it = eps.find(abs_rep(x, n));
    return it == eps.end() ? 0 : it->second;
}

void PAVector::set(int64_t x, int64_t v) {
    int64_t r = abs_rep(x, n);
    if (v == 0)
        eps.erase(r);
    else
        eps[r] = v;
}

int64_t PAVector::augmentation() const {
    int64_t s = 0;
    for (const auto& [x, v] : eps) s += v;
    return s;
}

bool PAVector::is_generator_indicator() const {
    int64_t support = 0, x0 = -1;
    for (const auto& [x, v] : eps) {
        if (v == 0) continue;
        ++support;
        if (v != 1) return false;
        x0 = x;
    }
    return support == 1 && gcd64(x0, n) == 1;
}

bool PAVector::operator<(const PAVector& o) const {
    if (n != o.n) return n < o.n;
    return eps < o.eps;
}

PowerData power_data_of_element(int64_t n, int64_t a) {
    PowerData out;
    for (int64_t d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        out[d][abs_rep(a * d, n)] = 1;
    }
    return out;
}

std::vector<int64_t> HelpProblem::effective_chars() const {
    if (!chars.empty()) return chars;
    std::vector<int64_t> out;
    for (int64_t m = 1; m <= n / 2 + 2; ++m) out.push_back(m);
    return out;
}

const mpq_class& MultiplicityTable::at(size_t char_index, int64_t l) const {
    int64_t r = abs_rep(l, n);
    return rows.at(char_index).at(static_cast<size_t>(r));
}

mpq_class MultiplicityTable::full_sum(size_t char_index) const {
    mpq_class s = 0;
    for (int64_t l = 0; l < n; ++l) s += at(char_index, l);
    return s;
}

bool MultiplicityTable::nonnegative_integers() const {
    for (const auto& row : rows)
        for (const mpq_class& v : row)
            if (v < 0 || v.get_den() != 1) return false;
    return true;
}

mpq_class multiplicity(const HelpProblem& p, const PAVector& eps, int64_t m,
                       int64_t l) {
    if (eps.n != p.n) throw std::invalid_argument("order mismatch");
    PowerData powers = validated_powers(p);
    int64_t v = row_constant(p.n, m, abs_rep(l, p.n), powers);
    for (int64_t x = 0; 2 * x <= p.n; ++x) {
        int64_t e = eps.at(x);
        if (e != 0) v += e * row_coeff(p.n, m, x, abs_rep(l, p.n));
    }
    mpq_class out(v, p.n);
    out.canonicalize();
    return out;
}

MultiplicityTable multiplicity_table(const HelpProblem& p,
                                     const PAVector& eps) {
    if (eps.n != p.n) throw std::invalid_argument("order mismatch");
    PowerData powers = validated_powers(p);
    MultiplicityTable tab;
    tab.n = p.n;
    tab.chars = p.effective_chars();
    for (int64_t m : tab.chars) {
        std::vector<mpq_class> row;
        for (int64_t l = 0; 2 * l <= p.n; ++l) {
            int64_t v = row_constant(p.n, m, l, powers);
            for (int64_t x = 0; 2 * x <= p.n; ++x) {
                int64_t e = eps.at(x);
                if (e != 0) v += e * row_coeff(p.n, m, x, l);
            }
            row.emplace_back(v, p.n);
        }
        for (auto& q : row) q.canonicalize();
        tab.rows.push_back(std::move(row));
    }
    return tab;
}

CheckResult check_vector(const HelpProblem& p, const PAVector& eps) {
    if (eps.n != p.n) throw std::invalid_argument("order mismatch");
    if (eps.augmentation() != 1)
        throw std::invalid_argument("augmentation must be 1");
    if (eps.at(0) != 0 || (p.n % 2 == 0 && eps.at(p.n / 2) != 0))
        throw std::invalid_argument("central classes must carry zero");

    CheckResult res;
    res.table = multiplicity_table(p, eps);
    res.pass = true;
    for (size_t mi = 0; mi < res.table.chars.size() && res.pass; ++mi) {
        int64_t m = res.table.chars[mi];
        for (int64_t l = 0; 2 * l <= p.n; ++l) {
            const mpq_class& v = res.table.at(mi, l);
            if (v.get_den() != 1) {
                res.pass = false;
                res.reason = join_reason("non-integral multiplicity", m, l);
                break;
            }
            if (v < 0) {
                res.pass = false;
                res.reason = join_reason("negative multiplicity", m, l);
                break;
            }
        }
        if (res.pass && res.table.full_sum(mi) != m + 1) {
            res.pass = false;
            std::ostringstream os;
            os << "multiplicity sum differs from the degree at character " << m;
            res.reason = os.str();
        }
        if (res.pass && p.normalize && m == 1) {
            for (int64_t l = 0; 2 * l <= p.n; ++l) {
                mpq_class want = (l == 1) ? 1 : 0;
                if (res.table.at(mi, l) != want) {
                    res.pass = false;
                    res.reason = join_reason("degree-2 eigenvalues not pinned",
                                             m, l);
                    break;
                }
            }
        }
    }
    return res;
}

bool HelpReport::all_trivial() const {
    for (const Survivor& s : survivors)
        if (!s.trivial) return false;
    return true;
}

HelpReport solve(const HelpProblem& p) {
    if (p.n < 3) throw std::invalid_argument("order must be at least 3");
    GroupParams grp(p.q);
    if (p.n % grp.t == 0) throw std::domain_error("modular order out of scope");
    if ((grp.q - 1) % p.n != 0 && (grp.q + 1) % p.n != 0)
        throw std::domain_error("order not represented");

    PowerData powers = validated_powers(p);

    HelpReport rep;
    rep.q = p.q;
    rep.n = p.n;
    rep.chars = p.effective_chars();
    rep.normalize = p.normalize;
    rep.mode = p.powers.empty() ? "inductive" : "custom";
    rep.field_note = class_table(p.q).field_note;
    rep.node_cap = p.node_cap > 0 ? p.node_cap : kDefaultNodeCap;

    System sys = build_system(p, powers);

    for (const Row& row : sys.rows) {
        bool constant = true;
        for (int64_t a : row.a)
            if (a != 0) constant = false;
        if (constant &&
            (row.c < row.lo || row.c > row.hi ||
             (row.mod > 1 && row.c % row.mod != 0))) {
            rep.complete = true;
            return rep;
        }
    }

    std::vector<int64_t> lo, hi;
    std::string reason;
    if (!initial_box(sys, lo, hi, reason)) {
        rep.complete = false;
        rep.incomplete_reason = reason;
        return rep;
    }
    if (!shave_box(sys, lo, hi)) {
        rep.complete = true;
        return rep;
    }

    Search search(sys, lo, hi, rep.node_cap);
    search.run();
    rep.nodes = search.nodes;
    rep.complete = !search.truncated;
    if (search.truncated) rep.incomplete_reason = "node budget exhausted";

    for (const auto& sol : search.found) {
        Survivor s;
        s.eps.n = p.n;
        for (size_t i = 0; i < sys.vars.size(); ++i)
            if (sol[i] != 0) s.eps.eps[sys.vars[i]] = sol[i];
        s.trivial = s.eps.is_generator_indicator();
        rep.survivors.push_back(std::move(s));
    }
    std::sort(rep.survivors.begin(), rep.survivors.end(),
              [](const Survivor& a, const Survivor& b) { return a.eps < b.eps; });
    return rep;
}

std::vector<HelpReport> scan_orders(int64_t q, bool normalize,
                                    int64_t node_cap) {
    GroupParams grp(q);
    std::set<int64_t> orders;
    for (int64_t n = 3; n <= q + 1; ++n)
        if ((q - 1) % n == 0 || (q + 1) % n == 0) orders.insert(n);
    std::vector<HelpReport> out;
    for (int64_t n : orders) {
        HelpProblem p;
        p.q = q;
        p.n = n;
        p.normalize = normalize;
        p.node_cap = node_cap;
        out.push_back(solve(p));
    }
    return out;
}

}  // namespace zchelp
