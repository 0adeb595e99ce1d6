#include "sl2data.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace zchelp {

GroupParams::GroupParams(int64_t q_) : q(q_) {
    if (!is_odd_prime_power(q, &t, &f))
        throw std::invalid_argument("q must be an odd prime power");
}

const ConjClass& ClassTable::by_label(const std::string& l) const {
    for (const auto& c : classes)
        if (c.label == l) return c;
    throw std::invalid_argument("unknown class label");
}

namespace {

int64_t least_nonsquare(int64_t t) {
    for (int64_t v = 2; v < t; ++v) {
        bool sq = false;
        for (int64_t u = 1; u < t && !sq; ++u) sq = (u * u % t == v);
        if (!sq) return v;
    }
    throw std::logic_error("no non-square found");
}

std::string field_note_for(const GroupParams& g) {
    if (g.f == 1) return "prime field";
    if (g.f == 2) {
        std::string head =
            "F" + std::to_string(g.q) + " = F" + std::to_string(g.t);
        if (g.t % 4 == 3) return head + "[w]/(w^2+1)";
        return head + "[w]/(w^2-" + std::to_string(least_nonsquare(g.t)) + ")";
    }
    return "F" + std::to_string(g.q) + " = degree " + std::to_string(g.f) +
           " extension of F" + std::to_string(g.t);
}

}  // namespace

ClassTable class_table(int64_t q) {
    ClassTable tab{GroupParams(q), {}, ""};
    tab.field_note = field_note_for(tab.grp);
    int64_t t = tab.grp.t;
    int64_t uni = (q * q - 1) / 2;
    tab.classes.push_back({"1", 1, 1, "J"});
    tab.classes.push_back({"J", 2, 1, "1"});
    tab.classes.push_back({"t.1", t, uni, "2t.1"});
    tab.classes.push_back({"t.2", t, uni, "2t.2"});
    tab.classes.push_back({"2t.1", 2 * t, uni, "t.1"});
    tab.classes.push_back({"2t.2", 2 * t, uni, "t.2"});
    auto torus = [&](int64_t m, const char* prefix, int64_t size) {
        for (int64_t x = 1; 2 * x < m; ++x) {
            int64_t partner = abs_rep(x + m / 2, m);
            std::string plabel;
            if (partner == 0)
                plabel = "1";
            else if (2 * partner == m)
                plabel = "J";
            else
                plabel = prefix + std::to_string(partner);
            tab.classes.push_back(
                {prefix + std::to_string(x), m / gcd64(m, x), size, plabel});
        }
    };
    torus(q - 1, "s", q * (q + 1));
    torus(q + 1, "ns", q * (q - 1));
    return tab;
}

namespace {

// Arithmetic tables for F_q, q = t^f with f <= 2.  Elements are encoded
// as a + b*t for coordinates (a, b) over the chosen quadratic.
struct SmallField {
    int64_t q, t, f;
    int64_t nonres = 0;          // w^2 = nonres when f == 2
    std::vector<int64_t> addt, mult;
    std::string note;

    explicit SmallField(const GroupParams& g) : q(g.q), t(g.t), f(g.f) {
        if (f > 2) throw std::domain_error("oracle scale exceeded");
        note = field_note_for(g);
        if (f == 2) nonres = (t % 4 == 3) ? t - 1 : least_nonsquare(t);
        addt.resize(q * q);
        mult.resize(q * q);
        for (int64_t x = 0; x < q; ++x) {
            for (int64_t y = 0; y < q; ++y) {
                int64_t xa = x % t, xb = x / t, ya = y % t, yb = y / t;
                addt[x * q + y] = (xa + ya) % t + ((xb + yb) % t) * t;
                int64_t pa = (xa * ya + xb * yb % t * nonres) % t;
                int64_t pb = (xa * yb + xb * ya) % t;
                mult[x * q + y] = pa + pb * t;
            }
        }
    }
    int64_t add(int64_t x, int64_t y) const { return addt[x * q + y]; }
    int64_t mul(int64_t x, int64_t y) const { return mult[x * q + y]; }
    int64_t neg(int64_t x) const {
        int64_t a = x % t, b = x / t;
        return (t - a) % t + ((t - b) % t) * t;
    }
};

using Mat = std::array<int64_t, 4>;  // row major [a b; c d]

Mat matmul(const SmallField& F, const Mat& x, const Mat& y) {
    return {F.add(F.mul(x[0], y[0]), F.mul(x[1], y[2])),
            F.add(F.mul(x[0], y[1]), F.mul(x[1], y[3])),
            F.add(F.mul(x[2], y[0]), F.mul(x[3], y[2])),
            F.add(F.mul(x[2], y[1]), F.mul(x[3], y[3]))};
}

int64_t mat_id(const SmallField& F, const Mat& m) {
    return ((m[0] * F.q + m[1]) * F.q + m[2]) * F.q + m[3];
}

}  // namespace

ClassTable brute_force_classes(int64_t q) {
    GroupParams grp(q);
    if (q > 13) throw std::domain_error("oracle scale exceeded");
    SmallField F(grp);

    std::vector<Mat> elems;
    std::vector<int32_t> index(q * q * q * q, -1);
    for (int64_t a = 0; a < q; ++a)
        for (int64_t b = 0; b < q; ++b)
            for (int64_t c = 0; c < q; ++c)
                for (int64_t d = 0; d < q; ++d) {
                    int64_t det = F.add(F.mul(a, d), F.neg(F.mul(b, c)));
                    if (det != 1) continue;
                    Mat m{a, b, c, d};
                    index[mat_id(F, m)] = static_cast<int32_t>(elems.size());
                    elems.push_back(m);
                }
    if (static_cast<int64_t>(elems.size()) != grp.order())
        throw std::logic_error("group enumeration failed");

    // Transvection generators (one per F_t-basis coordinate), each stored
    // next to its inverse.
    std::vector<Mat> gens;
    for (int64_t k = 0; k < grp.f; ++k) {
        int64_t lam = (k == 0) ? 1 : grp.t;  // 1 and w
        gens.push_back(Mat{1, lam, 0, 1});
        gens.push_back(Mat{1, F.neg(lam), 0, 1});
        gens.push_back(Mat{1, 0, lam, 1});
        gens.push_back(Mat{1, 0, F.neg(lam), 1});
    }

    std::vector<int32_t> cls(elems.size(), -1);
    ClassTable tab{grp, {}, F.note};
    std::vector<int32_t> reps;
    for (size_t seed = 0; seed < elems.size(); ++seed) {
        if (cls[seed] != -1) continue;
        int32_t cid = static_cast<int32_t>(reps.size());
        reps.push_back(static_cast<int32_t>(seed));
        std::queue<int32_t> bfs;
        cls[seed] = cid;
        bfs.push(static_cast<int32_t>(seed));
        int64_t size = 0;
        while (!bfs.empty()) {
            Mat x = elems[bfs.front()];
            bfs.pop();
            ++size;
            for (size_t gi = 0; gi < gens.size(); gi += 2) {
                Mat y = matmul(F, matmul(F, gens[gi], x), gens[gi + 1]);
                int32_t yi = index[mat_id(F, y)];
                if (cls[yi] == -1) {
                    cls[yi] = cid;
                    bfs.push(yi);
                }
            }
        }
        // Element order of the representative.
        Mat p = elems[seed];
        int64_t order = 1;
        const Mat id{1, 0, 0, 1};
        while (p != id) {
            p = matmul(F, p, elems[seed]);
            ++order;
        }
        tab.classes.push_back({"c" + std::to_string(cid), order, size, ""});
    }
    for (size_t cid = 0; cid < reps.size(); ++cid) {
        Mat r = elems[reps[cid]];
        Mat neg{F.neg(r[0]), F.neg(r[1]), F.neg(r[2]), F.neg(r[3])};
        tab.classes[cid].central_shift_partner =
            tab.classes[cls[index[mat_id(F, neg)]]].label;
    }
    return tab;
}

bool order_represented(int64_t q, int64_t n) {
    if (n < 1) return false;
    GroupParams grp(q);
    return (q - 1) % n == 0 || (q + 1) % n == 0 || n == grp.t || n == 2 * grp.t;
}

int64_t smallest_q_with_order(int64_t n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (n <= 2) return 3;
    // The candidates are exactly q = k*n +- 1; scan them in increasing
    // order.  The cap only guards against absurd inputs.
    for (int64_t k = 1; k <= (1 << 20); ++k)
        for (int64_t q : {k * n - 1, k * n + 1})
            if (q >= 3 && q % 2 == 1 && is_odd_prime_power(q)) return q;
    throw std::domain_error("no desk-scale group represents the order");
}

CyclicFrame cyclic_frame(int64_t q, int64_t n) {
    GroupParams grp(q);
    if (n < 1 || ((q - 1) % n != 0 && (q + 1) % n != 0))
        throw std::domain_error("order not represented");
    CyclicFrame fr{grp, n, (q - 1) % n == 0, {}};
    int64_t m = fr.split ? q - 1 : q + 1;
    int64_t stride = m / n;
    const char* prefix = fr.split ? "s" : "ns";
    for (int64_t x = 0; 2 * x <= n; ++x) {
        int64_t r = abs_rep(x * stride, m);
        if (r == 0)
            fr.labels.push_back("1");
        else if (2 * r == m)
            fr.labels.push_back("J");
        else
            fr.labels.push_back(prefix + std::to_string(r));
    }
    return fr;
}

const std::string& CyclicFrame::label_of(int64_t x) const {
    return labels[static_cast<size_t>(abs_rep(x, n))];
}

CycElt brauer_value(int64_t m, int64_t n, int64_t i) {
    if (m < 0) throw std::invalid_argument("character index must be non-negative");
    CycElt v(n);
    for (int64_t j = -m; j <= m; j += 2) v.at(i * j) += 1;
    return v;
}

}  // namespace zchelp
