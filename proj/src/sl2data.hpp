#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "numbers.hpp"

namespace zchelp {

// Parameters of SL(2, q) for odd prime-power q = t^f.
struct GroupParams {
    int64_t q, t, f;
    explicit GroupParams(int64_t q);
    int64_t order() const { return q * (q * q - 1); }
};

struct ConjClass {
    std::string label;
    int64_t element_order;
    int64_t size;
    std::string central_shift_partner;  // label of the class of -g
};

struct ClassTable {
    GroupParams grp;
    std::vector<ConjClass> classes;
    std::string field_note;  // how F_q was realized (brute force only)

    const ConjClass& by_label(const std::string& l) const;
};

// Symbolic class table: q + 4 classes with the standard orders and sizes.
ClassTable class_table(int64_t q);

// Exhaustive conjugacy computation over an explicit matrix group; the
// independent oracle for class_table.  Guarded to q <= 13.
ClassTable brute_force_classes(int64_t q);

// The cyclic subgroup generated by a fixed element g0 of order n (n must
// divide q-1 or q+1), with the class label of each power g0^x, x running
// over the sign-folded residues 0..n/2.
struct CyclicFrame {
    GroupParams grp;
    int64_t n;
    bool split;                      // torus of order q-1 (vs q+1)
    std::vector<std::string> labels; // index x in [0, n/2]

    const std::string& label_of(int64_t x) const;  // any integer x
};

CyclicFrame cyclic_frame(int64_t q, int64_t n);

// Whether some element of SL(2,q) has order n.
bool order_represented(int64_t q, int64_t n);

// Smallest odd prime power q with n dividing q-1 or q+1, so that the group
// has a semisimple element of order n.
int64_t smallest_q_with_order(int64_t n);

// Value of the degree-(m+1) member of the standard character family on
// g0^i, where g0 has order n: the balanced sum of zeta_n^(i*j) over
// j = -m, -m+2, ..., m.
CycElt brauer_value(int64_t m, int64_t n, int64_t i);

}  // namespace zchelp
