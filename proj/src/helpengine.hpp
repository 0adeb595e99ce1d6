#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sl2data.hpp"

namespace zchelp {

// Partial augmentations of a unit of order n, indexed by the sign-folded
// residues of Z_n.  Keys lie in [0, n/2]; absent keys mean zero.
struct PAVector {
    int64_t n = 1;
    std::map<int64_t, int64_t> eps;

    static PAVector indicator(int64_t n, int64_t x);

    int64_t at(int64_t x) const;
    void set(int64_t x, int64_t v);
    int64_t augmentation() const;

    // True when the vector is the indicator of a single generator class.
    bool is_generator_indicator() const;

    bool operator==(const PAVector& o) const { return n == o.n && eps == o.eps; }
    bool operator<(const PAVector& o) const;
};

// Partial augmentations of the proper powers u^d, keyed by divisor d > 1.
// Each entry maps folded residues to integers and must sum to 1.
using PowerData = std::map<int64_t, std::map<int64_t, int64_t>>;

// Power data matching a unit that behaves like g0^a: u^d lands in the class
// of g0^(a*d).
PowerData power_data_of_element(int64_t n, int64_t a);

// Trace weight of the class of g0^x in the shift-l eigenvalue row of the
// degree-m character, and the constant contribution of the power classes to
// the same row.  n times the eigenvalue multiplicity equals the weighted sum
// of partial augmentations plus the offset.
int64_t character_row_weight(int64_t n, int64_t m, int64_t x, int64_t l);
int64_t character_row_offset(int64_t n, int64_t m, int64_t l,
                             const PowerData& powers);

// Extra linear equality imposed on the unknown vector: sum of coeff*eps = rhs.
struct ExtraEquality {
    std::map<int64_t, int64_t> coeff;
    int64_t rhs = 0;
};

struct HelpProblem {
    int64_t q = 0;
    int64_t n = 0;
    // Symmetric-power degrees m whose eigenvalue rows are imposed.  Empty
    // means the default range 1..(n/2 + 2).
    std::vector<int64_t> chars;
    bool normalize = true;
    // Power data used for the constant terms; empty means every u^d is taken
    // in the class of g0^d.
    PowerData powers;
    // When set, only eigenvalue rows (m, l) in this set are imposed.
    std::optional<std::set<std::pair<int64_t, int64_t>>> row_filter;
    std::vector<ExtraEquality> extra;
    // DFS node budget; 0 means the built-in default.
    int64_t node_cap = 0;

    std::vector<int64_t> effective_chars() const;
};

// Exact eigenvalue multiplicities for one candidate vector.  Rows follow
// problem.chars; columns are l = 0..n/2 (the remaining l are mirror images).
struct MultiplicityTable {
    int64_t n = 1;
    std::vector<int64_t> chars;
    std::vector<std::vector<mpq_class>> rows;

    const mpq_class& at(size_t char_index, int64_t l) const;
    // Multiplicity sum over all l in Z_n; equals the degree m + 1 whenever
    // the vector has augmentation 1.
    mpq_class full_sum(size_t char_index) const;
    bool nonnegative_integers() const;
};

mpq_class multiplicity(const HelpProblem& p, const PAVector& eps, int64_t m,
                       int64_t l);
MultiplicityTable multiplicity_table(const HelpProblem& p, const PAVector& eps);

struct CheckResult {
    bool pass = false;
    std::string reason;
    MultiplicityTable table;
};

// Full constraint check for one explicit vector: integrality, bounds and,
// when enabled, the degree-2 eigenvalue pinning.
CheckResult check_vector(const HelpProblem& p, const PAVector& eps);

struct Survivor {
    PAVector eps;
    bool trivial = false;
};

struct HelpReport {
    int64_t q = 0;
    int64_t n = 0;
    std::vector<int64_t> chars;
    bool normalize = true;
    std::string mode;
    std::string field_note;
    std::vector<Survivor> survivors;
    bool complete = false;
    std::string incomplete_reason;
    int64_t nodes = 0;
    int64_t node_cap = 0;

    bool all_trivial() const;
};

// Enumerates every integer vector satisfying the constraint rows of the
// problem.  The report is marked incomplete when the rows fail to bound the
// solution set or the node budget runs out.
HelpReport solve(const HelpProblem& p);

// Runs solve for every order n >= 3 dividing q-1 or q+1.
std::vector<HelpReport> scan_orders(int64_t q, bool normalize, int64_t node_cap);

}  // namespace zchelp
