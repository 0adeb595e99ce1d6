#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "numbers.hpp"

namespace zchelp {

// Label of one basis element of the ring of integers of the maximal real
// subfield of Q(zeta_n): either the constant 1 (only present when n is a
// power of 2) or the pair sum alpha_rep = zeta^rep + zeta^-rep.
struct BasisLabel {
    bool is_one = false;
    int64_t rep = 0;  // in [1, n/2) for pair labels

    bool operator<(const BasisLabel& o) const {
        if (is_one != o.is_one) return is_one;  // "1" sorts first
        return rep < o.rep;
    }
    bool operator==(const BasisLabel& o) const {
        return is_one == o.is_one && rep == o.rep;
    }
    std::string str() const { return is_one ? "1" : "a" + std::to_string(rep); }
};

// Integral combination of basis labels.
struct RealElt {
    int64_t n = 1;
    std::map<BasisLabel, mpz_class> coeffs;  // zero entries omitted

    mpz_class coeff(const BasisLabel& l) const;
    bool operator==(const RealElt& o) const { return n == o.n && coeffs == o.coeffs; }
    CycElt to_cyc() const;
};

// The distinguished set of residues whose pair sums form a basis of the
// real subfield's ring of integers.  For 2-power n the residue n/2 is a
// member of the residue set but its (rational) pair sum is replaced by
// the constant 1 in the label list, keeping the label count at phi(n)/2.
struct RealBasis {
    int64_t n;
    std::vector<int64_t> residues;   // ascending, in [0, n)
    std::vector<BasisLabel> labels;  // ascending, size phi(n)/2 for n >= 3

    bool has_residue(int64_t b) const;
};

bool basis_residue_member(const Modulus& n, int64_t x);
const RealBasis& real_basis(int64_t n);  // cached, n >= 1

// Signed expansion of a single root of unity over the basis residues:
// zeta^e = sum of sign_b * zeta^b over the returned terms.  For 2-power n
// and |e : n| = n/4 the expansion is empty (the pair sum vanishes there;
// single roots at that boundary are not in the span of the residues).
struct MonomialTerm {
    int64_t b;
    int sign;  // +1 or -1
};
std::vector<MonomialTerm> expand_monomial(int64_t n, int64_t e);

// Expansion of a real element in the basis.  Throws if the input is not
// fixed by conjugation.  Defined through expand_monomial, so it does not
// depend on any representative convention.
RealElt expand_to_basis(const CycElt& x);

// Direct evaluation of the basis coefficient of alpha_i at one label,
// without going through a full expansion.  Agrees with expand_to_basis
// (cross-checked by tests); the pair {i, -i} is handled symmetrically so
// the value does not depend on which residue of the label's pair is used.
mpz_class closed_form_coeff(int64_t n, int64_t i, const BasisLabel& label);

// Compact-formula coefficient kappa * mu(gamma) * beta * delta of alpha_i
// at a single basis residue b, evaluated with the representative i exactly
// as given.  Orientation-sensitive: beta is read at (b, i) even when only
// b = -i holds modulo n/gamma_bar(i), so at beta-active residues the value
// can differ in sign from the folded coefficient of b's pair.  Kept as a
// separate accessor so the two routes can be compared; closed_form_coeff
// and expand_to_basis are the authoritative ones.
int64_t compact_coeff(int64_t n, int64_t i, int64_t b);

// Exact rational solver used as the independent oracle: expresses real
// elements in a caller-supplied candidate basis by Gaussian elimination
// over Q on power-basis coordinates.  Rejects candidate sets that are not
// a basis of the lattice they are claimed to span.
class BasisSolver {
  public:
    // Columns are arbitrary elements of Z[zeta_n]; one per candidate.
    BasisSolver(int64_t n, const std::vector<CycElt>& candidates);

    size_t rank() const { return rank_; }
    bool is_independent() const { return rank_ == ncols_; }

    // Rational coordinates of x in the candidate set, or nullopt when x is
    // outside the span.  Throws if the candidates are dependent.
    std::optional<std::vector<mpq_class>> solve(const CycElt& x) const;

    // Solve and require integer coordinates (the lattice-basis property).
    std::optional<std::vector<mpz_class>> solve_integral(const CycElt& x) const;

  private:
    int64_t n_;
    size_t nrows_, ncols_, rank_;
    std::vector<std::vector<mpq_class>> reduced_;    // RREF of the column matrix
    std::vector<std::vector<mpq_class>> transform_;  // row ops: reduced = T * A
    std::vector<size_t> pivot_col_;                  // per reduced row
};

// Oracle wrapper over the distinguished basis of real_basis(n); built once
// per n and cached.  solve() additionally certifies independence.
const BasisSolver& basis_oracle(int64_t n);
std::vector<mpz_class> oracle_expand(const CycElt& x);  // coords over labels

}  // namespace zchelp
