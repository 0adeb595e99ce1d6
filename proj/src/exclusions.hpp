#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "helpengine.hpp"
#include "realbasis.hpp"

namespace zchelp {

// ---- units of 2-power order ----------------------------------------------
//
// For n = 2^r the eigenvalue count of a unit splits into a leading term,
// carrying the unknown partial augmentations at the top level, and a settled
// term collecting the proper powers u^(2^j), each of which is pinned to the
// matching power of the generator by induction on the order.

// Trace over Q(zeta_{2^r})/Q of chi_m(g0^k) * zeta^(-l): the weight of the
// class of g0^k in 2^r times the eigenvalue count at shift l.
int64_t leading_coefficient(int64_t r, int64_t m, int64_t k, int64_t l);

// Weighted sum of leading coefficients over the noncentral folded residues.
int64_t leading_term(int64_t r, int64_t m, const PAVector& eps, int64_t l);

// Stacked traces of chi_m down the tower of 2-power subfields: the settled
// contribution of all proper powers to 2^r times the eigenvalue count.
int64_t settled_term(int64_t r, int64_t m, int64_t l);

// Same tower sum for the unit g0^a, whose 2^k-th power lies in the class of
// g0^(a*2^k); the three-argument form is the a = 1 case.
int64_t settled_term(int64_t r, int64_t m, int64_t a, int64_t l);

struct IdentityCheck {
    std::string label;
    bool pass = false;
    int64_t cases = 0;   // instances examined
    std::string detail;  // first mismatch; empty when pass
};

// Exercises the closed forms behind the 2-power order argument at n = 2^r:
// the values of the settled term on every shift class, the vanishing and
// telescoping tower sums, the half-period behaviour of both terms, and the
// counting constraints satisfied by the generator classes.  trials controls
// the number of randomly drawn vectors in the linearity checks.
std::vector<IdentityCheck> two_power_identities(int64_t r, int64_t trials,
                                                uint64_t seed);

// ---- conjugacy detection by weighted power sums ---------------------------

// lambda_x: sum over folded residues i of eps_i * (zeta^(ix) + zeta^(-ix)).
CycElt weighted_power_sum(int64_t n, const PAVector& eps, int64_t x);

// True when lambda_x equals zeta^(ax) + zeta^(-ax) for every x, which pins
// the vector to the class distribution of the a-th power of the generator.
bool matches_power(int64_t n, const PAVector& eps, int64_t a);

// ---- eigenvalue exponent profiles -----------------------------------------
//
// A candidate unit of order n maps, under the symmetric power of degree d,
// to a matrix with eigenvalue pairs zeta^(+-nu_i) indexed by
// X_d = {i : 1 <= i <= d, i = d mod 2} (plus a fixed eigenvalue 1 when d is
// even).  Powers of the unit are pinned to powers of the generator, which
// constrains the exponents nu_i.

struct EigenProfile {
    int64_t n = 1;
    int64_t d = 1;
    std::vector<int64_t> nu;  // folded exponents, one per index in X_d

    static std::vector<int64_t> index_set(int64_t d);
};

EigenProfile reference_profile(int64_t n, int64_t d);  // nu_i = i

// Whether every divisor c > 1 of n maps the profile onto the reference
// exponents: multiset {abs_rep(c*nu_i)} = multiset {abs_rep(c*i)}.
bool profile_admissible(const EigenProfile& p);

// All admissible profiles with exponents in [0, n/2].
std::vector<EigenProfile> admissible_profiles(int64_t n, int64_t d);

// Basis expansion of sum_{i in X_d} alpha_{nu_i} minus the same sum for the
// reference profile.  The fixed eigenvalue of even degrees cancels, so the
// gap only involves pair sums.
RealElt profile_gap(const EigenProfile& p);

// Basis expansion of sum_{i in X_d} alpha_i, the pair-sum part of the
// reference trace.
RealElt reference_alpha_part(int64_t n, int64_t d);

int64_t prime_count(int64_t d);             // distinct primes dividing d
int64_t gap_bound(int64_t d);               // 2 + 2^(prime_count(d) + 1)

// Degrees d in [2, limit] with d <= gap_bound(d); only these can carry a
// minimal disagreement between a unit and the generator.
std::vector<int64_t> unresolved_degrees(int64_t limit);

struct CaseReport {
    int64_t n = 0;
    int64_t d = 0;
    int64_t profiles = 0;          // admissible profiles examined
    int64_t max_abs_gap = 0;       // largest |coefficient| over all gaps
    int64_t bound_violations = 0;  // coefficients exceeding gap_bound(d)
    int64_t fatal_profiles = 0;    // gap divisible by d everywhere, >= d somewhere
    bool excluded = false;         // no fatal profile found
};

// Enumerates the admissible profiles at (n, d) and tests every gap against
// the pattern a genuine minimal disagreement of degree d would have to
// produce: all coefficients divisible by d and at least one of size >= d.
// Requires d >= 2 and d a proper divisor of n.
CaseReport exclude_case(int64_t n, int64_t d);

// Orders n <= limit not settled by the general reductions: multiples of 4
// that are neither prime powers nor 12.
std::vector<int64_t> open_orders(int64_t limit);

// Gap coefficient at a single basis residue via the compact coefficient
// formula, term by term over the index set, instead of the full basis
// expansion.  At beta-active residues the compact formula reads the sign
// from the representative as given, so this can disagree with the folded
// coefficient computed by profile_gap.
int64_t compact_gap_coeff(const EigenProfile& p, int64_t b);

// Outcome of running the degree-2 exclusion through both routes at one
// order: the exact route expands the trace gap over the basis, the compact
// route evaluates the coefficient formula at every basis residue.  When the
// verdicts differ, the order ends up in degree_two_discrepancies and needs
// the multiplicity engine instead of the coefficient argument.
struct DualRouteReport {
    int64_t n = 0;
    int64_t profiles = 0;
    int64_t exact_max_gap = 0;
    int64_t compact_max_gap = 0;
    bool exact_excluded = false;
    bool compact_excluded = false;
};

// Both degree-2 routes for every open order <= limit.
std::vector<DualRouteReport> degree_two_scan(int64_t limit);

// Orders where the two routes disagree.
std::vector<int64_t> degree_two_discrepancies(int64_t limit);

// Equality rows pinning every eigenvalue multiplicity of the degree-d
// symmetric power to the given exponent profile, one row per shift in
// [0, n/2], assuming the powers of the candidate follow the generator.
// Feeding these to the solver tests a single profile against the full
// multiplicity machinery of all the other characters.
std::vector<ExtraEquality> profile_pin(const EigenProfile& p);

}  // namespace zchelp
