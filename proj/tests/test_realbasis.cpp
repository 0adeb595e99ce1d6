#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cyclotomic.hpp"
#include "numbers.hpp"
#include "realbasis.hpp"

using namespace zchelp;

namespace {

std::vector<int64_t> label_reps(const RealBasis& rb) {
    std::vector<int64_t> reps;
    for (const BasisLabel& lab : rb.labels)
        if (!lab.is_one) reps.push_back(lab.rep);
    return reps;
}

}  // namespace

TEST_CASE("residue sets") {
    CHECK(real_basis(8).residues == std::vector<int64_t>{3, 4, 5});
    CHECK(real_basis(12).residues == std::vector<int64_t>{1, 2, 10, 11});
    CHECK(real_basis(24).residues ==
          std::vector<int64_t>{4, 5, 10, 11, 13, 14, 19, 20});
    CHECK(real_basis(16).residues ==
          std::vector<int64_t>{5, 6, 7, 8, 9, 10, 11});
    for (int64_t n : {8, 12, 16, 20, 24, 36, 60})
        CHECK(real_basis(n).labels.size() == euler_phi(n) / 2);
}

TEST_CASE("label sets") {
    RealBasis rb8 = real_basis(8);
    REQUIRE(rb8.labels.size() == 2);
    CHECK(rb8.labels[0].is_one);
    CHECK(label_reps(rb8) == std::vector<int64_t>{3});

    RealBasis rb12 = real_basis(12);
    CHECK_FALSE(rb12.labels[0].is_one);
    CHECK(label_reps(rb12) == std::vector<int64_t>{1, 2});

    RealBasis rb16 = real_basis(16);
    CHECK(rb16.labels[0].is_one);
    CHECK(label_reps(rb16) == std::vector<int64_t>{5, 6, 7});

    CHECK(label_reps(real_basis(24)) == std::vector<int64_t>{4, 5, 10, 11});
}

TEST_CASE("monomial expansion") {
    auto terms = expand_monomial(12, 3);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].b == 1);
    CHECK(terms[0].sign == 1);
    CHECK(terms[1].b == 11);
    CHECK(terms[1].sign == -1);

    terms = expand_monomial(12, 5);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].b == 11);
    CHECK(terms[0].sign == -1);

    terms = expand_monomial(16, 2);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].b == 10);
    CHECK(terms[0].sign == -1);

    CHECK(expand_monomial(16, 4).empty());

    terms = expand_monomial(24, 6);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].b == 10);
    CHECK(terms[0].sign == 1);
    CHECK(terms[1].b == 14);
    CHECK(terms[1].sign == -1);

    terms = expand_monomial(24, 1);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].b == 13);
    CHECK(terms[0].sign == -1);
}

TEST_CASE("expansion of real elements") {
    RealElt r = expand_to_basis(alpha_elt(12, 4));
    CHECK(r.coeff(BasisLabel{false, 2}) == -1);
    CHECK(r.coeffs.size() == 1);

    r = expand_to_basis(alpha_elt(12, 3));
    CHECK(r.coeffs.empty());

    r = expand_to_basis(alpha_elt(12, 5));
    CHECK(r.coeff(BasisLabel{false, 1}) == -1);

    r = expand_to_basis(alpha_elt(8, 1));
    CHECK(r.coeff(BasisLabel{false, 3}) == -1);
    CHECK(r.coeffs.size() == 1);

    r = expand_to_basis(alpha_elt(8, 2));
    CHECK(r.coeffs.empty());

    r = expand_to_basis(CycElt::constant(8, 1));
    CHECK(r.coeff(BasisLabel{true, 0}) == 1);
    CHECK(r.coeffs.size() == 1);

    r = expand_to_basis(alpha_elt(24, 3));
    CHECK(r.coeff(BasisLabel{false, 5}) == -1);
    CHECK(r.coeff(BasisLabel{false, 11}) == -1);
    CHECK(r.coeffs.size() == 2);

    r = expand_to_basis(alpha_elt(24, 6));
    CHECK(r.coeffs.empty());

    r = expand_to_basis(CycElt::constant(24, 2));
    CHECK(r.coeff(BasisLabel{false, 4}) == 2);
    CHECK(r.coeffs.size() == 1);

    r = expand_to_basis(alpha_elt(16, 2));
    CHECK(r.coeff(BasisLabel{false, 6}) == -1);

    r = expand_to_basis(alpha_elt(16, 4));
    CHECK(r.coeffs.empty());

    CHECK_THROWS_WITH((void)expand_to_basis(CycElt::monomial(12, 1)),
                      "element is not real");
}

TEST_CASE("round trip through the quadratic ring") {
    for (int64_t n : {8, 12, 16, 20, 24, 30, 36}) {
        for (int64_t x = 0; 2 * x <= n; ++x) {
            RealElt r = expand_to_basis(alpha_elt(n, x));
            CHECK(r.to_cyc() == alpha_elt(n, x));
        }
    }
}

TEST_CASE("closed form matches expansion") {
    for (int64_t n : {8, 12, 16, 20, 24, 30, 36, 40, 60}) {
        RealBasis rb = real_basis(n);
        for (int64_t i = 0; i <= n; ++i) {
            RealElt r = expand_to_basis(alpha_elt(n, i));
            for (const BasisLabel& lab : rb.labels) {
                CHECK(r.coeff(lab) == closed_form_coeff(n, i, lab));
            }
        }
    }
}

TEST_CASE("compact formula reads the sign from the given representative") {
    // The pair {10, 14} at n = 24 carries alpha_2 with coefficient -1.  The
    // compact formula recovers that value at the residue congruent to +2
    // modulo 12 and flips the sign at the other one.
    CHECK(expand_to_basis(alpha_elt(24, 2)).coeff(BasisLabel{false, 10}) == -1);
    CHECK(compact_coeff(24, 2, 14) == -1);
    CHECK(compact_coeff(24, 2, 10) == 1);
    CHECK(compact_coeff(24, 5, 5) == 1);
    CHECK(compact_coeff(24, 1, 11) == -1);
    CHECK(compact_coeff(24, 1, 13) == -1);

    // At residues matching exactly one of the two congruences with the plus
    // sign, the compact value is the true folded coefficient.
    for (int64_t n = 3; n <= 60; ++n) {
        Modulus m(n);
        for (int64_t i = 0; i < n; ++i) {
            RealElt full = expand_to_basis(alpha_elt(n, i));
            int64_t step = n / radical_gamma_bar(m, i);
            for (const BasisLabel& lab : real_basis(n).labels) {
                if (lab.is_one) continue;
                for (int64_t b : {lab.rep, n - lab.rep}) {
                    bool plus = ((b - i) % step + step) % step == 0;
                    bool minus = ((b + i) % step + step) % step == 0;
                    if (plus && !minus && kappa_weight(n, i) == 1)
                        CHECK(full.coeff(lab) == compact_coeff(n, i, b));
                }
            }
        }
    }
}

TEST_CASE("independence oracle certifies the basis") {
    for (int64_t n : {3, 4, 8, 12, 16, 24, 36, 60}) {
        const BasisSolver& oracle = basis_oracle(n);
        CHECK(oracle.is_independent());
        CHECK(oracle.rank() == euler_phi(n) / 2);
    }
}

TEST_CASE("oracle expansion agrees with the combinatorial expansion") {
    for (int64_t n : {8, 12, 24, 36}) {
        RealBasis rb = real_basis(n);
        for (int64_t x = 0; 2 * x <= n; ++x) {
            std::vector<mpz_class> oracle = oracle_expand(alpha_elt(n, x));
            RealElt direct = expand_to_basis(alpha_elt(n, x));
            REQUIRE(oracle.size() == rb.labels.size());
            for (size_t i = 0; i < rb.labels.size(); ++i)
                CHECK(oracle[i] == direct.coeff(rb.labels[i]));
        }
    }
}

TEST_CASE("oracle rejects dependent candidate sets") {
    std::vector<CycElt> candidates = {alpha_elt(12, 1), alpha_elt(12, 5)};
    BasisSolver solver(12, candidates);
    CHECK_FALSE(solver.is_independent());
}
