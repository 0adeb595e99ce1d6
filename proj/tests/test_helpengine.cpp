#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpengine.hpp"

using namespace zchelp;

namespace {

HelpProblem base_problem(int64_t q, int64_t n) {
    HelpProblem p;
    p.q = q;
    p.n = n;
    return p;
}

}  // namespace

TEST_CASE("partial augmentation vectors") {
    PAVector v = PAVector::indicator(12, -5);
    CHECK(v.at(5) == 1);
    CHECK(v.at(7) == 1);
    CHECK(v.at(1) == 0);
    CHECK(v.augmentation() == 1);
    CHECK(v.is_generator_indicator());

    PAVector w = PAVector::indicator(12, 4);
    CHECK(w.augmentation() == 1);
    CHECK_FALSE(w.is_generator_indicator());

    PAVector z;
    z.n = 12;
    z.set(1, 2);
    z.set(5, -1);
    CHECK(z.augmentation() == 1);
    CHECK_FALSE(z.is_generator_indicator());
    z.set(1, 0);
    CHECK(z.eps.size() == 1);
}

TEST_CASE("power data of element") {
    PowerData pd = power_data_of_element(12, 5);
    CHECK(pd.at(2).at(2) == 1);
    CHECK(pd.at(3).at(3) == 1);
    CHECK(pd.at(4).at(4) == 1);
    CHECK(pd.at(6).at(6) == 1);
    CHECK(pd.at(12).at(0) == 1);
    CHECK(pd.size() == 5);

    PowerData pd3 = power_data_of_element(16, 3);
    CHECK(pd3.at(2).at(6) == 1);
    CHECK(pd3.at(4).at(4) == 1);
    CHECK(pd3.at(8).at(8) == 1);
    CHECK(pd3.at(16).at(0) == 1);
}

TEST_CASE("frozen multiplicity values at order 12") {
    HelpProblem p = base_problem(11, 12);
    p.normalize = false;
    PAVector e1 = PAVector::indicator(12, 1);
    CHECK(multiplicity(p, e1, 1, 1) == 1);
    CHECK(multiplicity(p, e1, 1, 0) == 0);
    CHECK(multiplicity(p, e1, 1, 5) == 0);
    CHECK(multiplicity(p, e1, 2, 2) == 1);

    PAVector e5 = PAVector::indicator(12, 5);
    CHECK(multiplicity(p, e5, 1, 5) == 1);
    CHECK(multiplicity(p, e5, 1, 1) == 0);

    MultiplicityTable tab = multiplicity_table(p, e1);
    for (size_t mi = 0; mi < tab.chars.size(); ++mi)
        CHECK(tab.full_sum(mi) == tab.chars[mi] + 1);
    CHECK(tab.nonnegative_integers());
}

TEST_CASE("vector checks") {
    HelpProblem p = base_problem(11, 12);
    CHECK(check_vector(p, PAVector::indicator(12, 1)).pass);

    CheckResult r5 = check_vector(p, PAVector::indicator(12, 5));
    CHECK_FALSE(r5.pass);

    p.normalize = false;
    CHECK(check_vector(p, PAVector::indicator(12, 5)).pass);

    PAVector bad;
    bad.n = 12;
    bad.set(1, 2);
    CHECK_THROWS_WITH((void)check_vector(p, bad), "augmentation must be 1");

    PAVector central;
    central.n = 12;
    central.set(6, 1);
    CHECK_THROWS_WITH((void)check_vector(p, central),
                      "central classes must carry zero");

    PAVector mixed;
    mixed.n = 12;
    mixed.set(1, 2);
    mixed.set(5, -1);
    CHECK_FALSE(check_vector(p, mixed).pass);
}

TEST_CASE("solve pins the generator class under normalization") {
    HelpReport rep = solve(base_problem(7, 8));
    CHECK(rep.complete);
    REQUIRE(rep.survivors.size() == 1);
    CHECK(rep.survivors[0].eps == PAVector::indicator(8, 1));
    CHECK(rep.survivors[0].trivial);
    CHECK(rep.all_trivial());
    CHECK(rep.mode == "inductive");
}

TEST_CASE("solve without normalization keeps the generator orbit") {
    HelpProblem p = base_problem(7, 8);
    p.normalize = false;
    HelpReport rep = solve(p);
    CHECK(rep.complete);
    REQUIRE(rep.survivors.size() == 2);
    CHECK(rep.survivors[0].eps == PAVector::indicator(8, 1));
    CHECK(rep.survivors[1].eps == PAVector::indicator(8, 3));
    CHECK(rep.all_trivial());
}

TEST_CASE("composite order instances close") {
    for (auto [q, n] : std::vector<std::pair<int64_t, int64_t>>{
             {11, 12}, {13, 12}, {9, 10}, {9, 8}}) {
        HelpReport rep = solve(base_problem(q, n));
        CHECK(rep.complete);
        CHECK(rep.all_trivial());
        REQUIRE(rep.survivors.size() == 1);
        CHECK(rep.survivors[0].eps == PAVector::indicator(n, 1));
    }
}

TEST_CASE("focused order 12 run with lifted class constraints") {
    HelpProblem p = base_problem(11, 12);
    p.normalize = false;
    p.chars = {1};
    p.row_filter = std::set<std::pair<int64_t, int64_t>>{{1, 1}, {1, 5}};
    p.extra.push_back({{{1, 1}, {5, 1}}, 1});
    p.extra.push_back({{{2, 1}}, 0});
    p.extra.push_back({{{3, 1}}, 0});
    p.extra.push_back({{{4, 1}}, 0});
    HelpReport rep = solve(p);
    CHECK(rep.complete);
    REQUIRE(rep.survivors.size() == 2);
    CHECK(rep.survivors[0].eps == PAVector::indicator(12, 1));
    CHECK(rep.survivors[1].eps == PAVector::indicator(12, 5));
    CHECK(rep.all_trivial());

    // The same survivor set as the unrestricted run without the pins.
    HelpProblem full = base_problem(11, 12);
    full.normalize = false;
    HelpReport frep = solve(full);
    CHECK(frep.complete);
    REQUIRE(frep.survivors.size() == 2);
    CHECK(frep.survivors[0].eps == rep.survivors[0].eps);
    CHECK(frep.survivors[1].eps == rep.survivors[1].eps);
}

TEST_CASE("weak character sets are reported incomplete") {
    HelpProblem p = base_problem(11, 12);
    p.normalize = false;
    p.chars = {1};
    HelpReport rep = solve(p);
    CHECK_FALSE(rep.complete);
    CHECK(rep.incomplete_reason == "rows do not bound the solution set");
    CHECK(rep.survivors.empty());
}

TEST_CASE("node budget is honoured") {
    HelpProblem p = base_problem(11, 12);
    p.node_cap = 1;
    HelpReport rep = solve(p);
    CHECK_FALSE(rep.complete);
    CHECK(rep.incomplete_reason == "node budget exhausted");
}

TEST_CASE("custom power data matches a generator power") {
    HelpProblem p = base_problem(17, 16);
    p.normalize = false;
    p.powers = power_data_of_element(16, 3);
    CHECK(check_vector(p, PAVector::indicator(16, 3)).pass);
    CHECK(p.powers != power_data_of_element(16, 1));

    HelpProblem ind = base_problem(17, 16);
    ind.normalize = false;
    CHECK_FALSE(check_vector(ind, PAVector::indicator(16, 3)).pass);
}

TEST_CASE("power data validation") {
    HelpProblem p = base_problem(11, 12);
    p.powers = power_data_of_element(12, 1);
    p.powers.erase(6);
    CHECK_THROWS_WITH((void)solve(p), "power data missing a divisor");

    p.powers = power_data_of_element(12, 1);
    p.powers[2][2] = 2;
    CHECK_THROWS_WITH((void)solve(p), "power data must have augmentation 1");

    p.powers = power_data_of_element(12, 1);
    p.powers[6].clear();
    p.powers[6][1] = 1;
    CHECK_THROWS_WITH((void)solve(p),
                      "power data incompatible with the power map");
}

TEST_CASE("scope guards") {
    CHECK_THROWS_WITH((void)solve(base_problem(11, 11)),
                      "modular order out of scope");
    CHECK_THROWS_WITH((void)solve(base_problem(11, 22)),
                      "modular order out of scope");
    CHECK_THROWS_WITH((void)solve(base_problem(11, 8)), "order not represented");
    CHECK_THROWS_WITH((void)solve(base_problem(15, 4)),
                      "q must be an odd prime power");
    CHECK_THROWS_WITH((void)solve(base_problem(11, 2)),
                      "order must be at least 3");
}

TEST_CASE("order scan covers both torus chains") {
    std::vector<HelpReport> reps = scan_orders(7, true, 0);
    REQUIRE(reps.size() == 4);
    CHECK(reps[0].n == 3);
    CHECK(reps[1].n == 4);
    CHECK(reps[2].n == 6);
    CHECK(reps[3].n == 8);
    for (const HelpReport& r : reps) {
        CHECK(r.complete);
        CHECK(r.all_trivial());
    }
}
