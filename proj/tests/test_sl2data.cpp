#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "sl2data.hpp"

using namespace zchelp;

namespace {

// Order-insensitive view of a class list: multiset of (order, size) pairs.
std::map<std::pair<int64_t, int64_t>, int64_t> shape(const ClassTable& tab) {
    std::map<std::pair<int64_t, int64_t>, int64_t> out;
    for (const ConjClass& c : tab.classes)
        ++out[{c.element_order, c.size}];
    return out;
}

}  // namespace

TEST_CASE("group parameters") {
    GroupParams g(9);
    CHECK(g.t == 3);
    CHECK(g.f == 2);
    CHECK(g.order() == 720);
    CHECK(GroupParams(11).order() == 1320);
    CHECK_THROWS_WITH(GroupParams(15), "q must be an odd prime power");
    CHECK_THROWS_WITH(GroupParams(8), "q must be an odd prime power");
}

TEST_CASE("symbolic tables have the expected shape") {
    for (int64_t q : {3, 5, 7, 9, 11, 13, 25, 27}) {
        ClassTable tab = class_table(q);
        CHECK((int64_t)tab.classes.size() == q + 4);
        int64_t total = 0;
        for (const ConjClass& c : tab.classes) total += c.size;
        CHECK(total == GroupParams(q).order());
    }
}

TEST_CASE("central shift pairing is an involution matching orders") {
    for (int64_t q : {5, 7, 9, 11, 13}) {
        ClassTable tab = class_table(q);
        for (const ConjClass& c : tab.classes) {
            const ConjClass& p = tab.by_label(c.central_shift_partner);
            CHECK(p.central_shift_partner == c.label);
            CHECK(p.size == c.size);
        }
    }
}

TEST_CASE("brute force agreement for small fields") {
    for (int64_t q : {3, 5, 7, 9}) {
        ClassTable sym = class_table(q);
        ClassTable brute = brute_force_classes(q);
        CHECK(shape(sym) == shape(brute));
    }
}

TEST_CASE("brute force partner classes negate the representative") {
    ClassTable brute = brute_force_classes(5);
    for (const ConjClass& c : brute.classes) {
        const ConjClass& p = brute.by_label(c.central_shift_partner);
        CHECK(p.central_shift_partner == c.label);
    }
}

TEST_CASE("oracle scale guard") {
    CHECK_THROWS_WITH((void)brute_force_classes(17), "oracle scale exceeded");
}

TEST_CASE("cyclic frames") {
    CyclicFrame fr = cyclic_frame(11, 12);
    CHECK_FALSE(fr.split);
    CHECK(fr.label_of(0) == "1");
    CHECK(fr.label_of(6) == "J");
    CHECK(fr.label_of(1) == "ns1");
    CHECK(fr.label_of(5) == "ns5");

    CyclicFrame fs = cyclic_frame(13, 12);
    CHECK(fs.split);
    CHECK(fs.label_of(1) == "s1");

    CyclicFrame f8 = cyclic_frame(17, 16);
    CHECK(f8.split);
    CHECK(f8.label_of(4) == "s4");

    CHECK_THROWS_WITH((void)cyclic_frame(11, 8), "order not represented");
}

TEST_CASE("order availability") {
    CHECK(order_represented(11, 12));
    CHECK(order_represented(11, 10));
    CHECK(order_represented(11, 11));
    CHECK(order_represented(11, 22));
    CHECK_FALSE(order_represented(11, 8));
    CHECK(order_represented(9, 8));
    CHECK(order_represented(9, 10));
    CHECK_FALSE(order_represented(9, 12));
}

TEST_CASE("smallest group carrying a semisimple element of each order") {
    CHECK(smallest_q_with_order(1) == 3);
    CHECK(smallest_q_with_order(3) == 5);
    CHECK(smallest_q_with_order(4) == 3);
    CHECK(smallest_q_with_order(8) == 7);
    CHECK(smallest_q_with_order(16) == 17);
    CHECK(smallest_q_with_order(32) == 31);
    CHECK(smallest_q_with_order(64) == 127);
    CHECK(smallest_q_with_order(512) == 3583);
    for (int64_t n : {3, 8, 20, 24, 512}) {
        int64_t q = smallest_q_with_order(n);
        CHECK(((q - 1) % n == 0 || (q + 1) % n == 0));
    }
    CHECK_THROWS_WITH(smallest_q_with_order(0), "order must be positive");
}

TEST_CASE("restricted symmetric power traces") {
    CHECK(brauer_value(1, 12, 1) == alpha_elt(12, 1));
    CHECK(brauer_value(2, 12, 1) ==
          CycElt::constant(12, 1) + alpha_elt(12, 2));
    CHECK(brauer_value(3, 12, 2) == alpha_elt(12, 2) + alpha_elt(12, 6));
    CHECK(brauer_value(1, 12, 0) == CycElt::constant(12, 2));
    CHECK(brauer_value(2, 12, 6) == CycElt::constant(12, 3));
}

TEST_CASE("field notes") {
    CHECK(class_table(7).field_note == "prime field");
    CHECK(class_table(9).field_note == "F9 = F3[w]/(w^2+1)");
}
