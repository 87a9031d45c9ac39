#include <doctest.h>

#include "quadlabel/chain_stack.hpp"

using namespace quadlabel;

TEST_CASE("push and drain keep insertion order") {
    ChainStack s(16);
    REQUIRE(s.push({5, 4}));
    CHECK(s.size() == 1);
    auto one = s.drain();
    REQUIRE(one.size() == 1);
    CHECK(one[0] == StackPush{5, 4});
    CHECK(s.size() == 0);

    REQUIRE(s.push({4, 2}));
    REQUIRE(s.push({5, 4}));
    auto two = s.drain();
    REQUIRE(two.size() == 2);
    CHECK(two[0] == StackPush{4, 2});
    CHECK(two[1] == StackPush{5, 4});
}

TEST_CASE("empty drain yields nothing") {
    ChainStack s(4);
    CHECK(s.drain().empty());
}

TEST_CASE("capacity overflow is reported") {
    ChainStack s(2);
    CHECK(s.push({3, 1}));
    CHECK(s.push({4, 1}));
    CHECK(!s.push({5, 1}));
}

TEST_CASE("staircase entries resolve to the chain root via the table") {
    // Entries in detection order with their direct writes already present.
    EquivalenceTable t(10);
    t.record({4, 2});
    t.record({5, 4});
    t.record({7, 5});
    t.record({9, 7});

    ChainStack s(8);
    REQUIRE(s.push({4, 2}));
    REQUIRE(s.push({5, 4}));
    REQUIRE(s.push({7, 5}));
    REQUIRE(s.push({9, 7}));
    for (const StackPush& e : s.drain()) t.resolve_chain(e.larger, e.smaller);

    CHECK(t.at(4) == 2);
    CHECK(t.at(5) == 2);
    CHECK(t.at(7) == 2);
    CHECK(t.at(9) == 2);
    // One level suffices afterwards for every touched label.
    for (Label x : {Label(2), Label(4), Label(5), Label(7), Label(9)}) CHECK(t.at(t.at(x)) == t.at(x));
}

TEST_CASE("drain yields each entry exactly once") {
    ChainStack s(32);
    for (Label i = 0; i < 10; ++i) REQUIRE(s.push({i + 2, i + 1}));
    auto all = s.drain();
    REQUIRE(all.size() == 10);
    for (Label i = 0; i < 10; ++i) CHECK(all[i] == StackPush{i + 2, i + 1});
    CHECK(s.drain().empty());
}
