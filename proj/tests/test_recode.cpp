#include <doctest.h>

#include <random>

#include "quadlabel/equivalence.hpp"
#include "quadlabel/recode.hpp"

using namespace quadlabel;

TEST_CASE("empty pending set is the identity") {
    MergerList none;
    LabelGroup g;
    g.labels = {7, 0, 7, 2};
    CHECK(recode_with_pending(g, none) == g);
}

TEST_CASE("pending substitution replaces only the larger label") {
    MergerList one;
    one.push({7, 1, false});
    LabelGroup g;
    g.labels = {7, 0, 7, 2};
    CHECK(recode_with_pending(g, one).labels == std::array<Label, 4>{1, 0, 1, 2});
}

TEST_CASE("both pending mergers apply simultaneously") {
    MergerList two;
    two.push({4, 1, false});
    two.push({7, 1, false});
    LabelGroup g;
    g.labels = {4, 7, 1, 0};
    CHECK(recode_with_pending(g, two).labels == std::array<Label, 4>{1, 1, 1, 0});
}

TEST_CASE("bypass recode commutes with committing to the table") {
    // Over inputs shaped like reachable engine state: groups carry current
    // labels (table roots), and pending mergers join roots.
    std::mt19937 rng(21);
    for (int round = 0; round < 200; ++round) {
        EquivalenceTable t(6);
        for (int i = 0; i < 20; ++i) {
            const Label addr = 2 + rng() % (t.max_label() - 1);
            if (t.at(addr) != addr) continue;
            const Label data = t.root_of(rng() % addr);
            if (data >= addr) continue;
            t.record({addr, data});
        }
        MergerList pending;
        for (int i = 0; i < 2; ++i) {
            const Label larger = t.root_of(2 + rng() % (t.max_label() - 1));
            const Label smaller = t.root_of(rng() % (larger ? larger : 1));
            if (larger <= smaller) continue;
            if (pending.contains_pair(larger, smaller)) continue;
            if (pending.count == 1 && pending[0].larger == larger) continue;
            pending.push({larger, smaller, false});
        }

        EquivalenceTable committed = t;
        for (const Merger& m : pending) committed.record({m.larger, m.smaller});

        LabelGroup g;
        for (auto& l : g.labels) l = t.root_of(rng() % (t.max_label() + 1));
        CHECK(recode_with_pending(t.recode(g), pending) == committed.recode(g));
    }
}
