#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "test_support.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/surface.hpp"

using namespace vknot;

namespace {

std::vector<Move> moves_of_kind(const GaussDiagram& d, MoveKind kind, Regime regime,
                                int cap = kNoInsertionCap) {
    std::vector<Move> out;
    for (const Move& m : enumerate_moves(d, regime, cap))
        if (m.kind == kind) out.push_back(m);
    return out;
}

}  // namespace

TEST_CASE("R1Del removes an isolated kink") {
    GaussDiagram kink = parse("O1+U1+");
    auto dels = moves_of_kind(kink, MoveKind::R1Del, Regime::Virtual);
    REQUIRE(dels.size() == 1);
    CHECK(serialize(apply_move(kink, dels[0])) == "@");

    // the kink chord of a larger diagram is found too, across the basepoint
    GaussDiagram wrap = parse("U1+O2+U2+O1+");  // arrow 1 endpoints at slots 3,0
    auto wrap_dels = moves_of_kind(wrap, MoveKind::R1Del, Regime::Virtual);
    REQUIRE(wrap_dels.size() >= 1);
    bool found = false;
    for (const Move& m : wrap_dels)
        if (serialize(apply_move(wrap, m)) == "O1+U1+") found = true;
    CHECK(found);
}

TEST_CASE("R2Del removes an opposing adjacent pair") {
    GaussDiagram d = parse("O1+U2-U1+O2-");
    auto dels = moves_of_kind(d, MoveKind::R2Del, Regime::Virtual);
    REQUIRE(dels.size() == 1);
    CHECK(serialize(apply_move(d, dels[0])) == "@");

    // equal signs admit no R2Del
    CHECK(moves_of_kind(parse("O1+U2+U1+O2+"), MoveKind::R2Del, Regime::Virtual).empty());

    // across two circles
    GaussDiagram link = parse("O1+O2-;U1+U2-");
    auto link_dels = moves_of_kind(link, MoveKind::R2Del, Regime::Virtual);
    REQUIRE(link_dels.size() == 1);
    CHECK(serialize(apply_move(link, link_dels[0])) == "@;@");
}

TEST_CASE("the unknot admits only insertion moves") {
    GaussDiagram unknot = parse("@");
    auto all = enumerate_moves(unknot, Regime::Virtual);
    // 4 R1Add variants; 8 R2Add variants on the single arc (head pair
    // before or after the tail pair, head order, leading sign)
    CHECK(all.size() == 12);
    CHECK(moves_of_kind(unknot, MoveKind::R1Add, Regime::Virtual).size() == 4);
    CHECK(moves_of_kind(unknot, MoveKind::R2Add, Regime::Virtual).size() == 8);
    for (const Move& m : all) {
        GaussDiagram e = apply_move(unknot, m);
        CHECK(component_count(e) == 1);
    }
}

TEST_CASE("insertion cap truncates variants per arc") {
    GaussDiagram unknot = parse("@");
    CHECK(enumerate_moves(unknot, Regime::Virtual, 2).size() == 4);  // 2 R1Add + 2 R2Add
    CHECK(enumerate_moves(unknot, Regime::Virtual, 0).empty());
}

TEST_CASE("R3 slides the derived triangle configuration") {
    // [Oa Ob][Ua Oc][Ub Uc], all negative: one planar slide site.
    GaussDiagram tri = parse("O1-O2-U1-O3-U2-U3-");
    auto sites = moves_of_kind(tri, MoveKind::R3, Regime::Virtual);
    REQUIRE(sites.size() == 1);
    GaussDiagram after = apply_move(tri, sites[0]);
    CHECK(bracket(after) == bracket(tri));
    CHECK(writhe(after) == writhe(tri));
    CHECK(odd_writhe(after) == odd_writhe(tri));
    // self-inverse at the same site
    CHECK(apply_move(after, sites[0]) == tri);

    // flipping one sign breaks the slide relation: no site, and a forced
    // application is rejected
    GaussDiagram bad = parse("O1-O2-U1-O3+U2-U3+");
    CHECK(moves_of_kind(bad, MoveKind::R3, Regime::Virtual).empty());
    CHECK_THROWS_AS(apply_move(bad, sites[0]), PreconditionError);

    // the minimal classical trefoil diagram has no R3 site
    CHECK(moves_of_kind(parse("O1+U2+O3+U1+O2+U3+"), MoveKind::R3, Regime::Virtual).empty());
}

TEST_CASE("forbidden moves swap adjacent same-passage endpoints") {
    GaussDiagram vt = parse("O1+O2+U1+U2+");
    auto fo = moves_of_kind(vt, MoveKind::ForbiddenOver, Regime::AllForbidden);
    auto fu = moves_of_kind(vt, MoveKind::ForbiddenUnder, Regime::AllForbidden);
    REQUIRE(fo.size() == 1);
    REQUIRE(fu.size() == 1);
    CHECK(serialize(apply_move(vt, fo[0])) == "O1+O2+U2+U1+");
    // writhe and arrow count preserved; shadow chord set preserved
    CHECK(writhe(apply_move(vt, fo[0])) == writhe(vt));
    CHECK(apply_move(vt, fo[0]).arrow_count() == vt.arrow_count());

    // regime filtering
    CHECK(moves_of_kind(vt, MoveKind::ForbiddenOver, Regime::Virtual).empty());
    CHECK(moves_of_kind(vt, MoveKind::ForbiddenUnder, Regime::Welded).empty());
    CHECK(!moves_of_kind(vt, MoveKind::ForbiddenOver, Regime::Welded).empty());
}

TEST_CASE("every enumerated move reverses exactly") {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        GaussDiagram d = vktest::random_diagram(rng, t % 6, 3);
        for (const Move& m : enumerate_moves(d, Regime::AllForbidden, 4)) {
            GaussDiagram e = apply_move(d, m);
            CHECK(apply_move(e, inverse_move(d, m)) == d);
            ++checked;
        }
    }
    CHECK(checked > 10000);
}

TEST_CASE("enumerate is complete for R1Del sites") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 300; ++t) {
        GaussDiagram d = vktest::random_diagram(rng, 1 + t % 6, 2);
        const ArrowEnds ends = arrow_ends(d);
        int brute = 0;
        for (int a = 0; a < d.arrow_count(); ++a) {
            const Position tail = ends.tail[a], head = ends.head[a];
            if (tail.circle != head.circle) continue;
            const int len = d.circle_length(tail.circle);
            const int diff = (head.slot - tail.slot + len) % len;
            if (diff == 1 || diff == len - 1) ++brute;
        }
        CHECK(static_cast<int>(moves_of_kind(d, MoveKind::R1Del, Regime::Virtual).size()) ==
              brute);
    }
}

TEST_CASE("enumerate is complete for R2Del sites") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; ++t) {
        GaussDiagram d = vktest::random_diagram(rng, 2 + t % 5, 2);
        const ArrowEnds ends = arrow_ends(d);
        int brute = 0;
        for (int a = 0; a < d.arrow_count(); ++a)
            for (int b = a + 1; b < d.arrow_count(); ++b) {
                if (d.sign_of(a) == d.sign_of(b)) continue;
                auto adjacent = [&](Position p, Position q) {
                    if (p.circle != q.circle) return false;
                    const int len = d.circle_length(p.circle);
                    const int diff = (q.slot - p.slot + len) % len;
                    return diff == 1 || diff == len - 1;
                };
                if (adjacent(ends.tail[a], ends.tail[b]) &&
                    adjacent(ends.head[a], ends.head[b]))
                    ++brute;
            }
        CHECK(static_cast<int>(moves_of_kind(d, MoveKind::R2Del, Regime::Virtual).size()) ==
              brute);
    }
}

TEST_CASE("move strings round-trip") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 200; ++t) {
        GaussDiagram d = vktest::random_diagram(rng, t % 5, 2);
        for (const Move& m : enumerate_moves(d, Regime::AllForbidden, 4)) {
            CHECK(move_from_string(move_to_string(m)) == m);
            Move inv = inverse_move(d, m);
            CHECK(move_from_string(move_to_string(inv)) == inv);
        }
    }
}

TEST_CASE("random_walk is deterministic and move-equivalent") {
    GaussDiagram vt = parse("O1+O2+U1+U2+");
    CHECK(random_walk(vt, Regime::Virtual, 0, 42) == vt);
    GaussDiagram a = random_walk(vt, Regime::Virtual, 20, 42);
    GaussDiagram b = random_walk(vt, Regime::Virtual, 20, 42);
    CHECK(a == b);

    std::mt19937_64 rng(25);
    for (int t = 0; t < 50; ++t) {
        GaussDiagram d = vktest::random_diagram(rng, 1 + t % 4, 2);
        std::vector<Move> trace;
        GaussDiagram e = random_walk(d, Regime::Virtual, 15, t, 0, &trace);
        CHECK(component_count(e) == component_count(d));
        CHECK(static_cast<int>(trace.size()) <= 15);
        // replaying the trace lands on the same diagram
        GaussDiagram replay = d;
        for (const Move& m : trace) replay = apply_move(replay, m);
        CHECK(replay == e);
    }
}

TEST_CASE("virtual-regime walks preserve the odd writhe and f-polynomial") {
    std::mt19937_64 rng(26);
    for (int t = 0; t < 60; ++t) {
        GaussDiagram d = vktest::random_knot(rng, 1 + t % 4);
        const int j = odd_writhe(d);
        const LaurentPoly f = f_polynomial(d);
        GaussDiagram e = random_walk(d, Regime::Virtual, 20, 1000 + t);
        CHECK(odd_writhe(e) == j);
        CHECK(f_polynomial(e) == f);
    }
}
