#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

enum class MoveKind : std::uint8_t {
    R1Add,
    R1Del,
    R2Add,
    R2Del,
    R3,
    ForbiddenOver,
    ForbiddenUnder,
};

// Equivalence regimes. Virtual is the classical move set on Gauss
// diagrams; Welded adds the over-strand forbidden move; AllForbidden adds
// both forbidden moves (under which every knot unknots).
enum class Regime : std::uint8_t { Virtual, Welded, AllForbidden };

bool regime_allows(Regime regime, MoveKind kind);
std::string_view regime_name(Regime regime);

// A cyclically adjacent slot pair (slot, slot+1 mod length) on one circle.
struct PairSite {
    std::int32_t circle = 0;
    std::int32_t slot = 0;

    friend auto operator<=>(const PairSite&, const PairSite&) = default;
};

// One token placed by an insertion move. `arrow` is 0 for the first new
// arrow ('a') and 1 for the second ('b', R2Add only).
struct InsertToken {
    Passage passage = Passage::Over;
    std::uint8_t arrow = 0;

    friend bool operator==(const InsertToken&, const InsertToken&) = default;
};

// Tokens inserted at one gap of one circle. Gaps index the pre-move word:
// gap g in [0, L] places tokens before slot g; g == L places them at the
// word end (the same cyclic gap as g == 0 but after the basepoint, which
// lets an inverse move restore a deletion that straddled the basepoint).
struct Insertion {
    std::int32_t circle = 0;
    std::int32_t gap = 0;
    std::vector<InsertToken> tokens;

    friend bool operator==(const Insertion&, const Insertion&) = default;
};

// A reversible rewrite with its application site. Site preconditions are
// rechecked by apply_move; positions always refer to the diagram the move
// is applied to.
//   R1Del            site a: the arrow whose endpoints sit at the pair
//   R2Del            site a: adjacent tails, site b: adjacent heads
//   R3               sites a,b,c: the three strand pairs (sorted)
//   ForbiddenOver    site a: adjacent tails of two arrows (swapped)
//   ForbiddenUnder   site a: adjacent heads (swapped)
//   R1Add            insertions placing one O and one U token; `sign`
//   R2Add            insertions placing Oa,Ob adjacent and Ua,Ub adjacent;
//                    arrow a gets `sign`, arrow b its negation
struct Move {
    MoveKind kind = MoveKind::R1Del;
    PairSite a{};
    PairSite b{};
    PairSite c{};
    std::vector<Insertion> insertions;
    Sign sign = Sign::Plus;

    friend bool operator==(const Move&, const Move&) = default;
};

inline constexpr int kNoInsertionCap = std::numeric_limits<int>::max();

// Lists the moves of `regime` applicable to `d`, in a fixed deterministic
// order. Deletions, R3 and forbidden swaps are complete: every valid site
// is listed exactly once. Insertions are generated at every arc, with at
// most `insertion_cap` R1Add and `insertion_cap` R2Add variants per arc
// (R2Add arcs are the over-strand arc; under arcs cycle in order).
std::vector<Move> enumerate_moves(const GaussDiagram& d, Regime regime,
                                  int insertion_cap = kNoInsertionCap);

// Applies a move. Throws PreconditionError when the site does not match.
GaussDiagram apply_move(const GaussDiagram& d, const Move& move);

// The exact inverse of `move` with respect to the diagram it acts on:
// apply_move(apply_move(d, move), inverse_move(d, move)) == d.
Move inverse_move(const GaussDiagram& d, const Move& move);

// Stable one-line text form used in search certificates.
std::string move_to_string(const Move& move);
Move move_from_string(std::string_view text);

// Scrambles `d` by `steps` uniformly chosen applicable moves of `regime`.
// Deterministic for a fixed seed. Insertions are skipped once the diagram
// holds `max_arrows` arrows (0 means the input arrow count plus four).
// When `trace` is non-null the chosen moves are appended to it.
GaussDiagram random_walk(const GaussDiagram& d, Regime regime, int steps,
                         std::uint64_t seed, int max_arrows = 0,
                         std::vector<Move>* trace = nullptr);

}  // namespace vknot
