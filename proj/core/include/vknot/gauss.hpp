#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/errors.hpp"

namespace vknot {

// Local writhe of a classical crossing.
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline Sign negated(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline int sign_value(Sign s) { return static_cast<int>(s); }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// Which strand of the crossing a slot belongs to.
enum class Passage : std::uint8_t { Over, Under };

inline Passage flipped(Passage p) { return p == Passage::Over ? Passage::Under : Passage::Over; }
inline char passage_char(Passage p) { return p == Passage::Over ? 'O' : 'U'; }

// A slot on one of the diagram's circles.
struct Position {
    std::int32_t circle = 0;
    std::int32_t slot = 0;

    friend auto operator<=>(const Position&, const Position&) = default;
};

// One arrow endpoint as stored in a circle's slot sequence.
struct Endpoint {
    std::int32_t arrow = 0;
    Passage passage = Passage::Over;

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// A virtual knot or link: one or more oriented circles carrying the
// endpoints of signed, directed arrows. Each arrow occupies exactly two
// slots, its Over endpoint (tail) and its Under endpoint (head). Circles
// have a fixed basepoint (slot 0) and orientation (increasing slot index).
//
// Instances are immutable after construction and always label-normalized:
// arrow ids are assigned by first appearance scanning circles in order.
// Every operation returns a fresh value; sharing across threads is safe.
class GaussDiagram {
public:
    GaussDiagram() = default;

    // Builds a diagram from raw parts, renumbering arrows by first
    // appearance. Throws std::invalid_argument on structural breakage
    // (this is a programmer-error path, not input validation).
    static GaussDiagram from_parts(std::vector<std::vector<Endpoint>> circles,
                                   std::vector<Sign> signs);

    const std::vector<std::vector<Endpoint>>& circles() const { return circles_; }
    const std::vector<Sign>& signs() const { return signs_; }

    int arrow_count() const { return static_cast<int>(signs_.size()); }
    int circle_count() const { return static_cast<int>(circles_.size()); }
    int circle_length(int circle) const { return static_cast<int>(circles_[circle].size()); }
    std::size_t slot_count() const;

    const Endpoint& at(Position p) const { return circles_[p.circle][p.slot]; }
    Sign sign_of(int arrow) const { return signs_[arrow]; }

    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

private:
    std::vector<std::vector<Endpoint>> circles_;
    std::vector<Sign> signs_;
};

// Tail (Over) and head (Under) position of every arrow, built in one scan.
struct ArrowEnds {
    std::vector<Position> tail;
    std::vector<Position> head;
};

ArrowEnds arrow_ends(const GaussDiagram& d);

// Parses a Gauss code. Grammar (ASCII, whitespace between tokens ignored):
//   code      := component (';' component)*
//   component := '@' | token+
//   token     := ('O'|'U') integer ('+'|'-')
//   integer   := [1-9][0-9]*
// Labels may be arbitrary positive integers; they are renumbered by first
// appearance. Throws SyntaxError for malformed tokens and ValidationError
// when labels do not pair up (count, passage, or sign).
GaussDiagram parse(std::string_view text);

// Emits the code of a diagram: labels numbered by first appearance, '@'
// for crossing-free circles, ';' between circles, no whitespace.
// parse(serialize(d)) == d for every valid diagram.
std::string serialize(const GaussDiagram& d);

// Minimum of serialize over all basepoint choices per circle and all
// circle orderings, comparing token sequences as (passage, label, sign)
// with Over < Under and '+' < '-'. Identifies diagrams that differ only
// by basepoints or circle order; does not quotient by mirror or reversal.
std::string canonical_form(const GaussDiagram& d);

int component_count(const GaussDiagram& d);

// Switches every classical crossing: arrows reverse (tail <-> head) and
// signs negate. Involution.
GaussDiagram mirror(const GaussDiagram& d);

// Reverses the orientation of one circle. Arrows with exactly one endpoint
// on that circle flip sign; arrows with both endpoints keep theirs.
// Throws IndexError when the circle index is out of range.
GaussDiagram reverse_component(const GaussDiagram& d, int circle);

// Splices two knots: the result word is d1's word read from break position
// break1 followed by d2's word read from break2 (labels made disjoint,
// then renumbered). Break position b means the gap before slot b; the
// result depends on it. Throws NotAKnotError on multi-circle input and
// IndexError on an out-of-range break.
GaussDiagram connected_sum(const GaussDiagram& d1, int break1,
                           const GaussDiagram& d2, int break2);

// Rebases circle `circle` so its old slot `offset` becomes slot 0.
GaussDiagram rotate_basepoint(const GaussDiagram& d, int circle, int offset);

// Reorders circles: new circle i is old circle perm[i].
GaussDiagram permute_circles(const GaussDiagram& d, const std::vector<int>& perm);

}  // namespace vknot
