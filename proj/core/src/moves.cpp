#include "vknot/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace vknot {

bool regime_allows(Regime regime, MoveKind kind) {
    switch (kind) {
        case MoveKind::ForbiddenOver:
            return regime != Regime::Virtual;
        case MoveKind::ForbiddenUnder:
            return regime == Regime::AllForbidden;
        default:
            return true;
    }
}

std::string_view regime_name(Regime regime) {
    switch (regime) {
        case Regime::Virtual: return "virtual";
        case Regime::Welded: return "welded";
        case Regime::AllForbidden: return "all-forbidden";
    }
    return "?";
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw PreconditionError(what);
}

void check_pair_site(const GaussDiagram& d, PairSite p) {
    require(p.circle >= 0 && p.circle < d.circle_count(), "pair site: circle out of range");
    const int len = d.circle_length(p.circle);
    require(len >= 2, "pair site: circle too short");
    require(p.slot >= 0 && p.slot < len, "pair site: slot out of range");
}

std::pair<Endpoint, Endpoint> pair_endpoints(const GaussDiagram& d, PairSite p) {
    const auto& circle = d.circles()[p.circle];
    const int len = static_cast<int>(circle.size());
    return {circle[p.slot], circle[(p.slot + 1) % len]};
}

// Removes the given slots (and the arrows they named) from the diagram.
GaussDiagram erase_slots(const GaussDiagram& d, std::vector<Position> removed,
                         const std::set<int>& removed_arrows) {
    std::vector<std::vector<Endpoint>> circles = d.circles();
    std::sort(removed.begin(), removed.end());
    for (auto it = removed.rbegin(); it != removed.rend(); ++it)
        circles[it->circle].erase(circles[it->circle].begin() + it->slot);

    std::vector<int> remap(d.arrow_count(), -1);
    std::vector<Sign> signs;
    for (int a = 0; a < d.arrow_count(); ++a) {
        if (removed_arrows.count(a)) continue;
        remap[a] = static_cast<int>(signs.size());
        signs.push_back(d.sign_of(a));
    }
    for (auto& circle : circles)
        for (auto& ep : circle) ep.arrow = remap[ep.arrow];
    return GaussDiagram::from_parts(std::move(circles), std::move(signs));
}

struct InsertedLayout {
    std::vector<std::vector<Endpoint>> circles;
    std::vector<Sign> signs;
    // Result position of each inserted token, keyed by (passage, local arrow).
    std::map<std::pair<Passage, int>, Position> placed;
};

// Applies the insertion entries of a move, assigning local arrow 0 the id
// n and local arrow 1 the id n+1. Entries must target distinct gaps.
InsertedLayout build_insertions(const GaussDiagram& d, const std::vector<Insertion>& entries,
                                const std::vector<Sign>& new_signs) {
    InsertedLayout out;
    out.circles = d.circles();
    out.signs = d.signs();
    const int base = d.arrow_count();
    for (Sign s : new_signs) out.signs.push_back(s);

    std::map<int, std::vector<const Insertion*>> per_circle;
    std::set<std::pair<int, int>> seen;
    for (const Insertion& ins : entries) {
        require(ins.circle >= 0 && ins.circle < d.circle_count(),
                "insertion: circle out of range");
        require(ins.gap >= 0 && ins.gap <= d.circle_length(ins.circle),
                "insertion: gap out of range");
        require(!ins.tokens.empty(), "insertion: no tokens");
        require(seen.insert({ins.circle, ins.gap}).second,
                "insertion: duplicate gap entry");
        per_circle[ins.circle].push_back(&ins);
    }

    for (auto& [ci, list] : per_circle) {
        std::sort(list.begin(), list.end(),
                  [](const Insertion* a, const Insertion* b) { return a->gap < b->gap; });
        const auto& old_word = d.circles()[ci];
        std::vector<Endpoint> word;
        word.reserve(old_word.size() + 4);
        std::size_t next_old = 0;
        for (const Insertion* ins : list) {
            while (next_old < static_cast<std::size_t>(ins->gap))
                word.push_back(old_word[next_old++]);
            for (const InsertToken& tok : ins->tokens) {
                require(tok.arrow < new_signs.size(), "insertion: bad local arrow");
                out.placed[{tok.passage, tok.arrow}] =
                    Position{ci, static_cast<int>(word.size())};
                word.push_back(Endpoint{base + tok.arrow, tok.passage});
            }
        }
        while (next_old < old_word.size()) word.push_back(old_word[next_old++]);
        out.circles[ci] = std::move(word);
    }
    return out;
}

bool cyclically_adjacent(Position p, Position q, int len) {
    if (p.circle != q.circle) return false;
    return q.slot == (p.slot + 1) % len || p.slot == (q.slot + 1) % len;
}

// Start slot of the adjacent pair {p, q}; pairs on a 2-slot circle are
// normalized to slot 0.
int pair_start(Position p, Position q, int len) {
    if (len == 2) return 0;
    if (q.slot == (p.slot + 1) % len) return p.slot;
    return q.slot;
}

struct R3Roles {
    int alpha = -1;  // tail in the OO pair, head in the mixed pair
    int beta = -1;   // tail in the OO pair, head in the UU pair
    int gamma = -1;  // tail in the mixed pair, head in the UU pair
    bool valid = false;
};

// Checks the R3 site structure and the planarity relation between the
// endpoint orders and the crossing signs. With order bits b (0 when the
// named arrow's endpoint comes first in its pair) and sign bits s (1 for
// a negative crossing), a genuine slide satisfies
//   b_T ^ b_M == s(beta) ^ s(gamma)   and   b_M ^ b_B == s(alpha) ^ s(beta);
// the remaining combinations have no planar triangle realization.
R3Roles classify_r3(const GaussDiagram& d, PairSite pa, PairSite pb, PairSite pc) {
    R3Roles roles;
    const PairSite sites[3] = {pa, pb, pc};
    int oo = -1, uu = -1, mixed = -1;
    std::array<std::pair<Endpoint, Endpoint>, 3> eps;
    for (int i = 0; i < 3; ++i) {
        eps[i] = pair_endpoints(d, sites[i]);
        const bool first_over = eps[i].first.passage == Passage::Over;
        const bool second_over = eps[i].second.passage == Passage::Over;
        if (eps[i].first.arrow == eps[i].second.arrow) return roles;
        if (first_over && second_over) {
            if (oo >= 0) return roles;
            oo = i;
        } else if (!first_over && !second_over) {
            if (uu >= 0) return roles;
            uu = i;
        } else {
            if (mixed >= 0) return roles;
            mixed = i;
        }
    }
    if (oo < 0 || uu < 0 || mixed < 0) return roles;

    const auto& [oo1, oo2] = eps[oo];
    const auto& [uu1, uu2] = eps[uu];
    const auto& [mx1, mx2] = eps[mixed];
    const int mixed_head = mx1.passage == Passage::Under ? mx1.arrow : mx2.arrow;
    const int mixed_tail = mx1.passage == Passage::Over ? mx1.arrow : mx2.arrow;

    int beta = -1;
    for (int x : {oo1.arrow, oo2.arrow})
        if (x == uu1.arrow || x == uu2.arrow) {
            if (beta >= 0) return roles;
            beta = x;
        }
    if (beta < 0) return roles;
    const int alpha = oo1.arrow == beta ? oo2.arrow : oo1.arrow;
    const int gamma = uu1.arrow == beta ? uu2.arrow : uu1.arrow;
    if (alpha != mixed_head || gamma != mixed_tail) return roles;
    if (alpha == beta || beta == gamma || alpha == gamma) return roles;

    const int b_t = oo1.arrow == alpha ? 0 : 1;
    const int b_m = (mx1.arrow == alpha && mx1.passage == Passage::Under) ? 0 : 1;
    const int b_b = uu1.arrow == beta ? 0 : 1;
    const int s_a = d.sign_of(alpha) == Sign::Minus ? 1 : 0;
    const int s_b = d.sign_of(beta) == Sign::Minus ? 1 : 0;
    const int s_g = d.sign_of(gamma) == Sign::Minus ? 1 : 0;
    if ((b_t ^ b_m) != (s_b ^ s_g)) return roles;
    if ((b_m ^ b_b) != (s_a ^ s_b)) return roles;

    roles.alpha = alpha;
    roles.beta = beta;
    roles.gamma = gamma;
    roles.valid = true;
    return roles;
}

bool pairs_disjoint(const GaussDiagram& d, std::initializer_list<PairSite> sites) {
    std::set<Position> slots;
    for (PairSite p : sites) {
        const int len = d.circle_length(p.circle);
        if (!slots.insert(Position{p.circle, p.slot}).second) return false;
        if (!slots.insert(Position{p.circle, (p.slot + 1) % len}).second) return false;
    }
    return true;
}

GaussDiagram swap_pairs(const GaussDiagram& d, std::initializer_list<PairSite> sites) {
    std::vector<std::vector<Endpoint>> circles = d.circles();
    for (PairSite p : sites) {
        const int len = static_cast<int>(circles[p.circle].size());
        std::swap(circles[p.circle][p.slot], circles[p.circle][(p.slot + 1) % len]);
    }
    return GaussDiagram::from_parts(std::move(circles), std::vector<Sign>(d.signs()));
}

}  // namespace

GaussDiagram apply_move(const GaussDiagram& d, const Move& move) {
    switch (move.kind) {
        case MoveKind::R1Del: {
            check_pair_site(d, move.a);
            auto [e1, e2] = pair_endpoints(d, move.a);
            require(e1.arrow == e2.arrow, "R1Del: slots belong to different arrows");
            const int len = d.circle_length(move.a.circle);
            return erase_slots(d,
                               {Position{move.a.circle, move.a.slot},
                                Position{move.a.circle, (move.a.slot + 1) % len}},
                               {e1.arrow});
        }
        case MoveKind::R2Del: {
            check_pair_site(d, move.a);
            check_pair_site(d, move.b);
            auto [t1, t2] = pair_endpoints(d, move.a);
            auto [h1, h2] = pair_endpoints(d, move.b);
            require(t1.passage == Passage::Over && t2.passage == Passage::Over,
                    "R2Del: tail pair must be two Over endpoints");
            require(h1.passage == Passage::Under && h2.passage == Passage::Under,
                    "R2Del: head pair must be two Under endpoints");
            require((t1.arrow == h1.arrow && t2.arrow == h2.arrow) ||
                        (t1.arrow == h2.arrow && t2.arrow == h1.arrow),
                    "R2Del: pairs name different arrows");
            require(t1.arrow != t2.arrow, "R2Del: needs two distinct arrows");
            require(d.sign_of(t1.arrow) != d.sign_of(t2.arrow), "R2Del: signs must differ");
            const int la = d.circle_length(move.a.circle);
            const int lb = d.circle_length(move.b.circle);
            return erase_slots(d,
                               {Position{move.a.circle, move.a.slot},
                                Position{move.a.circle, (move.a.slot + 1) % la},
                                Position{move.b.circle, move.b.slot},
                                Position{move.b.circle, (move.b.slot + 1) % lb}},
                               {t1.arrow, t2.arrow});
        }
        case MoveKind::R3: {
            check_pair_site(d, move.a);
            check_pair_site(d, move.b);
            check_pair_site(d, move.c);
            require(pairs_disjoint(d, {move.a, move.b, move.c}), "R3: pairs overlap");
            require(classify_r3(d, move.a, move.b, move.c).valid,
                    "R3: site does not match a slide configuration");
            return swap_pairs(d, {move.a, move.b, move.c});
        }
        case MoveKind::ForbiddenOver:
        case MoveKind::ForbiddenUnder: {
            check_pair_site(d, move.a);
            auto [e1, e2] = pair_endpoints(d, move.a);
            const Passage want =
                move.kind == MoveKind::ForbiddenOver ? Passage::Over : Passage::Under;
            require(e1.passage == want && e2.passage == want,
                    "forbidden move: endpoints have the wrong passage");
            require(e1.arrow != e2.arrow, "forbidden move: needs two arrows");
            return swap_pairs(d, {move.a});
        }
        case MoveKind::R1Add: {
            int overs = 0, unders = 0;
            for (const Insertion& ins : move.insertions)
                for (const InsertToken& tok : ins.tokens) {
                    require(tok.arrow == 0, "R1Add: single new arrow only");
                    (tok.passage == Passage::Over ? overs : unders)++;
                }
            require(overs == 1 && unders == 1, "R1Add: needs one O and one U token");
            InsertedLayout out = build_insertions(d, move.insertions, {move.sign});
            const Position po = out.placed.at({Passage::Over, 0});
            const Position pu = out.placed.at({Passage::Under, 0});
            const int len = static_cast<int>(out.circles[po.circle].size());
            require(cyclically_adjacent(po, pu, len),
                    "R1Add: endpoints must land on adjacent slots");
            return GaussDiagram::from_parts(std::move(out.circles), std::move(out.signs));
        }
        case MoveKind::R2Add: {
            int count[2][2] = {{0, 0}, {0, 0}};
            for (const Insertion& ins : move.insertions)
                for (const InsertToken& tok : ins.tokens) {
                    require(tok.arrow <= 1, "R2Add: two new arrows only");
                    count[tok.arrow][tok.passage == Passage::Under ? 1 : 0]++;
                }
            require(count[0][0] == 1 && count[0][1] == 1 && count[1][0] == 1 &&
                        count[1][1] == 1,
                    "R2Add: needs O and U tokens for both arrows");
            InsertedLayout out =
                build_insertions(d, move.insertions, {move.sign, negated(move.sign)});
            const Position poa = out.placed.at({Passage::Over, 0});
            const Position pob = out.placed.at({Passage::Over, 1});
            const Position pua = out.placed.at({Passage::Under, 0});
            const Position pub = out.placed.at({Passage::Under, 1});
            require(cyclically_adjacent(poa, pob,
                                        static_cast<int>(out.circles[poa.circle].size())),
                    "R2Add: tails must land on adjacent slots");
            require(cyclically_adjacent(pua, pub,
                                        static_cast<int>(out.circles[pua.circle].size())),
                    "R2Add: heads must land on adjacent slots");
            return GaussDiagram::from_parts(std::move(out.circles), std::move(out.signs));
        }
    }
    throw PreconditionError("unknown move kind");
}

namespace {

// Insertions that restore exactly the given slots of `d` after they are
// deleted. `local_of` maps an arrow id to its local id in the new move.
std::vector<Insertion> restoring_insertions(const GaussDiagram& d,
                                            std::vector<Position> removed,
                                            const std::map<int, int>& local_of) {
    std::sort(removed.begin(), removed.end());
    std::vector<Insertion> result;
    for (std::size_t i = 0; i < removed.size(); ++i) {
        const Position pos = removed[i];
        int before = 0;
        for (const Position& other : removed)
            if (other.circle == pos.circle && other.slot < pos.slot) ++before;
        const int gap = pos.slot - before;
        const Endpoint ep = d.at(pos);
        const InsertToken tok{ep.passage,
                              static_cast<std::uint8_t>(local_of.at(ep.arrow))};
        if (!result.empty() && result.back().circle == pos.circle &&
            result.back().gap == gap) {
            result.back().tokens.push_back(tok);
        } else {
            result.push_back(Insertion{pos.circle, gap, {tok}});
        }
    }
    return result;
}

// Result positions of all tokens placed by the insertion entries.
std::map<std::pair<Passage, int>, Position> placed_positions(
    const GaussDiagram& d, const std::vector<Insertion>& entries) {
    std::map<int, std::vector<const Insertion*>> per_circle;
    for (const Insertion& ins : entries) per_circle[ins.circle].push_back(&ins);
    std::map<std::pair<Passage, int>, Position> placed;
    for (auto& [ci, list] : per_circle) {
        std::sort(list.begin(), list.end(),
                  [](const Insertion* a, const Insertion* b) { return a->gap < b->gap; });
        int shift = 0;
        for (const Insertion* ins : list) {
            for (std::size_t t = 0; t < ins->tokens.size(); ++t)
                placed[{ins->tokens[t].passage, ins->tokens[t].arrow}] =
                    Position{ci, ins->gap + shift + static_cast<int>(t)};
            shift += static_cast<int>(ins->tokens.size());
        }
    }
    return placed;
}

PairSite site_of_result_pair(Position p, Position q, int result_len) {
    if (result_len == 2) return PairSite{p.circle, 0};
    if (q.slot == (p.slot + 1) % result_len) return PairSite{p.circle, p.slot};
    return PairSite{p.circle, q.slot};
}

}  // namespace

Move inverse_move(const GaussDiagram& d, const Move& move) {
    switch (move.kind) {
        case MoveKind::R3:
        case MoveKind::ForbiddenOver:
        case MoveKind::ForbiddenUnder:
            return move;
        case MoveKind::R1Del: {
            check_pair_site(d, move.a);
            auto [e1, e2] = pair_endpoints(d, move.a);
            require(e1.arrow == e2.arrow, "R1Del: slots belong to different arrows");
            const int len = d.circle_length(move.a.circle);
            Move inv;
            inv.kind = MoveKind::R1Add;
            inv.sign = d.sign_of(e1.arrow);
            inv.insertions = restoring_insertions(
                d,
                {Position{move.a.circle, move.a.slot},
                 Position{move.a.circle, (move.a.slot + 1) % len}},
                {{e1.arrow, 0}});
            return inv;
        }
        case MoveKind::R2Del: {
            check_pair_site(d, move.a);
            check_pair_site(d, move.b);
            auto [t1, t2] = pair_endpoints(d, move.a);
            const int la = d.circle_length(move.a.circle);
            const int lb = d.circle_length(move.b.circle);
            Move inv;
            inv.kind = MoveKind::R2Add;
            inv.sign = d.sign_of(t1.arrow);
            inv.insertions = restoring_insertions(
                d,
                {Position{move.a.circle, move.a.slot},
                 Position{move.a.circle, (move.a.slot + 1) % la},
                 Position{move.b.circle, move.b.slot},
                 Position{move.b.circle, (move.b.slot + 1) % lb}},
                {{t1.arrow, 0}, {t2.arrow, 1}});
            return inv;
        }
        case MoveKind::R1Add: {
            const auto placed = placed_positions(d, move.insertions);
            const Position po = placed.at({Passage::Over, 0});
            const Position pu = placed.at({Passage::Under, 0});
            const int result_len =
                d.circle_length(po.circle) + 2;  // both tokens share one circle
            Move inv;
            inv.kind = MoveKind::R1Del;
            inv.a = site_of_result_pair(po, pu, result_len);
            return inv;
        }
        case MoveKind::R2Add: {
            const auto placed = placed_positions(d, move.insertions);
            const Position poa = placed.at({Passage::Over, 0});
            const Position pob = placed.at({Passage::Over, 1});
            const Position pua = placed.at({Passage::Under, 0});
            const Position pub = placed.at({Passage::Under, 1});
            auto result_len = [&](int circle) {
                int added = 0;
                for (const Insertion& ins : move.insertions)
                    if (ins.circle == circle) added += static_cast<int>(ins.tokens.size());
                return d.circle_length(circle) + added;
            };
            Move inv;
            inv.kind = MoveKind::R2Del;
            inv.a = site_of_result_pair(poa, pob, result_len(poa.circle));
            inv.b = site_of_result_pair(pua, pub, result_len(pua.circle));
            return inv;
        }
    }
    throw PreconditionError("unknown move kind");
}

std::vector<Move> enumerate_moves(const GaussDiagram& d, Regime regime, int insertion_cap) {
    std::vector<Move> moves;
    const ArrowEnds ends = arrow_ends(d);

    // R1Del
    for (int c = 0; c < d.circle_count(); ++c) {
        const int len = d.circle_length(c);
        if (len < 2) continue;
        const int limit = len == 2 ? 1 : len;
        for (int s = 0; s < limit; ++s) {
            const auto& circle = d.circles()[c];
            if (circle[s].arrow != circle[(s + 1) % len].arrow) continue;
            Move m;
            m.kind = MoveKind::R1Del;
            m.a = PairSite{c, s};
            moves.push_back(std::move(m));
        }
    }

    // R2Del: scan adjacent tail pairs, then check the matching heads.
    for (int c = 0; c < d.circle_count(); ++c) {
        const int len = d.circle_length(c);
        if (len < 2) continue;
        const int limit = len == 2 ? 1 : len;
        for (int s = 0; s < limit; ++s) {
            const auto& circle = d.circles()[c];
            const Endpoint e1 = circle[s];
            const Endpoint e2 = circle[(s + 1) % len];
            if (e1.passage != Passage::Over || e2.passage != Passage::Over) continue;
            if (d.sign_of(e1.arrow) == d.sign_of(e2.arrow)) continue;
            const Position h1 = ends.head[e1.arrow];
            const Position h2 = ends.head[e2.arrow];
            const int hlen = d.circle_length(h1.circle);
            if (!cyclically_adjacent(h1, h2, hlen)) continue;
            Move m;
            m.kind = MoveKind::R2Del;
            m.a = PairSite{c, s};
            m.b = PairSite{h1.circle, pair_start(h1, h2, hlen)};
            moves.push_back(std::move(m));
        }
    }

    // R3: triples of disjoint adjacent pairs passing the slide conditions.
    {
        std::vector<PairSite> candidates;
        for (int c = 0; c < d.circle_count(); ++c) {
            const int len = d.circle_length(c);
            if (len < 2) continue;
            const int limit = len == 2 ? 1 : len;
            for (int s = 0; s < limit; ++s) {
                const auto& circle = d.circles()[c];
                if (circle[s].arrow == circle[(s + 1) % len].arrow) continue;
                candidates.push_back(PairSite{c, s});
            }
        }
        for (std::size_t i = 0; i < candidates.size(); ++i)
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                for (std::size_t k = j + 1; k < candidates.size(); ++k) {
                    if (!pairs_disjoint(d, {candidates[i], candidates[j], candidates[k]}))
                        continue;
                    if (!classify_r3(d, candidates[i], candidates[j], candidates[k]).valid)
                        continue;
                    Move m;
                    m.kind = MoveKind::R3;
                    m.a = candidates[i];
                    m.b = candidates[j];
                    m.c = candidates[k];
                    moves.push_back(std::move(m));
                }
    }

    // Forbidden endpoint swaps.
    for (MoveKind kind : {MoveKind::ForbiddenOver, MoveKind::ForbiddenUnder}) {
        if (!regime_allows(regime, kind)) continue;
        const Passage want = kind == MoveKind::ForbiddenOver ? Passage::Over : Passage::Under;
        for (int c = 0; c < d.circle_count(); ++c) {
            const int len = d.circle_length(c);
            if (len < 2) continue;
            const int limit = len == 2 ? 1 : len;
            for (int s = 0; s < limit; ++s) {
                const auto& circle = d.circles()[c];
                if (circle[s].passage != want || circle[(s + 1) % len].passage != want)
                    continue;
                Move m;
                m.kind = kind;
                m.a = PairSite{c, s};
                moves.push_back(std::move(m));
            }
        }
    }

    // R1Add: four variants per arc, capped.
    for (int c = 0; c < d.circle_count(); ++c) {
        const int gaps = std::max(d.circle_length(c), 1);
        for (int g = 0; g < gaps; ++g) {
            int emitted = 0;
            for (Passage first : {Passage::Over, Passage::Under})
                for (Sign sign : {Sign::Plus, Sign::Minus}) {
                    if (emitted >= insertion_cap) break;
                    Move m;
                    m.kind = MoveKind::R1Add;
                    m.sign = sign;
                    m.insertions = {Insertion{
                        c, g, {InsertToken{first, 0}, InsertToken{flipped(first), 0}}}};
                    moves.push_back(std::move(m));
                    ++emitted;
                }
        }
    }

    // R2Add: tails at the over arc, heads at the under arc, four variants
    // per ordered arc pair, capped per over arc.
    {
        std::vector<std::pair<int, int>> arcs;
        for (int c = 0; c < d.circle_count(); ++c) {
            const int gaps = std::max(d.circle_length(c), 1);
            for (int g = 0; g < gaps; ++g) arcs.emplace_back(c, g);
        }
        for (const auto& [c1, g1] : arcs) {
            int emitted = 0;
            for (const auto& [c2, g2] : arcs) {
                const bool same_arc = c1 == c2 && g1 == g2;
                // At one shared arc the head pair may sit before or after
                // the tail pair; split arcs encode the order by the pair.
                for (bool heads_first : {false, true}) {
                    if (heads_first && !same_arc) continue;
                    for (bool b_first : {false, true}) {
                        for (Sign sign : {Sign::Plus, Sign::Minus}) {
                            if (emitted >= insertion_cap) break;
                            const InsertToken ua{Passage::Under, 0};
                            const InsertToken ub{Passage::Under, 1};
                            std::vector<InsertToken> heads =
                                b_first ? std::vector<InsertToken>{ub, ua}
                                        : std::vector<InsertToken>{ua, ub};
                            Move m;
                            m.kind = MoveKind::R2Add;
                            m.sign = sign;
                            if (same_arc) {
                                std::vector<InsertToken> tails{
                                    InsertToken{Passage::Over, 0},
                                    InsertToken{Passage::Over, 1}};
                                std::vector<InsertToken> tokens;
                                if (heads_first) {
                                    tokens = std::move(heads);
                                    tokens.insert(tokens.end(), tails.begin(), tails.end());
                                } else {
                                    tokens = std::move(tails);
                                    tokens.insert(tokens.end(), heads.begin(), heads.end());
                                }
                                m.insertions = {Insertion{c1, g1, std::move(tokens)}};
                            } else {
                                m.insertions = {
                                    Insertion{c1, g1,
                                              {InsertToken{Passage::Over, 0},
                                               InsertToken{Passage::Over, 1}}},
                                    Insertion{c2, g2, std::move(heads)}};
                            }
                            moves.push_back(std::move(m));
                            ++emitted;
                        }
                    }
                }
                if (emitted >= insertion_cap) break;
            }
        }
    }

    return moves;
}

std::string move_to_string(const Move& move) {
    std::ostringstream out;
    auto site = [&](PairSite p) { out << ' ' << p.circle << ':' << p.slot; };
    auto insertions = [&] {
        for (const Insertion& ins : move.insertions) {
            out << ' ' << ins.circle << ':' << ins.gap << '[';
            bool first = true;
            for (const InsertToken& tok : ins.tokens) {
                if (!first) out << ',';
                first = false;
                out << passage_char(tok.passage);
                if (move.kind == MoveKind::R2Add) out << (tok.arrow == 0 ? 'a' : 'b');
            }
            out << ']';
        }
    };
    switch (move.kind) {
        case MoveKind::R1Del:
            out << "R1DEL";
            site(move.a);
            break;
        case MoveKind::R2Del:
            out << "R2DEL";
            site(move.a);
            site(move.b);
            break;
        case MoveKind::R3:
            out << "R3";
            site(move.a);
            site(move.b);
            site(move.c);
            break;
        case MoveKind::ForbiddenOver:
            out << "FO";
            site(move.a);
            break;
        case MoveKind::ForbiddenUnder:
            out << "FU";
            site(move.a);
            break;
        case MoveKind::R1Add:
            out << "R1ADD";
            insertions();
            out << ' ' << sign_char(move.sign);
            break;
        case MoveKind::R2Add:
            out << "R2ADD";
            insertions();
            out << ' ' << sign_char(move.sign);
            break;
    }
    return out.str();
}

namespace {

PairSite parse_site(std::string_view word) {
    const auto colon = word.find(':');
    if (colon == std::string_view::npos)
        throw Error("move: bad site '" + std::string(word) + "'");
    return PairSite{std::stoi(std::string(word.substr(0, colon))),
                    std::stoi(std::string(word.substr(colon + 1)))};
}

Insertion parse_insertion(std::string_view word, bool two_arrows) {
    const auto colon = word.find(':');
    const auto bracket = word.find('[');
    if (colon == std::string_view::npos || bracket == std::string_view::npos ||
        word.back() != ']')
        throw Error("move: bad insertion '" + std::string(word) + "'");
    Insertion ins;
    ins.circle = std::stoi(std::string(word.substr(0, colon)));
    ins.gap = std::stoi(std::string(word.substr(colon + 1, bracket - colon - 1)));
    std::string body(word.substr(bracket + 1, word.size() - bracket - 2));
    std::istringstream list(body);
    std::string tok;
    while (std::getline(list, tok, ',')) {
        if (tok.empty()) throw Error("move: empty insertion token");
        InsertToken t;
        t.passage = tok[0] == 'O' ? Passage::Over
                    : tok[0] == 'U' ? Passage::Under
                                    : throw Error("move: bad token '" + tok + "'");
        if (two_arrows) {
            if (tok.size() != 2 || (tok[1] != 'a' && tok[1] != 'b'))
                throw Error("move: bad token '" + tok + "'");
            t.arrow = tok[1] == 'b' ? 1 : 0;
        } else if (tok.size() != 1) {
            throw Error("move: bad token '" + tok + "'");
        }
        ins.tokens.push_back(t);
    }
    return ins;
}

}  // namespace

Move move_from_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string kind;
    in >> kind;
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);

    Move m;
    auto need = [&](std::size_t n) {
        if (words.size() != n) throw Error("move: wrong argument count in '" +
                                           std::string(text) + "'");
    };
    if (kind == "R1DEL") {
        need(1);
        m.kind = MoveKind::R1Del;
        m.a = parse_site(words[0]);
    } else if (kind == "R2DEL") {
        need(2);
        m.kind = MoveKind::R2Del;
        m.a = parse_site(words[0]);
        m.b = parse_site(words[1]);
    } else if (kind == "R3") {
        need(3);
        m.kind = MoveKind::R3;
        m.a = parse_site(words[0]);
        m.b = parse_site(words[1]);
        m.c = parse_site(words[2]);
    } else if (kind == "FO" || kind == "FU") {
        need(1);
        m.kind = kind == "FO" ? MoveKind::ForbiddenOver : MoveKind::ForbiddenUnder;
        m.a = parse_site(words[0]);
    } else if (kind == "R1ADD" || kind == "R2ADD") {
        if (words.size() < 2) throw Error("move: missing arguments");
        m.kind = kind == "R1ADD" ? MoveKind::R1Add : MoveKind::R2Add;
        const std::string& sign = words.back();
        if (sign != "+" && sign != "-") throw Error("move: bad sign '" + sign + "'");
        m.sign = sign == "+" ? Sign::Plus : Sign::Minus;
        for (std::size_t i = 0; i + 1 < words.size(); ++i)
            m.insertions.push_back(parse_insertion(words[i], m.kind == MoveKind::R2Add));
    } else {
        throw Error("move: unknown kind '" + kind + "'");
    }
    return m;
}

GaussDiagram random_walk(const GaussDiagram& d, Regime regime, int steps,
                         std::uint64_t seed, int max_arrows, std::vector<Move>* trace) {
    if (max_arrows <= 0) max_arrows = d.arrow_count() + 4;
    std::mt19937_64 rng(seed);
    GaussDiagram current = d;
    for (int step = 0; step < steps; ++step) {
        std::vector<Move> moves = enumerate_moves(current, regime, 8);
        std::erase_if(moves, [&](const Move& m) {
            const int grow = m.kind == MoveKind::R1Add   ? 1
                             : m.kind == MoveKind::R2Add ? 2
                                                         : 0;
            return current.arrow_count() + grow > max_arrows;
        });
        if (moves.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        const Move& chosen = moves[pick(rng)];
        current = apply_move(current, chosen);
        if (trace) trace->push_back(chosen);
    }
    return current;
}

}  // namespace vknot
