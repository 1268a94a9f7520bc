#pragma once

// Shared test utilities: random diagram generators and exhaustive
// enumeration of knot diagrams by crossing count.

#include <cstdint>
#include <random>
#include <vector>

#include "vknot/gauss.hpp"

namespace vktest {

// Uniform-ish random diagram: random chord pairing over a random circle
// partition, random directions and signs.
inline vknot::GaussDiagram random_diagram(std::mt19937_64& rng, int arrows, int max_circles) {
    using namespace vknot;
    const int total = 2 * arrows;
    const int circles = std::uniform_int_distribution<int>(1, max_circles)(rng);
    std::vector<int> slot_circle(total);
    for (int i = 0; i < total; ++i)
        slot_circle[i] = std::uniform_int_distribution<int>(0, circles - 1)(rng);
    std::sort(slot_circle.begin(), slot_circle.end());

    std::vector<int> order(total);
    for (int i = 0; i < total; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<Endpoint> flat(total);
    std::vector<Sign> signs(arrows);
    for (int a = 0; a < arrows; ++a) {
        const bool tail_first = rng() & 1;
        flat[order[2 * a]] = Endpoint{a, tail_first ? Passage::Over : Passage::Under};
        flat[order[2 * a + 1]] = Endpoint{a, tail_first ? Passage::Under : Passage::Over};
        signs[a] = rng() & 1 ? Sign::Plus : Sign::Minus;
    }
    std::vector<std::vector<Endpoint>> cs(circles);
    for (int i = 0; i < total; ++i) cs[slot_circle[i]].push_back(flat[i]);
    return GaussDiagram::from_parts(std::move(cs), std::move(signs));
}

inline vknot::GaussDiagram random_knot(std::mt19937_64& rng, int arrows) {
    return random_diagram(rng, arrows, 1);
}

// Calls fn(partner) for every chord pairing of 2n points;
// partner[i] is the slot paired with slot i.
template <typename Fn>
void for_each_pairing(int n, Fn&& fn) {
    const int total = 2 * n;
    std::vector<int> partner(total, -1);
    auto rec = [&](auto&& self, int slot) -> void {
        while (slot < total && partner[slot] >= 0) ++slot;
        if (slot >= total) {
            fn(partner);
            return;
        }
        for (int other = slot + 1; other < total; ++other) {
            if (partner[other] >= 0) continue;
            partner[slot] = other;
            partner[other] = slot;
            self(self, slot + 1);
            partner[slot] = -1;
            partner[other] = -1;
        }
    };
    rec(rec, 0);
}

// Chord ids by first appearance for a pairing.
inline std::vector<int> chord_ids(const std::vector<int>& partner) {
    std::vector<int> id(partner.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < partner.size(); ++i)
        if (id[i] < 0) id[i] = id[partner[i]] = next++;
    return id;
}

inline vknot::GaussDiagram knot_from_ids(const std::vector<int>& partner,
                                         const std::vector<int>& id, std::uint32_t dirs,
                                         std::uint32_t signs_bits) {
    using namespace vknot;
    const int total = static_cast<int>(partner.size());
    const int n = total / 2;
    std::vector<Endpoint> word(total);
    for (int i = 0; i < total; ++i) {
        const bool first = i < partner[i];
        const bool over_first = (dirs >> id[i]) & 1;
        word[i] = Endpoint{id[i], first == over_first ? Passage::Over : Passage::Under};
    }
    std::vector<Sign> signs(n);
    for (int a = 0; a < n; ++a) signs[a] = (signs_bits >> a) & 1 ? Sign::Minus : Sign::Plus;
    return GaussDiagram::from_parts({std::move(word)}, std::move(signs));
}

// Builds the knot word for a pairing with per-chord direction and sign
// bits (bit index = chord id by first appearance).
inline vknot::GaussDiagram knot_from_bits(const std::vector<int>& partner,
                                          std::uint32_t dirs, std::uint32_t signs_bits) {
    return knot_from_ids(partner, chord_ids(partner), dirs, signs_bits);
}

// Calls fn(diagram) for every knot diagram with exactly n crossings:
// all pairings, directions and signs.
template <typename Fn>
void for_each_knot_diagram(int n, Fn&& fn) {
    if (n == 0) {
        fn(vknot::parse("@"));
        return;
    }
    for_each_pairing(n, [&](const std::vector<int>& partner) {
        for (std::uint32_t dirs = 0; dirs < (1u << n); ++dirs)
            for (std::uint32_t sgn = 0; sgn < (1u << n); ++sgn)
                fn(knot_from_bits(partner, dirs, sgn));
    });
}

}  // namespace vktest
