#pragma once

// Independent bracket-polynomial oracle used to cross-check the state
// sum. It realizes the diagram's crossings as planar port rotations and
// evaluates the skein recursion by splicing crossings one at a time,
// counting closed circles as they appear. It never consults the crossing
// sign for the smoothing itself: the A-smoothing always joins each
// over-strand port to its counterclockwise predecessor in the rotation.

#include <array>
#include <cstdint>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"
#include "vknot/laurent.hpp"

namespace vktest {

class SkeinOracle {
public:
    explicit SkeinOracle(const vknot::GaussDiagram& d) {
        using namespace vknot;
        const int n = d.arrow_count();
        std::vector<int> base(d.circle_count(), 0);
        int slots = 0;
        for (int c = 0; c < d.circle_count(); ++c) {
            base[c] = slots;
            slots += d.circle_length(c);
            if (d.circle_length(c) == 0) ++free_circles_;
        }
        // ports: 4a + {0 over-in, 1 over-out, 2 under-in, 3 under-out}
        partner_.assign(4 * n, -1);
        const ArrowEnds ends = arrow_ends(d);
        std::vector<int> in_port(slots), out_port(slots);
        for (int a = 0; a < n; ++a) {
            const int t = base[ends.tail[a].circle] + ends.tail[a].slot;
            const int h = base[ends.head[a].circle] + ends.head[a].slot;
            in_port[t] = 4 * a + 0;
            out_port[t] = 4 * a + 1;
            in_port[h] = 4 * a + 2;
            out_port[h] = 4 * a + 3;
        }
        for (int c = 0; c < d.circle_count(); ++c) {
            const int len = d.circle_length(c);
            for (int s = 0; s < len; ++s) {
                const int from = out_port[base[c] + s];
                const int to = in_port[base[c] + (s + 1) % len];
                partner_[from] = to;
                partner_[to] = from;
            }
        }
        rotation_.resize(n);
        for (int a = 0; a < n; ++a) {
            // counterclockwise rotation around the crossing
            rotation_[a] = d.sign_of(a) == Sign::Plus
                               ? std::array<int, 4>{4 * a + 0, 4 * a + 2, 4 * a + 1, 4 * a + 3}
                               : std::array<int, 4>{4 * a + 0, 4 * a + 3, 4 * a + 1, 4 * a + 2};
        }
        crossings_ = n;

        // loop factors (-A^2 - A^-2)^k up to the largest possible count
        loop_factor_.resize(crossings_ + free_circles_ + 2);
        loop_factor_[0] = vknot::LaurentPoly::constant(1);
        const vknot::LaurentPoly dd =
            vknot::LaurentPoly::monomial(-1, 2) + vknot::LaurentPoly::monomial(-1, -2);
        for (std::size_t i = 1; i < loop_factor_.size(); ++i)
            loop_factor_[i] = loop_factor_[i - 1] * dd;
    }

    vknot::LaurentPoly bracket() const {
        vknot::LaurentPoly out;
        recurse(0, partner_, 0, 0, out);
        return out;
    }

    vknot::LaurentPoly f_polynomial(const vknot::GaussDiagram& d) const {
        const int w = vknot::writhe(d);
        return bracket() * vknot::LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
    }

private:
    // Splices the join (p, q): strands entering p and q become directly
    // connected; a join of two ends of the same arc closes a circle.
    static void splice(std::vector<int>& partner, int p, int q, int& circles) {
        const int x = partner[p];
        const int y = partner[q];
        if (x == q) {
            ++circles;
            return;
        }
        partner[x] = y;
        partner[y] = x;
    }

    // `exponent` carries the A powers of the smoothings chosen so far.
    void recurse(int crossing, std::vector<int> partner, int circles_closed, int exponent,
                 vknot::LaurentPoly& acc) const {
        if (crossing == crossings_) {
            const int circles = circles_closed + free_circles_;
            for (const auto& [e, coef] : loop_factor_[circles - 1].terms())
                acc.add_term(coef, e + exponent);
            return;
        }
        const auto& rot = rotation_[crossing];
        for (int which = 0; which < 2; ++which) {
            std::vector<int> next = partner;
            int closed = circles_closed;
            if (which == 0) {
                // A: join each over port to its ccw predecessor
                splice(next, rot[0], rot[3], closed);
                splice(next, rot[2], rot[1], closed);
            } else {
                splice(next, rot[0], rot[1], closed);
                splice(next, rot[2], rot[3], closed);
            }
            recurse(crossing + 1, std::move(next), closed,
                    exponent + (which == 0 ? 1 : -1), acc);
        }
    }

    int crossings_ = 0;
    int free_circles_ = 0;
    std::vector<int> partner_;
    std::vector<std::array<int, 4>> rotation_;
    std::vector<vknot::LaurentPoly> loop_factor_;
};

}  // namespace vktest
