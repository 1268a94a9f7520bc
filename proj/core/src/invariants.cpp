#include "vknot/invariants.hpp"

#include <numeric>

#include "vknot/errors.hpp"

namespace vknot {

int writhe(const GaussDiagram& d) {
    int w = 0;
    for (Sign s : d.signs()) w += sign_value(s);
    return w;
}

namespace {

void require_knot(const GaussDiagram& d, const char* op) {
    if (d.circle_count() != 1)
        throw NotAKnotError(std::string(op) + " is defined for single-circle diagrams");
}

// First and second slot of each arrow along the single circle.
struct Occurrences {
    std::vector<int> first;
    std::vector<int> second;
};

Occurrences occurrences(const GaussDiagram& d) {
    Occurrences occ;
    occ.first.assign(d.arrow_count(), -1);
    occ.second.assign(d.arrow_count(), -1);
    const auto& word = d.circles()[0];
    for (int s = 0; s < static_cast<int>(word.size()); ++s) {
        const int a = word[s].arrow;
        (occ.first[a] < 0 ? occ.first[a] : occ.second[a]) = s;
    }
    return occ;
}

}  // namespace

std::vector<std::uint8_t> parity(const GaussDiagram& d) {
    require_knot(d, "parity");
    // single pass: record the first slot, resolve on the second
    std::vector<int> first(d.arrow_count(), -1);
    std::vector<std::uint8_t> bits(d.arrow_count(), 0);
    const auto& word = d.circles()[0];
    for (int s = 0; s < static_cast<int>(word.size()); ++s) {
        const int a = word[s].arrow;
        if (first[a] < 0)
            first[a] = s;
        else
            bits[a] = static_cast<std::uint8_t>((s - first[a] - 1) & 1);
    }
    return bits;
}

int odd_writhe(const GaussDiagram& d) {
    require_knot(d, "odd_writhe");
    const std::vector<std::uint8_t> bits = parity(d);
    int j = 0;
    for (int a = 0; a < d.arrow_count(); ++a)
        if (bits[a]) j += sign_value(d.sign_of(a));
    return j;
}

std::vector<std::vector<std::uint8_t>> interlacement(const GaussDiagram& d) {
    require_knot(d, "interlacement");
    const Occurrences occ = occurrences(d);
    const int n = d.arrow_count();
    std::vector<std::vector<std::uint8_t>> m(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool j_first_inside =
                occ.first[j] > occ.first[i] && occ.first[j] < occ.second[i];
            const bool j_second_inside =
                occ.second[j] > occ.first[i] && occ.second[j] < occ.second[i];
            if (j_first_inside != j_second_inside) m[i][j] = m[j][i] = 1;
        }
    return m;
}

namespace {

// Flat union-find over strand germs; germs 2k (incoming) and 2k+1
// (outgoing) belong to global slot k.
struct UnionFind {
    std::vector<int> parent;

    void reset(int n) {
        parent.resize(n);
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Returns true when the union merged two distinct classes.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

LaurentPoly bracket(const GaussDiagram& d, int state_cap) {
    const int n = d.arrow_count();
    if (n > state_cap)
        throw BudgetExceededError("state sum over " + std::to_string(n) +
                                  " arrows exceeds the cap of " + std::to_string(state_cap));

    // Global slot indices and free circles.
    int free_circles = 0;
    std::vector<int> circle_base(d.circle_count(), 0);
    int total_slots = 0;
    for (int c = 0; c < d.circle_count(); ++c) {
        circle_base[c] = total_slots;
        const int len = d.circle_length(c);
        total_slots += len;
        if (len == 0) ++free_circles;
    }

    // Arc germ pairings are state independent.
    UnionFind base;
    base.reset(2 * total_slots);
    for (int c = 0; c < d.circle_count(); ++c) {
        const int len = d.circle_length(c);
        for (int s = 0; s < len; ++s) {
            const int out = 2 * (circle_base[c] + s) + 1;
            const int in = 2 * (circle_base[c] + (s + 1) % len);
            base.unite(out, in);
        }
    }
    for (int g = 0; g < 2 * total_slots; ++g) base.find(g);  // flatten

    const ArrowEnds ends = arrow_ends(d);
    std::vector<int> tail_in(n), tail_out(n), head_in(n), head_out(n);
    for (int a = 0; a < n; ++a) {
        const int t = circle_base[ends.tail[a].circle] + ends.tail[a].slot;
        const int h = circle_base[ends.head[a].circle] + ends.head[a].slot;
        tail_in[a] = 2 * t;
        tail_out[a] = 2 * t + 1;
        head_in[a] = 2 * h;
        head_out[a] = 2 * h + 1;
    }

    // loop_hist[k][l]: states with k A-smoothings and l loops. Loops never
    // exceed the post-arc component count plus the free circles.
    std::vector<std::vector<std::int64_t>> loop_hist(
        n + 1, std::vector<std::int64_t>(total_slots + free_circles + 2, 0));

    UnionFind uf;
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
        uf.parent = base.parent;
        int merges = 0;
        int a_count = 0;
        for (int a = 0; a < n; ++a) {
            const bool a_smoothing = (state >> a) & 1;
            if (a_smoothing) ++a_count;
            // A of a positive arrow is the oriented reconnection; the
            // negative case swaps the two.
            const bool oriented = a_smoothing == (d.sign_of(a) == Sign::Plus);
            if (oriented) {
                if (uf.unite(tail_in[a], head_out[a])) ++merges;
                if (uf.unite(head_in[a], tail_out[a])) ++merges;
            } else {
                if (uf.unite(tail_in[a], head_in[a])) ++merges;
                if (uf.unite(tail_out[a], head_out[a])) ++merges;
            }
        }
        const int loops = (2 * total_slots - total_slots - merges) + free_circles;
        loop_hist[a_count][loops]++;
    }

    // Assemble: sum_k sum_l hist * A^(2k - n) * dd^(l - 1).
    const LaurentPoly dd = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    std::vector<LaurentPoly> dd_pow(total_slots + free_circles + 2);
    dd_pow[0] = LaurentPoly::constant(1);
    for (std::size_t i = 1; i < dd_pow.size(); ++i) dd_pow[i] = dd_pow[i - 1] * dd;

    LaurentPoly result;
    for (int k = 0; k <= n; ++k)
        for (std::size_t l = 1; l < loop_hist[k].size(); ++l) {
            const std::int64_t count = loop_hist[k][l];
            if (count == 0) continue;
            LaurentPoly term = dd_pow[l - 1];
            term *= LaurentPoly::monomial(count, 2 * k - n);
            result += term;
        }
    // With no slots at all, the single empty state still contributes.
    if (total_slots == 0 && free_circles == 0) result = LaurentPoly::constant(1);
    return result;
}

LaurentPoly f_polynomial(const GaussDiagram& d, int state_cap) {
    const int w = writhe(d);
    // (-A^3)^{-w}
    const std::int64_t sign = (w % 2 == 0) ? 1 : -1;
    return bracket(d, state_cap) * LaurentPoly::monomial(sign, -3 * w);
}

}  // namespace vknot
