#include "vknot/surface.hpp"

#include <numeric>
#include <sstream>
#include <unordered_set>

#include "vknot/moves.hpp"

namespace vknot {

RotationSystem rotation_system(const GaussDiagram& d) {
    RotationSystem rs;
    rs.crossings = d.arrow_count();

    std::vector<int> circle_base(d.circle_count(), 0);
    int total_slots = 0;
    for (int c = 0; c < d.circle_count(); ++c) {
        circle_base[c] = total_slots;
        const int len = d.circle_length(c);
        total_slots += len;
        if (len == 0) ++rs.free_loops;
    }

    rs.rotation.assign(2 * total_slots, -1);
    rs.edge_partner.assign(2 * total_slots, -1);
    rs.crossing_of.assign(2 * total_slots, -1);

    for (int c = 0; c < d.circle_count(); ++c) {
        const int len = d.circle_length(c);
        for (int s = 0; s < len; ++s) {
            const int out = 2 * (circle_base[c] + s) + 1;
            const int in = 2 * (circle_base[c] + (s + 1) % len);
            rs.edge_partner[out] = in;
            rs.edge_partner[in] = out;
        }
    }

    const ArrowEnds ends = arrow_ends(d);
    for (int a = 0; a < d.arrow_count(); ++a) {
        const int t = circle_base[ends.tail[a].circle] + ends.tail[a].slot;
        const int h = circle_base[ends.head[a].circle] + ends.head[a].slot;
        const int over_in = 2 * t, over_out = 2 * t + 1;
        const int under_in = 2 * h, under_out = 2 * h + 1;
        // Counterclockwise order around the crossing; the sign decides how
        // the under strand interleaves with the over strand.
        std::array<int, 4> cycle = d.sign_of(a) == Sign::Plus
                                       ? std::array<int, 4>{over_in, under_in, over_out, under_out}
                                       : std::array<int, 4>{over_in, under_out, over_out, under_in};
        for (int i = 0; i < 4; ++i) {
            rs.rotation[cycle[i]] = cycle[(i + 1) % 4];
            rs.crossing_of[cycle[i]] = a;
        }
    }
    return rs;
}

GenusReport genus(const GaussDiagram& d) {
    const RotationSystem rs = rotation_system(d);
    const int darts = rs.dart_count();

    // Connected components of the underlying 4-valent graph, by
    // union-find over darts.
    std::vector<int> parent(darts);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int dart = 0; dart < darts; ++dart) {
        const int a = find(dart), b = find(rs.rotation[dart]);
        if (a != b) parent[a] = b;
        const int c = find(dart), e = find(rs.edge_partner[dart]);
        if (c != e) parent[c] = e;
    }
    std::vector<int> comp(darts, -1);
    int comp_count = 0;
    for (int dart = 0; dart < darts; ++dart) {
        const int root = find(dart);
        if (comp[root] < 0) comp[root] = comp_count++;
        comp[dart] = comp[root];
    }

    std::vector<int> comp_crossings(comp_count, 0);
    std::vector<int> comp_faces(comp_count, 0);
    {
        std::vector<char> seen_arrow(d.arrow_count(), 0);
        for (int dart = 0; dart < darts; ++dart) {
            const int a = rs.crossing_of[dart];
            if (!seen_arrow[a]) {
                seen_arrow[a] = 1;
                comp_crossings[comp[dart]]++;
            }
        }
    }

    // Faces are the orbits of rotation∘edge_partner.
    std::vector<char> visited(darts, 0);
    for (int start = 0; start < darts; ++start) {
        if (visited[start]) continue;
        int dart = start;
        do {
            visited[dart] = 1;
            dart = rs.rotation[rs.edge_partner[dart]];
        } while (dart != start);
        comp_faces[comp[start]]++;
    }

    GenusReport report;
    for (int c = 0; c < comp_count; ++c) {
        ComponentGenus cg;
        cg.crossings = comp_crossings[c];
        cg.boundary_curves = comp_faces[c];
        cg.genus = (2 + cg.crossings - cg.boundary_curves) / 2;
        report.components.push_back(cg);
    }
    // Crossing-free circles cap off to spheres with two boundary curves.
    for (int i = 0; i < rs.free_loops; ++i)
        report.components.push_back(ComponentGenus{0, 2, 0});

    for (const ComponentGenus& cg : report.components) {
        report.crossings += cg.crossings;
        report.boundary_curves += cg.boundary_curves;
        report.genus += cg.genus;
    }
    return report;
}

std::string GenusReport::to_json() const {
    std::ostringstream out;
    out << "{\"crossings\":" << crossings << ",\"boundary_curves\":" << boundary_curves
        << ",\"genus\":" << genus << ",\"components\":[";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out << ',';
        out << "{\"crossings\":" << components[i].crossings
            << ",\"boundary_curves\":" << components[i].boundary_curves
            << ",\"genus\":" << components[i].genus << '}';
    }
    out << "]}";
    return out.str();
}

bool is_realizable(const GaussDiagram& d) { return genus(d).genus == 0; }

int genus_upper_bound(const GaussDiagram& d, const SearchBudget& budget) {
    const SearchBudget b = budget.resolved(d.arrow_count());
    int best = genus(d).genus;
    if (best == 0) return 0;

    std::unordered_set<std::string> visited;
    std::vector<std::string> frontier{canonical_form(d)};
    visited.insert(frontier.front());
    std::int64_t nodes = 1;

    for (int depth = 0; depth < b.max_depth && !frontier.empty(); ++depth) {
        std::vector<std::string> next;
        for (const std::string& code : frontier) {
            const GaussDiagram current = parse(code);
            for (const Move& move : enumerate_moves(current, Regime::Virtual, b.insertion_cap)) {
                const int grow = move.kind == MoveKind::R1Add   ? 1
                                 : move.kind == MoveKind::R2Add ? 2
                                                                : 0;
                if (current.arrow_count() + grow > b.max_arrows) continue;
                const GaussDiagram child = apply_move(current, move);
                std::string key = canonical_form(child);
                if (!visited.insert(key).second) continue;
                if (++nodes > b.max_nodes) return best;
                const int g = genus(child).genus;
                if (g < best) {
                    best = g;
                    if (best == 0) return 0;
                }
                next.push_back(std::move(key));
            }
        }
        frontier = std::move(next);
    }
    return best;
}

}  // namespace vknot
