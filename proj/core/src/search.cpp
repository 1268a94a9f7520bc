#include "vknot/search.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "vknot/invariants.hpp"

namespace vknot {

namespace {

int move_growth(const Move& m) {
    return m.kind == MoveKind::R1Add ? 1 : m.kind == MoveKind::R2Add ? 2 : 0;
}

// Canonical forms of all children of `code` under the regime, in
// enumeration order (duplicates included; the caller dedupes).
std::vector<std::string> expand_node(const std::string& code, Regime regime,
                                      const SearchBudget& budget) {
    const GaussDiagram d = parse(code);
    std::vector<std::string> children;
    for (const Move& move : enumerate_moves(d, regime, budget.insertion_cap)) {
        if (d.arrow_count() + move_growth(move) > budget.max_arrows) continue;
        children.push_back(canonical_form(apply_move(d, move)));
    }
    return children;
}

struct Side {
    std::unordered_map<std::string, int> index;  // canonical form -> node id
    std::vector<std::string> code;               // node id -> canonical form
    std::vector<int> parent;                     // node id -> parent id (-1 at root)
    std::vector<int> frontier;                   // current level's node ids
    int depth = 0;

    int add(std::string canonical, int parent_id) {
        const int id = static_cast<int>(code.size());
        index.emplace(canonical, id);
        code.push_back(std::move(canonical));
        parent.push_back(parent_id);
        return id;
    }
};

// Expands one breadth level of `side`. The frontier is split into
// order-preserving chunks, one per worker; merging concatenates the
// workers' outputs in chunk order, so the result is the same as a
// sequential expansion for every thread count. Returns false when the
// node budget is exhausted.
bool expand_level(Side& side, Regime regime, const SearchBudget& budget,
                  std::int64_t& nodes_total) {
    const std::size_t frontier_size = side.frontier.size();
    const int threads =
        static_cast<int>(std::min<std::size_t>(budget.threads, frontier_size));
    std::vector<std::vector<std::vector<std::string>>> results(
        std::max(threads, 1));  // per worker, per frontier node, children

    auto run_chunk = [&](int w, std::size_t begin, std::size_t end) {
        auto& out = results[w];
        out.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i)
            out.push_back(expand_node(side.code[side.frontier[i]], regime, budget));
    };

    if (threads <= 1) {
        run_chunk(0, 0, frontier_size);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            const std::size_t begin = frontier_size * w / threads;
            const std::size_t end = frontier_size * (w + 1) / threads;
            pool.emplace_back(run_chunk, w, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    std::vector<int> next;
    std::size_t node_index = 0;
    for (const auto& chunk : results) {
        for (const auto& children : chunk) {
            const int parent_id = side.frontier[node_index++];
            for (const std::string& child : children) {
                if (side.index.count(child)) continue;
                if (nodes_total >= budget.max_nodes) return false;
                ++nodes_total;
                next.push_back(side.add(child, parent_id));
            }
        }
    }
    side.frontier = std::move(next);
    side.depth++;
    return true;
}

std::vector<std::string> chain_to_root(const Side& side, int id) {
    std::vector<std::string> chain;
    for (int cur = id; cur >= 0; cur = side.parent[cur]) chain.push_back(side.code[cur]);
    return chain;  // node .. root
}

std::optional<Move> find_edge(const GaussDiagram& from, const std::string& target,
                              Regime regime, const SearchBudget& budget) {
    // Enumerate without the insertion cap: a reverse edge of a capped
    // deletion may need an insertion variant the cap truncated.
    for (const Move& move : enumerate_moves(from, regime)) {
        if (from.arrow_count() + move_growth(move) > budget.max_arrows) continue;
        if (canonical_form(apply_move(from, move)) == target) return move;
    }
    return std::nullopt;
}

// Rebuilds the move sequence along a chain of canonical forms. Every
// consecutive pair is one move apart by construction of the search trees;
// the concrete move is recovered against the canonical representative.
std::vector<Move> derive_path(const std::vector<std::string>& chain, Regime regime,
                              const SearchBudget& budget) {
    std::vector<Move> path;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const GaussDiagram from = parse(chain[i]);
        std::optional<Move> move = find_edge(from, chain[i + 1], regime, budget);
        if (!move)
            throw std::logic_error("search: no move between adjacent canonical forms");
        path.push_back(std::move(*move));
    }
    return path;
}

}  // namespace

SearchVerdict equivalent_within(const GaussDiagram& d1, const GaussDiagram& d2,
                                Regime regime, const SearchBudget& raw_budget) {
    const SearchBudget budget =
        raw_budget.resolved(std::max(d1.arrow_count(), d2.arrow_count()));

    // Cheap invariant screens valid for the regime.
    if (component_count(d1) != component_count(d2)) {
        SearchVerdict v;
        v.kind = SearchVerdict::Kind::Distinguished;
        v.witness = {"component_count", std::to_string(component_count(d1)),
                     std::to_string(component_count(d2))};
        return v;
    }
    if (regime == Regime::Virtual) {
        if (d1.circle_count() == 1 && d2.circle_count() == 1) {
            const int j1 = odd_writhe(d1), j2 = odd_writhe(d2);
            if (j1 != j2) {
                SearchVerdict v;
                v.kind = SearchVerdict::Kind::Distinguished;
                v.witness = {"odd_writhe", std::to_string(j1), std::to_string(j2)};
                return v;
            }
        }
        if (d1.arrow_count() <= kDefaultStateSumCap &&
            d2.arrow_count() <= kDefaultStateSumCap) {
            const LaurentPoly f1 = f_polynomial(d1), f2 = f_polynomial(d2);
            if (!(f1 == f2)) {
                SearchVerdict v;
                v.kind = SearchVerdict::Kind::Distinguished;
                v.witness = {"f_polynomial", f1.to_string(), f2.to_string()};
                return v;
            }
        }
    }

    // Bidirectional breadth-first search over canonical forms.
    Side fwd, bwd;
    std::int64_t nodes_total = 0;
    const std::string start = canonical_form(d1);
    const std::string end = canonical_form(d2);
    fwd.add(start, -1);
    bwd.add(end, -1);
    fwd.frontier = {0};
    bwd.frontier = {0};
    nodes_total = 2;

    auto make_proven = [&](const std::string& meet) {
        std::vector<std::string> left = chain_to_root(fwd, fwd.index.at(meet));
        std::reverse(left.begin(), left.end());  // start .. meet
        std::vector<std::string> right = chain_to_root(bwd, bwd.index.at(meet));
        // right is meet .. end
        std::vector<std::string> chain = std::move(left);
        chain.insert(chain.end(), right.begin() + 1, right.end());
        SearchVerdict v;
        v.kind = SearchVerdict::Kind::Proven;
        v.path = derive_path(chain, regime, budget);
        return v;
    };

    if (start == end) {
        SearchVerdict v;
        v.kind = SearchVerdict::Kind::Proven;
        return v;
    }

    bool exhausted = false;
    while (!exhausted) {
        if (fwd.depth + bwd.depth >= budget.max_depth) break;
        Side* primary = nullptr;
        // Expand the smaller nonempty frontier; ties go forward.
        if (!fwd.frontier.empty() &&
            (bwd.frontier.empty() || fwd.frontier.size() <= bwd.frontier.size()))
            primary = &fwd;
        else if (!bwd.frontier.empty())
            primary = &bwd;
        else
            break;

        const std::size_t first_new = primary->code.size();
        if (!expand_level(*primary, regime, budget, nodes_total)) exhausted = true;

        const Side& other = primary == &fwd ? bwd : fwd;
        for (std::size_t id = first_new; id < primary->code.size(); ++id) {
            if (other.index.count(primary->code[id]))
                return make_proven(primary->code[id]);
        }
        if (primary->frontier.empty() && !exhausted &&
            (primary == &fwd ? bwd : fwd).frontier.empty())
            break;
    }

    SearchVerdict v;
    v.kind = SearchVerdict::Kind::Unknown;
    v.stats = {nodes_total, fwd.depth, bwd.depth,
               static_cast<std::int64_t>(fwd.frontier.size()),
               static_cast<std::int64_t>(bwd.frontier.size())};
    return v;
}

SearchVerdict unknot_with_forbidden(const GaussDiagram& d, const SearchBudget& budget) {
    if (d.circle_count() != 1)
        throw NotAKnotError("unknot_with_forbidden is defined for single-circle diagrams");
    return equivalent_within(d, parse("@"), Regime::AllForbidden, budget);
}

std::set<std::string> orbit(const GaussDiagram& d, Regime regime,
                            const SearchBudget& raw_budget) {
    const SearchBudget budget = raw_budget.resolved(d.arrow_count());
    Side side;
    side.add(canonical_form(d), -1);
    side.frontier = {0};
    std::int64_t nodes_total = 1;
    while (!side.frontier.empty() && side.depth < budget.max_depth) {
        if (!expand_level(side, regime, budget, nodes_total)) break;
    }
    std::set<std::string> out;
    for (const std::string& code : side.code) out.insert(code);
    return out;
}

Certificate make_certificate(const GaussDiagram& d1, const GaussDiagram& d2,
                             Regime regime, const SearchBudget& budget,
                             std::vector<Move> path) {
    Certificate cert;
    cert.start = canonical_form(d1);
    cert.end = canonical_form(d2);
    cert.regime = regime;
    cert.budget = budget.resolved(std::max(d1.arrow_count(), d2.arrow_count()));
    cert.path = std::move(path);
    return cert;
}

std::string certificate_to_string(const Certificate& cert) {
    std::ostringstream out;
    out << "vknot certificate v1\n";
    out << "regime: " << regime_name(cert.regime) << '\n';
    // The thread count never affects the verdict and is not recorded.
    out << "budget: max-arrows=" << cert.budget.max_arrows
        << " nodes=" << cert.budget.max_nodes << " depth=" << cert.budget.max_depth
        << " icap=" << cert.budget.insertion_cap << " seed=" << cert.budget.seed << '\n';
    out << "start: " << cert.start << '\n';
    out << "end: " << cert.end << '\n';
    out << "moves: " << cert.path.size() << '\n';
    for (const Move& move : cert.path) out << move_to_string(move) << '\n';
    return out.str();
}

namespace {

std::string expect_prefix(const std::string& line, const std::string& prefix) {
    if (line.rfind(prefix, 0) != 0)
        throw Error("certificate: expected '" + prefix + "' line, got '" + line + "'");
    return line.substr(prefix.size());
}

}  // namespace

Certificate certificate_from_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto next_line = [&]() {
        if (!std::getline(in, line)) throw Error("certificate: truncated");
        return line;
    };

    if (next_line() != "vknot certificate v1")
        throw Error("certificate: bad header");
    Certificate cert;
    const std::string regime = expect_prefix(next_line(), "regime: ");
    if (regime == "virtual")
        cert.regime = Regime::Virtual;
    else if (regime == "welded")
        cert.regime = Regime::Welded;
    else if (regime == "all-forbidden")
        cert.regime = Regime::AllForbidden;
    else
        throw Error("certificate: unknown regime '" + regime + "'");

    {
        std::istringstream fields(expect_prefix(next_line(), "budget: "));
        std::string field;
        while (fields >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos) throw Error("certificate: bad budget field");
            const std::string key = field.substr(0, eq);
            const long long value = std::stoll(field.substr(eq + 1));
            if (key == "max-arrows")
                cert.budget.max_arrows = static_cast<int>(value);
            else if (key == "nodes")
                cert.budget.max_nodes = value;
            else if (key == "depth")
                cert.budget.max_depth = static_cast<int>(value);
            else if (key == "icap")
                cert.budget.insertion_cap = static_cast<int>(value);
            else if (key == "seed")
                cert.budget.seed = static_cast<std::uint64_t>(value);
            else
                throw Error("certificate: unknown budget field '" + key + "'");
        }
    }

    cert.start = expect_prefix(next_line(), "start: ");
    cert.end = expect_prefix(next_line(), "end: ");
    const long long count = std::stoll(expect_prefix(next_line(), "moves: "));
    for (long long i = 0; i < count; ++i) cert.path.push_back(move_from_string(next_line()));
    return cert;
}

bool replay_certificate(const Certificate& cert) {
    try {
        GaussDiagram current = parse(cert.start);
        if (canonical_form(current) != cert.start) return false;
        for (const Move& move : cert.path)
            current = parse(canonical_form(apply_move(current, move)));
        return canonical_form(current) == cert.end;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace vknot
