#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vknot/budget.hpp"
#include "vknot/gauss.hpp"
#include "vknot/moves.hpp"

namespace vknot {

struct DistinguishedWitness {
    std::string invariant;
    std::string lhs;
    std::string rhs;
};

struct UnknownStats {
    std::int64_t nodes = 0;
    int depth_forward = 0;
    int depth_backward = 0;
    std::int64_t frontier_forward = 0;
    std::int64_t frontier_backward = 0;
};

// Semi-decision certificate: Proven carries a replayable move path,
// Distinguished a recomputable invariant witness, Unknown the frontier
// statistics at budget exhaustion. Never claims inequivalence without a
// regime-valid invariant.
struct SearchVerdict {
    enum class Kind { Proven, Distinguished, Unknown };

    Kind kind = Kind::Unknown;
    std::vector<Move> path;          // Proven
    DistinguishedWitness witness;    // Distinguished
    UnknownStats stats;              // Unknown
};

// Bounded bidirectional breadth-first search over canonical forms.
// Cheap invariants run first: component count always; odd writhe and the
// f-polynomial only under the Virtual regime (the forbidden moves do not
// preserve them). Deterministic for fixed inputs, budget and seed, and
// independent of the thread count.
SearchVerdict equivalent_within(const GaussDiagram& d1, const GaussDiagram& d2,
                                Regime regime, const SearchBudget& budget);

// equivalent_within(d, unknot, AllForbidden, budget) for knots.
// Throws NotAKnotError on multi-circle input.
SearchVerdict unknot_with_forbidden(const GaussDiagram& d, const SearchBudget& budget);

// Every canonical form reachable within the budget.
std::set<std::string> orbit(const GaussDiagram& d, Regime regime,
                            const SearchBudget& budget);

// Text certificate for a Proven verdict: a header naming both canonical
// endpoints, the regime and the budget, then one move per line. Replaying
// applies each move to the canonical representative of the current node:
//   next = canonical_form(apply_move(parse(current), move)).
struct Certificate {
    std::string start;   // canonical form of d1
    std::string end;     // canonical form of d2
    Regime regime = Regime::Virtual;
    SearchBudget budget;
    std::vector<Move> path;
};

Certificate make_certificate(const GaussDiagram& d1, const GaussDiagram& d2,
                             Regime regime, const SearchBudget& budget,
                             std::vector<Move> path);
std::string certificate_to_string(const Certificate& cert);
Certificate certificate_from_string(std::string_view text);

// Re-validates a certificate by replaying its path. Returns false when a
// move fails to apply or the endpoints do not match.
bool replay_certificate(const Certificate& cert);

}  // namespace vknot
