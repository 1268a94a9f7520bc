#pragma once

#include <cstdint>

namespace vknot {

// Resource limits shared by the reachability searches.
struct SearchBudget {
    // Hard cap on arrows per diagram; 0 resolves to input arrows + 4.
    int max_arrows = 0;
    std::int64_t max_nodes = 1'000'000;
    int max_depth = 24;
    // Insertion variants enumerated per arc while expanding (see
    // enumerate_moves); 4 keeps every R1Add variant.
    int insertion_cap = 4;
    std::uint64_t seed = 0;
    int threads = 1;

    SearchBudget resolved(int input_arrows) const {
        SearchBudget b = *this;
        if (b.max_arrows <= 0) b.max_arrows = input_arrows + 4;
        if (b.insertion_cap <= 0) b.insertion_cap = 4;
        if (b.threads <= 0) b.threads = 1;
        return b;
    }
};

}  // namespace vknot
