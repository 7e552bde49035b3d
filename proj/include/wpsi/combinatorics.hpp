#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "wpsi/weights.hpp"

namespace wpsi {

/// One insertion tau_{k;a}. Negative k occurs transiently inside merged blocks
/// and the h-function machinery; marked-point inputs have k >= 0.
struct WeightedInsertion {
    long k;
    Weight a;

    bool operator==(const WeightedInsertion& o) const { return k == o.k && a == o.a; }
    bool operator<(const WeightedInsertion& o) const {
        if (k != o.k) return k < o.k;
        return a < o.a;
    }
};

/// A set partition of {0..n-1} with every block's weight sum admissible.
/// Blocks are ordered by smallest contained index, indices sorted within a block.
struct AdmissiblePartition {
    std::vector<std::vector<int>> blocks;

    int size() const {
        int n = 0;
        for (const auto& b : blocks) n += static_cast<int>(b.size());
        return n;
    }
};

/// codim(p) = n - (number of blocks).
inline int codim(const AdmissiblePartition& p) {
    return p.size() - static_cast<int>(p.blocks.size());
}

/// Merged insertion of a block: k' = 1 + sum(k_j - 1), weight = block weight sum.
/// The sum must be admissible (blocks of admissible partitions always are);
/// negative k' is legal and propagated.
WeightedInsertion merged_insertion(const std::vector<WeightedInsertion>& block);

/// Enumerates every admissible set partition exactly once, in restricted-growth
/// order, pruning a block as soon as its weight sum becomes inadmissible.
/// Requires all k >= 0.
void admissible_partitions(const std::vector<WeightedInsertion>& ins,
                           const std::function<void(const AdmissiblePartition&)>& yield);

std::vector<AdmissiblePartition> admissible_partitions(const std::vector<WeightedInsertion>& ins);

/// Test oracle: all set partitions (no pruning), filtered by admissibility.
std::vector<AdmissiblePartition> admissible_partitions_brute_force(const std::vector<WeightedInsertion>& ins);

/// An equivalence class of sublists of a weighted insertion list, identified by
/// its underlying multiset. multiplicity = number of index subsets realizing the
/// class = #Aut(full) / (#Aut(sub) * #Aut(complement)).
struct SublistClass {
    std::vector<WeightedInsertion> representative;  // sorted
    std::vector<WeightedInsertion> complement;      // sorted
    long multiplicity;
};

/// One entry per class of nonempty sublists; the full list is a class iff include_full.
std::vector<SublistClass> power_classes(const std::vector<WeightedInsertion>& ins, bool include_full);

/// #Aut of a list = product of multiplicities-factorial of its multiset.
Int aut_count(std::vector<WeightedInsertion> ins);

}  // namespace wpsi
