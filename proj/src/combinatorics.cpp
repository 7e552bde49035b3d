#include "wpsi/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wpsi {

WeightedInsertion merged_insertion(const std::vector<WeightedInsertion>& block) {
    if (block.empty()) throw std::invalid_argument("merged_insertion: empty block");
    long k = 1;
    WeightSum s;
    for (const auto& ins : block) {
        k += ins.k - 1;
        s += ins.a;
    }
    return WeightedInsertion{k, s.as_weight()};
}

namespace {

void enumerate(const std::vector<WeightedInsertion>& ins, std::size_t i,
               std::vector<std::vector<int>>& blocks, std::vector<WeightSum>& sums,
               const std::function<void(const AdmissiblePartition&)>& yield) {
    if (i == ins.size()) {
        AdmissiblePartition p;
        p.blocks = blocks;
        for (auto& b : p.blocks) std::sort(b.begin(), b.end());
        yield(p);
        return;
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        WeightSum s = sums[j] + ins[i].a;
        if (!s.admissible()) continue;
        blocks[j].push_back(static_cast<int>(i));
        std::swap(sums[j], s);
        enumerate(ins, i + 1, blocks, sums, yield);
        std::swap(sums[j], s);
        blocks[j].pop_back();
    }
    // New block: a single legal weight is always admissible.
    blocks.push_back({static_cast<int>(i)});
    sums.push_back(WeightSum(ins[i].a));
    enumerate(ins, i + 1, blocks, sums, yield);
    sums.pop_back();
    blocks.pop_back();
}

}  // namespace

void admissible_partitions(const std::vector<WeightedInsertion>& ins,
                           const std::function<void(const AdmissiblePartition&)>& yield) {
    for (const auto& x : ins)
        if (x.k < 0) throw std::invalid_argument("admissible_partitions: negative descendant index");
    if (ins.empty()) return;
    std::vector<std::vector<int>> blocks;
    std::vector<WeightSum> sums;
    enumerate(ins, 0, blocks, sums, yield);
}

std::vector<AdmissiblePartition> admissible_partitions(const std::vector<WeightedInsertion>& ins) {
    std::vector<AdmissiblePartition> out;
    admissible_partitions(ins, [&](const AdmissiblePartition& p) { out.push_back(p); });
    return out;
}

std::vector<AdmissiblePartition> admissible_partitions_brute_force(const std::vector<WeightedInsertion>& ins) {
    std::vector<AdmissiblePartition> out;
    if (ins.empty()) return out;
    const int n = static_cast<int>(ins.size());
    // Restricted growth strings without pruning.
    std::vector<int> rgs(n, 0);
    const std::function<void(int, int)> rec = [&](int i, int maxb) {
        if (i == n) {
            AdmissiblePartition p;
            p.blocks.assign(maxb + 1, {});
            for (int j = 0; j < n; ++j) p.blocks[rgs[j]].push_back(j);
            for (const auto& b : p.blocks) {
                WeightSum s;
                for (int j : b) s += ins[j].a;
                if (!s.admissible()) return;
            }
            out.push_back(p);
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(maxb, b));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
    return out;
}

Int aut_count(std::vector<WeightedInsertion> ins) {
    std::sort(ins.begin(), ins.end());
    Int aut(1);
    std::size_t run = 1;
    for (std::size_t i = 1; i <= ins.size(); ++i) {
        if (i < ins.size() && ins[i] == ins[i - 1]) {
            ++run;
        } else {
            aut *= factorial(static_cast<unsigned long>(run));
            run = 1;
        }
    }
    return aut;
}

std::vector<SublistClass> power_classes(const std::vector<WeightedInsertion>& ins, bool include_full) {
    if (ins.empty()) throw std::invalid_argument("power_classes: empty list");
    // Group into distinct values with multiplicities, then enumerate sub-multisets.
    std::map<WeightedInsertion, int> mult;
    for (const auto& x : ins) ++mult[x];
    std::vector<std::pair<WeightedInsertion, int>> vals(mult.begin(), mult.end());

    std::vector<SublistClass> out;
    std::vector<int> take(vals.size(), 0);
    const std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == vals.size()) {
            SublistClass c;
            c.multiplicity = 1;
            bool empty = true, full = true;
            Int m(1);
            for (std::size_t j = 0; j < vals.size(); ++j) {
                if (take[j] > 0) empty = false;
                if (take[j] < vals[j].second) full = false;
                for (int r = 0; r < take[j]; ++r) c.representative.push_back(vals[j].first);
                for (int r = take[j]; r < vals[j].second; ++r) c.complement.push_back(vals[j].first);
                m *= binomial(vals[j].second, take[j]);
            }
            if (empty || (full && !include_full)) return;
            c.multiplicity = m.get_si();
            out.push_back(std::move(c));
            return;
        }
        for (int t = 0; t <= vals[i].second; ++t) {
            take[i] = t;
            rec(i + 1);
        }
        take[i] = 0;
    };
    rec(0);
    return out;
}

}  // namespace wpsi
