#pragma once

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wpsi/combinatorics.hpp"
#include "wpsi/hfunction.hpp"
#include "wpsi/weights.hpp"

namespace wpsi {

/// g = (sum k - n + 3)/3 when that is a nonnegative integer, otherwise nothing
/// (the correlator vanishes for dimensional reasons).
std::optional<int> genus_for(const std::vector<long>& ks);
std::optional<int> genus_for(const std::vector<WeightedInsertion>& ins);

/// Canonical correlator key: insertions sorted by (k, weight), genus derived
/// from the dimension constraint 3g - 3 + n = sum k.
struct CorrelatorKey {
    std::vector<WeightedInsertion> ins;
    int genus = 0;

    static std::optional<CorrelatorKey> make(std::vector<WeightedInsertion> ins);
    bool operator<(const CorrelatorKey& o) const { return ins < o.ins; }
    bool operator==(const CorrelatorKey& o) const { return ins == o.ins; }
};

std::string to_string(const CorrelatorKey& key);

/// The exact correlator engine. Weight-1 numbers come from the DVV recursion;
/// weighted correlators are computed either by the partition reduction over
/// admissible partitions or by the generalized recursion that raises one
/// insertion's weight. Both modes are memoized independently so their agreement
/// is a meaningful cross-check, and the weight-1 engine is shared as the base
/// of the reduction.
class CorrelatorEngine {
  public:
    enum class Mode { PartitionSum, Recursion };
    enum class CacheMode { Trust, Verify };

    /// Weight-1 correlator <tau_{k_1} ... tau_{k_n}> of the derived genus.
    Rat unweighted(std::vector<long> ks);

    Rat weighted(std::vector<WeightedInsertion> ins, Mode mode = Mode::Recursion);

    struct TableEntry {
        CorrelatorKey key;
        Rat value;
    };
    /// All nonzero correlators with n <= max_n, g <= max_genus and weights in A,
    /// in deterministic (sorted) order.
    std::vector<TableEntry> build_F_coefficients(const WeightSet& A, int max_n, int max_genus,
                                                 Mode mode = Mode::Recursion);

    /// Line-delimited JSON records {"g":int,"ins":[[k,"w"],...],"val":"num/den"}.
    void save_cache(std::ostream& out) const;
    void save_cache(const std::string& path) const;
    /// Trust loads records as-is; Verify recomputes every record first and
    /// throws std::runtime_error on any mismatch or malformed/unknown field.
    std::size_t load_cache(std::istream& in, CacheMode mode);
    std::size_t load_cache(const std::string& path, CacheMode mode);

    std::size_t cached_entries() const;

  private:
    Rat unweighted_locked(std::vector<long>& ks);
    Rat weighted_partition_sum(const std::vector<WeightedInsertion>& sorted);
    Rat weighted_recursion(const std::vector<WeightedInsertion>& sorted);

    std::map<std::vector<long>, Rat> ucache_;
    std::map<std::vector<WeightedInsertion>, Rat> pcache_;
    std::map<std::vector<WeightedInsertion>, Rat> rcache_;
    mutable std::mutex mu_;
};

}  // namespace wpsi
