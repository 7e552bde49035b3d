#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "wpsi/rational.hpp"

namespace wpsi {

/// A Hassett weight in [0^+, 1]: an exact rational value plus an "infinitesimal"
/// flag meaning "plus an infinitesimal". The bare value 0 is not a weight; 0^+ is
/// represented as (0, true). 1^+ is not representable as a Weight at all, only as
/// a WeightSum.
class Weight {
  public:
    Weight(Rat value, bool infinitesimal);

    static Weight one() { return Weight(Rat(1), false); }
    static Weight zero_plus() { return Weight(Rat(0), true); }

    const Rat& value() const { return value_; }
    bool infinitesimal() const { return inf_; }
    bool is_one() const { return !inf_ && value_ == 1; }

    bool operator==(const Weight& o) const { return value_ == o.value_ && inf_ == o.inf_; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    // Canonical order: by value, then bare before infinitesimal (a < a^+).
    bool operator<(const Weight& o) const {
        int c = cmp(value_, o.value_);
        if (c != 0) return c < 0;
        return inf_ < o.inf_;
    }

  private:
    Rat value_;
    bool inf_;
};

/// Grammar: "1" | "0+" | "p/q" (0 < p <= q), optionally with a trailing '+'
/// to mark an infinitesimally shifted weight, e.g. "1/2+".
Weight parse_weight(const std::string& text);
std::string to_string(const Weight& w);

/// A finite sum of weights. Closed under addition: values add, infinitesimal
/// flags OR together. May exceed 1; it is compared against 1, never clamped.
class WeightSum {
  public:
    WeightSum() : value_(0), inf_(false) {}
    explicit WeightSum(const Weight& w) : value_(w.value()), inf_(w.infinitesimal()) {}
    WeightSum(Rat value, bool infinitesimal) : value_(std::move(value)), inf_(infinitesimal) {}

    WeightSum& operator+=(const Weight& w) {
        value_ += w.value();
        inf_ = inf_ || w.infinitesimal();
        return *this;
    }
    WeightSum& operator+=(const WeightSum& s) {
        value_ += s.value_;
        inf_ = inf_ || s.inf_;
        return *this;
    }
    friend WeightSum operator+(WeightSum a, const Weight& b) { return a += b; }
    friend WeightSum operator+(WeightSum a, const WeightSum& b) { return a += b; }

    const Rat& value() const { return value_; }
    bool infinitesimal() const { return inf_; }

    bool operator==(const WeightSum& o) const { return value_ == o.value_ && inf_ == o.inf_; }

    /// The paper's "<= 1": true iff value < 1, or value == 1 with no infinitesimal part.
    bool admissible() const { return value_ < 1 || (value_ == 1 && !inf_); }

    /// Interprets an admissible sum as a marked-point weight.
    Weight as_weight() const;

  private:
    Rat value_;
    bool inf_;
};

WeightSum weight_sum(const std::vector<Weight>& ws);
inline bool admissible(const WeightSum& s) { return s.admissible(); }

/// A finite additively closed set of weights, stored sorted by (value, flag).
class WeightSet {
  public:
    WeightSet() = default;
    /// Smallest additively closed set containing the seeds (fixpoint over
    /// pairwise sums, discarding inadmissible ones).
    static WeightSet closure(std::vector<Weight> seeds);
    /// Wraps an already-closed collection; throws if it is not closed.
    static WeightSet checked(std::vector<Weight> elems);

    const std::vector<Weight>& elements() const { return elems_; }
    bool contains(const Weight& w) const;
    bool contains_one() const { return contains(Weight::one()); }
    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }

    bool operator==(const WeightSet& o) const { return elems_ == o.elems_; }

    /// Comma-separated weight strings in sorted order.
    std::string to_string() const;

  private:
    std::vector<Weight> elems_;
};

}  // namespace wpsi
