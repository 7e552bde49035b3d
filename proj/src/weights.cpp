#include "wpsi/weights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wpsi {

Weight::Weight(Rat value, bool infinitesimal) : value_(std::move(value)), inf_(infinitesimal) {
    if (value_ < 0 || value_ > 1) throw std::invalid_argument("Weight: value outside [0,1]");
    if (value_ == 0 && !inf_) throw std::invalid_argument("Weight: bare 0 is not a weight");
    if (value_ == 1 && inf_) throw std::invalid_argument("Weight: 1^+ is not a marked-point weight");
}

Weight parse_weight(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_weight: empty string");
    std::string body = text;
    bool inf = false;
    if (body.back() == '+') {
        inf = true;
        body.pop_back();
        if (body.empty()) throw std::invalid_argument("parse_weight: malformed '" + text + "'");
    }
    Rat v = parse_rat(body);
    if (v < 0 || v > 1 || (v == 0 && !inf) || (v == 1 && inf))
        throw std::invalid_argument("parse_weight: '" + text + "' is not a weight in [0+,1]");
    return Weight(v, inf);
}

std::string to_string(const Weight& w) {
    std::string s = rat_to_string(w.value());
    if (w.infinitesimal()) s += "+";
    return s;
}

Weight WeightSum::as_weight() const {
    if (!admissible()) throw std::logic_error("WeightSum::as_weight: sum exceeds 1");
    return Weight(value_, inf_);
}

WeightSum weight_sum(const std::vector<Weight>& ws) {
    WeightSum s;
    for (const Weight& w : ws) s += w;
    return s;
}

WeightSet WeightSet::closure(std::vector<Weight> seeds) {
    std::set<Weight> pool(seeds.begin(), seeds.end());
    // Every element lies in the lattice generated by the seeds intersected with
    // [0^+, 1], so the fixpoint terminates.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Weight> cur(pool.begin(), pool.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i; j < cur.size(); ++j) {
                WeightSum s = WeightSum(cur[i]) + cur[j];
                if (!s.admissible()) continue;
                if (pool.insert(s.as_weight()).second) grew = true;
            }
    }
    WeightSet out;
    out.elems_.assign(pool.begin(), pool.end());
    return out;
}

WeightSet WeightSet::checked(std::vector<Weight> elems) {
    WeightSet closed = closure(elems);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (closed.elems_ != elems) throw std::invalid_argument("WeightSet: collection is not additively closed");
    WeightSet out;
    out.elems_ = std::move(elems);
    return out;
}

bool WeightSet::contains(const Weight& w) const {
    return std::binary_search(elems_.begin(), elems_.end(), w);
}

std::string WeightSet::to_string() const {
    std::string s;
    for (const Weight& w : elems_) {
        if (!s.empty()) s += ",";
        s += wpsi::to_string(w);
    }
    return s;
}

}  // namespace wpsi
