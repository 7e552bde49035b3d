#include "wpsi/hfunction.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wpsi {

Rat odd_double_factorial(long m) {
    if (m >= 1) {
        Rat p(1);
        for (long i = 1; i <= m; ++i) p *= 2 * i - 1;
        return p;
    }
    // (2m-1)!! = (2m+1)!!/(2m+1), iterated down from (−1)!! = 1.
    Rat p(1);
    for (long i = 0; i > m; --i) p /= 2 * i - 1;
    return p;
}

Rat h_scalar(long k, long e) {
    if (k < -1) throw std::invalid_argument("h_scalar: k < -1");
    return odd_double_factorial(k + e + 1) / odd_double_factorial(e);
}

namespace {
std::map<std::pair<long, std::vector<long>>, Rat> h_memo;
std::mutex h_memo_mu;
}  // namespace

Rat h_multi(long k, const std::vector<long>& e) {
    if (e.empty()) throw std::invalid_argument("h_multi: empty index list");
    if (e.size() == 1) return h_scalar(k, e[0]);
    std::vector<long> key_e(e);
    std::sort(key_e.begin(), key_e.end());
    const auto key = std::make_pair(k, key_e);
    {
        std::lock_guard<std::mutex> lock(h_memo_mu);
        auto it = h_memo.find(key);
        if (it != h_memo.end()) return it->second;
    }
    const std::size_t n = key_e.size();
    Rat sum(0);
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        long tot = 0;
        int cnt = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) {
                tot += key_e[i];
                ++cnt;
            }
        Rat term = h_scalar(k, tot - cnt + 1);
        if (cnt % 2 == 0) sum -= term;
        else sum += term;
    }
    std::lock_guard<std::mutex> lock(h_memo_mu);
    h_memo.emplace(key, sum);
    return sum;
}

Rat h_multi_via_classes(long k, const std::vector<long>& e, const std::vector<Weight>& a) {
    if (e.size() != a.size() || e.empty())
        throw std::invalid_argument("h_multi_via_classes: index/weight length mismatch");
    std::vector<WeightedInsertion> ins;
    ins.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ins.push_back({e[i], a[i]});
    Rat sum(0);
    for (const SublistClass& c : power_classes(ins, /*include_full=*/true)) {
        long tot = 0;
        for (const auto& x : c.representative) tot += x.k;
        const long cnt = static_cast<long>(c.representative.size());
        Rat term = Rat(c.multiplicity) * h_scalar(k, tot - cnt + 1);
        if (cnt % 2 == 0) sum -= term;
        else sum += term;
    }
    return sum;
}

}  // namespace wpsi
