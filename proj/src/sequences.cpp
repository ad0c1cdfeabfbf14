#include "eedp/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace eedp {

namespace {

// Lowest-position strictly monotone sub-sequence of length len, if any.
std::vector<int> greedy_monotone(const std::vector<int>& a, int len, bool inc) {
    const int n = static_cast<int>(a.size());
    auto before = [&](int x, int y) { return inc ? x < y : x > y; };
    std::vector<int> best(n, 1);  // longest run starting at i
    for (int i = n - 1; i >= 0; --i)
        for (int j = i + 1; j < n; ++j)
            if (before(a[i], a[j])) best[i] = std::max(best[i], best[j] + 1);
    std::vector<int> out;
    int last = -1;
    for (int i = 0; i < n && static_cast<int>(out.size()) < len; ++i) {
        if (last >= 0 && !before(a[last], a[i])) continue;
        if (best[i] >= len - static_cast<int>(out.size())) {
            out.push_back(i);
            last = i;
        }
    }
    if (static_cast<int>(out.size()) < len) return {};
    return out;
}

Subsequence make(const std::vector<int>& seq, std::vector<int> idx, bool inc) {
    Subsequence s;
    s.index = std::move(idx);
    for (int i : s.index) s.value.push_back(seq[i]);
    s.increasing = inc;
    return s;
}

}  // namespace

Subsequence es_monotone(const std::vector<int>& seq, int s, int r) {
    if (s < 1 || r < 1) throw std::invalid_argument("lengths must be positive");
    if (std::set<int>(seq.begin(), seq.end()).size() != seq.size())
        throw std::invalid_argument("values must be distinct");
    const long long need = static_cast<long long>(s - 1) * (r - 1) + 1;
    if (static_cast<long long>(seq.size()) < need)
        throw std::invalid_argument("sequence shorter than (s-1)(r-1)+1");
    if (auto inc = greedy_monotone(seq, s, true); !inc.empty()) return make(seq, inc, true);
    if (auto dec = greedy_monotone(seq, r, false); !dec.empty()) return make(seq, dec, false);
    throw std::logic_error("no monotone sub-sequence despite the length bound");
}

bool is_non_repetitive(const std::vector<int>& seq, const std::vector<int>& index) {
    const int l = static_cast<int>(index.size());
    for (int j = 0; j < l; ++j)
        for (int g = 0; g + 1 < l; ++g) {
            if (g == j - 1) continue;
            for (int k = index[g] + 1; k < index[g + 1]; ++k)
                if (seq[k] == seq[index[j]]) return false;
        }
    return true;
}

Subsequence es_nonrepetitive(const std::vector<int>& seq, int c, int s) {
    if (c < 1 || s < 1) throw std::invalid_argument("c and s must be positive");
    std::map<int, int> count;
    for (int x : seq)
        if (++count[x] > c) throw std::invalid_argument("a value occurs more than c times");
    const int n = static_cast<int>(seq.size());
    for (bool inc : {true, false}) {
        std::vector<int> idx;
        std::function<bool(int)> grow = [&](int from) -> bool {
            if (static_cast<int>(idx.size()) == s) return true;
            for (int k = from; k < n; ++k) {
                if (!idx.empty()) {
                    const int last = idx.back();
                    if (inc ? seq[k] <= seq[last] : seq[k] >= seq[last]) continue;
                    // The new gap must avoid the values chosen so far.
                    bool ok = true;
                    for (int m = last + 1; m < k && ok; ++m)
                        for (int j : idx)
                            if (seq[m] == seq[j]) ok = false;
                    // The new value must not sit in an earlier gap.
                    for (int m = idx.front() + 1; m < last && ok; ++m)
                        if (seq[m] == seq[k]) ok = false;
                    if (!ok) continue;
                }
                idx.push_back(k);
                if (grow(k + 1)) return true;
                idx.pop_back();
            }
            return false;
        };
        if (grow(0)) return make(seq, idx, inc);
    }
    const double bound = std::pow(s * std::pow(c, s) - 1.0, 2.0);
    if (n < bound) throw std::invalid_argument("sequence shorter than (s c^s - 1)^2 and no witness exists");
    throw std::logic_error("no non-repetitive monotone sub-sequence despite the length bound");
}

}  // namespace eedp
