#include "recipchow/subsets.hpp"

#include <map>
#include <mutex>

namespace recipchow {

std::vector<int> mask_to_elems(std::uint32_t mask) {
    std::vector<int> e;
    for (int i = 0; mask >> i; ++i)
        if (mask & (1u << i)) e.push_back(i + 1);
    return e;
}

std::uint32_t elems_to_mask(const std::vector<int>& elems, int n) {
    std::uint32_t m = 0;
    for (int e : elems) {
        if (e < 1 || e > n) throw input_error("subset element out of range");
        std::uint32_t bit = 1u << (e - 1);
        if (m & bit) throw input_error("repeated subset element");
        m |= bit;
    }
    return m;
}

std::string subset_label(std::uint32_t mask) {
    std::vector<int> e = mask_to_elems(mask);
    bool small = e.empty() || e.back() <= 9;
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!small && i) s += '_';
        s += std::to_string(e[i]);
    }
    return s;
}

SubsetTable::SubsetTable(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 0 || d > n || n > 31) throw input_error("subset table parameters out of range");
    std::vector<int> cur(d);
    // Lexicographic generation over element lists.
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == d) {
            std::uint32_t m = 0;
            for (int e : cur) m |= 1u << (e - 1);
            rank_.emplace(m, masks_.size());
            masks_.push_back(m);
            return;
        }
        for (int e = next; e <= n - (d - pos - 1); ++e) {
            cur[pos] = e;
            self(self, pos + 1, e + 1);
        }
    };
    rec(rec, 0, 1);
}

const SubsetTable& SubsetTable::get(int n, int d) {
    static std::map<std::pair<int, int>, SubsetTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, d);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, SubsetTable(n, d)).first;
    return it->second;
}

std::size_t SubsetTable::rank(std::uint32_t mask) const {
    auto it = rank_.find(mask);
    if (it == rank_.end()) throw input_error("subset not in table");
    return it->second;
}

int sign_exponent_parity(std::uint32_t mask) {
    long d = popcount(mask);
    long s = d * (d + 1) / 2;
    for (int i = 0; mask >> i; ++i)
        if (mask & (1u << i)) s += i + 1;
    return static_cast<int>(s & 1);
}

long sign_exponent(const std::vector<int>& elems, int d) {
    if (static_cast<int>(elems.size()) != d) throw input_error("subset size does not match d");
    long s = static_cast<long>(d) * (d + 1) / 2;
    for (int e : elems) s += e;
    return s;
}

int wedge_append_sign(std::uint32_t kmask, int j) {
    std::uint32_t above = kmask & ~((2u << (j - 1)) - 1u);
    return (popcount(above) % 2 == 0) ? 1 : -1;
}

} // namespace recipchow
