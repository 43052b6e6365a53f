#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "recipchow/errors.hpp"

namespace recipchow {

// Subsets of [n] = {1,...,n} are bitmasks: element i <-> bit i-1.

inline int popcount(std::uint32_t m) { return __builtin_popcount(m); }

std::vector<int> mask_to_elems(std::uint32_t mask);
std::uint32_t elems_to_mask(const std::vector<int>& elems, int n);

/// Compact element string, e.g. {1,2,4} -> "124" (underscores past 9).
std::string subset_label(std::uint32_t mask);

/// All d-subsets of [n] in lexicographic order of their element lists,
/// with O(1) rank lookup. Instances are cached per (n, d).
class SubsetTable {
public:
    static const SubsetTable& get(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t size() const { return masks_.size(); }
    std::uint32_t mask(std::size_t rank) const { return masks_[rank]; }
    std::size_t rank(std::uint32_t mask) const;
    bool contains(std::uint32_t mask) const { return rank_.count(mask) > 0; }

    const std::vector<std::uint32_t>& masks() const { return masks_; }

private:
    SubsetTable(int n, int d);
    int n_, d_;
    std::vector<std::uint32_t> masks_;
    std::unordered_map<std::uint32_t, std::size_t> rank_;
};

/// Parity of s(I) = d(d+1)/2 + sum of the elements of I, the sign exponent
/// of the pairing between complementary exterior powers. Returns 0 or 1.
int sign_exponent_parity(std::uint32_t mask);

/// Full s(I) value (useful in tests and diagnostics).
long sign_exponent(const std::vector<int>& elems, int d);

/// Sign of e_K ^ e_j as a multiple of e_{K u {j}}: (-1)^(#{k in K : k > j}).
int wedge_append_sign(std::uint32_t kmask, int j);

} // namespace recipchow
