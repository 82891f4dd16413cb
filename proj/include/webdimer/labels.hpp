#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "webdimer/dimer.hpp"
#include "webdimer/matrix.hpp"

namespace webdimer {

// A boundary label list S = (S_1..S_n), S_i a subset of [r] stored as a
// bitmask (color c <-> bit c-1). |S_i| = lambda_i and every color appears
// exactly k times across the list.
using Label = std::vector<std::uint32_t>;

int popcount(std::uint32_t m);
Subset mask_to_subset(std::uint32_t m);
std::uint32_t subset_to_mask(const Subset& s);

// Parity of color inversions in the left-to-right word of S (subscripts
// ascend within a color, so equal colors never invert).
int sign_of_boundary(const Label& S);

// S -> (I_1..I_r), I_i = { j : i in S_j }.
std::vector<Subset> label_to_locations(const Label& S, int r);
Label locations_to_label(const std::vector<Subset>& I, int n);

// All valid boundary label lists for (r, k, lambda), canonically ordered.
struct LabelSpace {
    int r = 0, k = 0, n = 0;
    std::vector<int> lambda;
    std::vector<Label> labels;
    std::map<Label, int> index_of;

    static std::shared_ptr<const LabelSpace> make(int r, int k, const std::vector<int>& lambda);
    int index(const Label& S) const;
    size_t size() const { return labels.size(); }
};

}  // namespace webdimer
