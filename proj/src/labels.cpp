#include "webdimer/labels.hpp"

#include <functional>
#include <stdexcept>

namespace webdimer {

int popcount(std::uint32_t m) { return __builtin_popcount(m); }

Subset mask_to_subset(std::uint32_t m) {
    Subset s;
    for (int c = 1; m; ++c, m >>= 1)
        if (m & 1) s.push_back(c);
    return s;
}

std::uint32_t subset_to_mask(const Subset& s) {
    std::uint32_t m = 0;
    for (int c : s) m |= (1u << (c - 1));
    return m;
}

int sign_of_boundary(const Label& S) {
    std::vector<int> word;
    for (std::uint32_t m : S)
        for (int c : mask_to_subset(m)) word.push_back(c);
    return perm_sign(word);
}

std::vector<Subset> label_to_locations(const Label& S, int r) {
    std::vector<Subset> I(r);
    for (size_t j = 0; j < S.size(); ++j)
        for (int c = 1; c <= r; ++c)
            if (S[j] & (1u << (c - 1))) I[c - 1].push_back(static_cast<int>(j) + 1);
    return I;
}

Label locations_to_label(const std::vector<Subset>& I, int n) {
    Label S(n, 0);
    for (size_t c = 0; c < I.size(); ++c)
        for (int j : I[c]) {
            if (j < 1 || j > n) throw std::invalid_argument("location index out of range");
            S[j - 1] |= (1u << c);
        }
    return S;
}

std::shared_ptr<const LabelSpace> LabelSpace::make(int r, int k, const std::vector<int>& lambda) {
    if (!Degree::valid(lambda, r, k))
        throw std::invalid_argument("invalid degree vector for (r,k)");
    auto sp = std::make_shared<LabelSpace>();
    sp->r = r;
    sp->k = k;
    sp->n = static_cast<int>(lambda.size());
    sp->lambda = lambda;
    std::vector<int> remaining(r, k);  // copies of each color still to place
    Label cur(sp->n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == sp->n) {
            sp->labels.push_back(cur);
            return;
        }
        // enumerate masks of popcount lambda[i] honoring remaining capacity
        std::function<void(int, int, std::uint32_t)> pick = [&](int from, int need,
                                                                std::uint32_t mask) {
            if (need == 0) {
                cur[i] = mask;
                rec(i + 1);
                return;
            }
            for (int c = from; c <= r - need + 1; ++c) {
                if (remaining[c - 1] == 0) continue;
                remaining[c - 1]--;
                pick(c + 1, need - 1, mask | (1u << (c - 1)));
                remaining[c - 1]++;
            }
        };
        pick(1, lambda[i], 0);
    };
    rec(0);
    for (size_t t = 0; t < sp->labels.size(); ++t) sp->index_of[sp->labels[t]] = static_cast<int>(t);
    return sp;
}

int LabelSpace::index(const Label& S) const {
    auto it = index_of.find(S);
    if (it == index_of.end()) throw std::invalid_argument("label outside the label space");
    return it->second;
}

}  // namespace webdimer
