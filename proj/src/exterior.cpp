#include "webdimer/exterior.hpp"

#include <functional>
#include <stdexcept>

namespace webdimer {

ExteriorElement ExteriorElement::basis(std::uint32_t mask) {
    ExteriorElement x;
    x.grade = popcount(mask);
    x.coeff[mask] = 1;
    return x;
}

void ExteriorElement::add(std::uint32_t mask, const Rational& c) {
    if (c == 0) return;
    auto it = coeff.find(mask);
    if (it == coeff.end()) {
        coeff.emplace(mask, c);
    } else {
        it->second += c;
        if (it->second == 0) coeff.erase(it);
    }
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
    int inv = 0;
    for (std::uint32_t m = b; m; m &= m - 1) {
        int bit = __builtin_ctz(m);
        inv += popcount(a >> (bit + 1));
    }
    return (inv % 2 == 0) ? 1 : -1;
}

ExteriorElement wedge(const std::vector<ExteriorElement>& xs, int r) {
    int total = 0;
    for (const auto& x : xs) total += x.grade;
    if (total > r) throw std::domain_error("wedge: total grade exceeds r");
    ExteriorElement acc;
    acc.grade = 0;
    acc.coeff[0u] = 1;
    for (const auto& x : xs) {
        ExteriorElement next;
        next.grade = acc.grade + x.grade;
        for (const auto& [ma, ca] : acc.coeff)
            for (const auto& [mb, cb] : x.coeff) {
                if (ma & mb) continue;
                next.add(ma | mb, ca * cb * merge_sign(ma, mb));
            }
        acc = std::move(next);
    }
    return acc;
}

ExteriorElement wedge_word(const std::vector<int>& colors, int r) {
    std::vector<ExteriorElement> xs;
    for (int c : colors) xs.push_back(ExteriorElement::basis(1u << (c - 1)));
    return wedge(xs, r);
}

void TensorSum::add(const std::vector<std::uint32_t>& key, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

TensorSum shuffle(const ExteriorElement& x, const std::vector<int>& grades) {
    int total = 0;
    for (int g : grades) {
        if (g < 0) throw std::domain_error("shuffle: negative block grade");
        total += g;
    }
    if (total != x.grade) throw std::domain_error("shuffle: block sizes do not sum to the grade");
    long cross = 0;
    for (size_t i = 0; i < grades.size(); ++i)
        for (size_t j = i + 1; j < grades.size(); ++j) cross += static_cast<long>(grades[i]) * grades[j];
    int global = (cross % 2 == 0) ? 1 : -1;

    TensorSum out;
    out.grades = grades;
    std::vector<std::uint32_t> slots(grades.size(), 0);
    for (const auto& [mask, c] : x.coeff) {
        // distribute mask into ordered slots of the prescribed sizes
        std::function<void(int, std::uint32_t, int)> rec = [&](int slot, std::uint32_t rest,
                                                               int sign) {
            if (slot == static_cast<int>(grades.size())) {
                out.add(slots, c * sign * global);
                return;
            }
            // enumerate subsets of `rest` of the slot's size
            std::vector<int> bits;
            for (std::uint32_t m = rest; m; m &= m - 1) bits.push_back(__builtin_ctz(m));
            int need = grades[slot];
            std::vector<int> pick;
            std::function<void(int)> choose = [&](int from) {
                if (static_cast<int>(pick.size()) == need) {
                    std::uint32_t sub = 0;
                    for (int b : pick) sub |= (1u << b);
                    slots[slot] = sub;
                    // sign of pulling `sub` in front of the remaining letters
                    rec(slot + 1, rest & ~sub, sign * merge_sign(sub, rest & ~sub));
                    return;
                }
                for (int i = from; i <= static_cast<int>(bits.size()) - (need - static_cast<int>(pick.size())); ++i) {
                    pick.push_back(bits[i]);
                    choose(i + 1);
                    pick.pop_back();
                }
            };
            choose(0);
        };
        rec(0, mask, 1);
    }
    return out;
}

Rational pair_tag_eval(const ExteriorElement& x, const ExteriorElement& y, int r) {
    if (x.grade + y.grade != r)
        throw std::domain_error("pair tag: grades are not complementary");
    std::uint32_t full = (r == 32) ? ~0u : ((1u << r) - 1);
    Rational total(0);
    for (const auto& [ma, ca] : x.coeff)
        for (const auto& [mb, cb] : y.coeff) {
            if (ma & mb) continue;
            if ((ma | mb) != full) continue;
            total += ca * cb * merge_sign(ma, mb);
        }
    return total;
}

Rational pair_tag_eval(const ExteriorElement& x, const ExteriorElement& y, int r, bool left) {
    return left ? pair_tag_eval(x, y, r) : pair_tag_eval(y, x, r);
}

TensorSum source_tag_expand(int a, int r, bool left) {
    return left ? source_tag_expand(a, r - a, r) : source_tag_expand(r - a, a, r);
}

TensorSum source_tag_expand(int g1, int g2, int r) {
    if (g1 + g2 != r || g1 < 0 || g2 < 0)
        throw std::domain_error("source tag: grades must be nonnegative and sum to r");
    std::uint32_t full = (r == 32) ? ~0u : ((1u << r) - 1);
    return shuffle(ExteriorElement::basis(full), {g1, g2});
}

}  // namespace webdimer
