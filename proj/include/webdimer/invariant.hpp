#pragma once

#include <memory>
#include <string>
#include <vector>

#include "webdimer/labels.hpp"
#include "webdimer/matrix.hpp"
#include "webdimer/multipoly.hpp"

namespace webdimer {

// Tensor invariant stored as a dense value table over a label space.
// Values are MultiPoly so the same table serves the symbolic case; most
// tables are rational-valued (constant polynomials).
struct Invariant {
    std::shared_ptr<const LabelSpace> space;
    std::vector<MultiPoly> values;

    Invariant() = default;
    explicit Invariant(std::shared_ptr<const LabelSpace> sp)
        : space(std::move(sp)), values(space->size()) {}

    int r() const { return space->r; }
    int n() const { return space->n; }
    const MultiPoly& at(const Label& S) const { return values[space->index(S)]; }
    bool is_zero() const;
    Invariant& operator+=(const Invariant& o);
    friend Invariant operator*(const MultiPoly& c, Invariant x);
    bool operator==(const Invariant& o) const;

    // Rational row for exact linear algebra; throws on symbolic values.
    std::vector<Rational> rational_row() const;
};

std::string serialize_invariant(const Invariant& x);
Invariant parse_invariant(const std::string& text);

// Formal sum of r-fold products of Plucker coordinates; the key is the
// multiset (I_1..I_r) stored sorted.
struct PluckerExpression {
    int r = 0, k = 0, n = 0;
    std::map<std::vector<Subset>, Rational> terms;

    void add(std::vector<Subset> key, const Rational& c);
};

}  // namespace webdimer
