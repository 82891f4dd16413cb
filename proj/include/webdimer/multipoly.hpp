#pragma once

#include <map>
#include <string>
#include <vector>

#include "webdimer/rational.hpp"

namespace webdimer {

// Exponent vector: variable name -> positive exponent. Map ordering gives
// the canonical (lexicographic) monomial order used for serialization.
using Monomial = std::map<std::string, int>;

// Sparse multivariate polynomial with rational coefficients.
// Invariant: no zero coefficients stored; the zero polynomial has no terms.
struct MultiPoly {
    std::map<Monomial, Rational> terms;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (c != 0) terms[{}] = c;
    }
    static MultiPoly var(const std::string& name) {
        MultiPoly p;
        p.terms[{{name, 1}}] = 1;
        return p;
    }
    static MultiPoly constant(long c) { return MultiPoly(Rational(c)); }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
    }
    // Value of a constant polynomial (0 for the empty one).
    Rational constant_value() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const { return terms == o.terms; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned e) const;
    std::vector<std::string> variables() const;

    // Exact substitution; every variable must be assigned.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    std::string str() const;
    static MultiPoly parse(const std::string& text);
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return MultiPoly(c) * p; }

}  // namespace webdimer
