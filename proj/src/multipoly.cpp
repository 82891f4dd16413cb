#include "webdimer/multipoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace webdimer {

Rational MultiPoly::constant_value() const {
    if (terms.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant: " + str());
    return terms.begin()->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            auto it = out.terms.find(m);
            if (it == out.terms.end()) {
                out.terms.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms) out.terms.emplace(m, -c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out = constant(1), b = *this;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

std::vector<std::string> MultiPoly::variables() const {
    std::map<std::string, int> seen;
    for (const auto& [m, c] : terms)
        for (const auto& [v, e] : m) seen[v] = 1;
    std::vector<std::string> out;
    for (const auto& [v, _] : seen) out.push_back(v);
    return out;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("unassigned variable: " + v);
            t *= rat_pow(it->second, static_cast<unsigned>(e));
        }
        total += t;
    }
    return total;
}

std::string MultiPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool coeff_shown = (a != 1) || m.empty();
        if (coeff_shown) out << to_string(a);
        bool lead = !coeff_shown;
        for (const auto& [v, e] : m) {
            if (!lead) out << "*";
            lead = false;
            out << v;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(i) + ": " + why + " in '" + s + "'");
    }

    std::string number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        if (i < s.size() && s[i] == '/') {
            ++i;
            size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == dstart) fail("expected denominator digits");
        }
        return s.substr(start, i - start);
    }

    std::string identifier() {
        skip_ws();
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) {
            ++i;
        }
        if (i == start) fail("expected variable name");
        return s.substr(start, i - start);
    }

    // factor := number | identifier ['^' int]
    void factor(Rational& coeff, Monomial& mono) {
        skip_ws();
        if (i >= s.size()) fail("expected factor");
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= parse_rational(number());
            return;
        }
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected factor");
        std::string v = identifier();
        int e = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip_ws();
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) fail("expected exponent");
            e = std::stoi(s.substr(start, i - start));
        }
        if (e > 0) mono[v] += e;
    }

    MultiPoly parse() {
        MultiPoly out;
        bool expecting_term = true;
        int sign = 1;
        skip_ws();
        if (i >= s.size()) fail("empty polynomial");
        while (!eof()) {
            char c = peek();
            if (c == '+' || c == '-') {
                if (expecting_term && c == '-') {
                    sign = -sign;
                    ++i;
                    continue;
                }
                if (expecting_term) fail("dangling '+'");
                sign = (c == '-') ? -1 : 1;
                ++i;
                expecting_term = true;
                continue;
            }
            if (!expecting_term) fail("missing '+' or '-' between terms");
            Rational coeff(sign);
            Monomial mono;
            factor(coeff, mono);
            while (!eof() && peek() == '*') {
                ++i;
                factor(coeff, mono);
            }
            MultiPoly term;
            if (coeff != 0) term.terms[mono] = coeff;
            out += term;
            expecting_term = false;
            sign = 1;
        }
        if (expecting_term) fail("trailing sign");
        return out;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace webdimer
