#include "webdimer/invariant_ops.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace webdimer {

bool Invariant::is_zero() const {
    for (const auto& v : values)
        if (!v.is_zero()) return false;
    return true;
}

Invariant& Invariant::operator+=(const Invariant& o) {
    if (space->lambda != o.space->lambda || space->r != o.space->r)
        throw std::invalid_argument("invariant shape mismatch");
    for (size_t t = 0; t < values.size(); ++t) values[t] += o.values[t];
    return *this;
}

Invariant operator*(const MultiPoly& c, Invariant x) {
    for (auto& v : x.values) v = c * v;
    return x;
}

bool Invariant::operator==(const Invariant& o) const {
    return space->lambda == o.space->lambda && space->r == o.space->r && values == o.values;
}

std::vector<Rational> Invariant::rational_row() const {
    std::vector<Rational> row;
    row.reserve(values.size());
    for (const auto& v : values) row.push_back(v.constant_value());
    return row;
}

std::string serialize_invariant(const Invariant& x) {
    nlohmann::json j;
    j["r"] = x.space->r;
    j["n"] = x.space->n;
    j["lambda"] = x.space->lambda;
    j["values"] = nlohmann::json::array();
    for (size_t t = 0; t < x.values.size(); ++t) {
        if (x.values[t].is_zero()) continue;
        nlohmann::json entry;
        entry["S"] = nlohmann::json::array();
        for (std::uint32_t m : x.space->labels[t]) entry["S"].push_back(mask_to_subset(m));
        entry["value"] = x.values[t].str();
        j["values"].push_back(entry);
    }
    return j.dump(2);
}

Invariant parse_invariant(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int r = j.at("r").get<int>();
    std::vector<int> lambda = j.at("lambda").get<std::vector<int>>();
    long sum = 0;
    for (int x : lambda) sum += x;
    if (r <= 0 || sum % r != 0) throw std::invalid_argument("invariant JSON: bad (r, lambda)");
    auto space = LabelSpace::make(r, static_cast<int>(sum / r), lambda);
    Invariant x(space);
    for (const auto& entry : j.at("values")) {
        Label S;
        for (const auto& js : entry.at("S")) S.push_back(subset_to_mask(js.get<Subset>()));
        x.values[space->index(S)] = MultiPoly::parse(entry.at("value").get<std::string>());
    }
    return x;
}

void PluckerExpression::add(std::vector<Subset> key, const Rational& c) {
    if (static_cast<int>(key.size()) != r) throw std::invalid_argument("Plucker term arity != r");
    std::sort(key.begin(), key.end());
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Invariant web_measurement(const Network& nw, int r, const std::vector<int>& lambda) {
    int k = nw.g.excedance();
    if (!Degree::valid(lambda, r, k))
        throw std::invalid_argument("web_measurement: invalid lambda for (r, excedance)");
    auto space = LabelSpace::make(r, k, lambda);
    Invariant total(space);
    for (const auto& w : enumerate_weblike(nw.g, r, lambda)) {
        MultiPoly wt = w.weight(nw.weights);
        total += wt * bold_value_table(w, space);
    }
    return total;
}

Report verify_factorization(const Network& nw, int r, const std::vector<int>& lambda) {
    Report rep;
    Invariant web = web_measurement(nw, r, lambda);
    PluckerVector p = plucker_vector(nw);
    const auto& space = *web.space;
    int failures = 0;
    for (size_t t = 0; t < space.size(); ++t) {
        const Label& S = space.labels[t];
        MultiPoly lhs = MultiPoly(Rational(sign_of_boundary(S))) * web.values[t];
        MultiPoly rhs = MultiPoly::constant(1);
        for (const auto& I : label_to_locations(S, r)) rhs *= p.at(I);
        if (lhs != rhs) {
            ++failures;
            if (failures <= 3) {
                std::ostringstream os;
                os << "S index " << t << ": sign*Web = " << lhs.str() << " vs prod Delta = "
                   << rhs.str();
                rep.add("factorization", false, os.str());
            }
        }
    }
    if (failures == 0)
        rep.add("factorization", true,
                std::to_string(space.size()) + " labels checked");
    else if (failures > 3)
        rep.add("factorization", false, std::to_string(failures) + " labels failed");
    return rep;
}

Report verify_welldefined(const Network& nw, const Network& moved, const MultiPoly& alpha,
                          int r, const std::vector<int>& lambda) {
    Report rep;
    Invariant a = web_measurement(nw, r, lambda);
    Invariant b = web_measurement(moved, r, lambda);
    MultiPoly scale = alpha.pow(static_cast<unsigned>(r));
    int failures = 0;
    for (size_t t = 0; t < a.values.size(); ++t) {
        if (a.values[t] != scale * b.values[t]) {
            ++failures;
            if (failures <= 3)
                rep.add("welldefined", false, "label index " + std::to_string(t));
        }
    }
    if (failures == 0)
        rep.add("welldefined", true,
                "Web_r transforms by alpha^" + std::to_string(r) + " on " +
                    std::to_string(a.values.size()) + " labels");
    else if (failures > 3)
        rep.add("welldefined", false, std::to_string(failures) + " labels failed");
    return rep;
}

Rational pair_invariant(const Invariant& x, const PluckerExpression& f) {
    if (f.r != x.space->r || f.n != x.space->n)
        throw std::invalid_argument("pairing shape mismatch");
    Rational total(0);
    for (const auto& [key, c] : f.terms) {
        // content check: the multiset union of the I_i must match lambda
        std::vector<int> content(x.space->n, 0);
        for (const auto& I : key)
            for (int j : I) content[j - 1]++;
        if (content != x.space->lambda)
            throw std::invalid_argument("Plucker term content does not match lambda");
        Label S = locations_to_label(key, x.space->n);
        total += c * Rational(sign_of_boundary(S)) * x.at(S).constant_value();
    }
    return total;
}

std::map<std::vector<int>, Rational> plucker_monomials(const PluckerExpression& f) {
    int k = f.k, n = f.n;
    std::map<std::vector<int>, Rational> out;
    for (const auto& [key, c] : f.terms) {
        // expand prod_i det(columns I_i) over bijections rows -> columns
        std::map<std::vector<int>, Rational> acc;
        acc[std::vector<int>(static_cast<size_t>(k) * n, 0)] = c;
        for (const auto& I : key) {
            std::map<std::vector<int>, Rational> next;
            std::vector<int> cols = I;
            std::vector<int> perm(cols.size());
            for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
            // iterate over permutations of rows
            std::sort(perm.begin(), perm.end());
            do {
                std::vector<int> rows = perm;
                int sgn = perm_sign(rows);
                for (const auto& [mono, cc] : acc) {
                    std::vector<int> m = mono;
                    for (size_t i = 0; i < cols.size(); ++i)
                        m[static_cast<size_t>(rows[i]) * n + (cols[i] - 1)]++;
                    auto it = next.find(m);
                    if (it == next.end())
                        next.emplace(std::move(m), cc * sgn);
                    else {
                        it->second += cc * sgn;
                        if (it->second == 0) next.erase(it);
                    }
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            acc = std::move(next);
        }
        for (const auto& [mono, cc] : acc) {
            auto it = out.find(mono);
            if (it == out.end()) {
                if (cc != 0) out.emplace(mono, cc);
            } else {
                it->second += cc;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

PluckerExpression immanant(const std::vector<Rational>& phi,
                           std::shared_ptr<const LabelSpace> space) {
    if (phi.size() != space->size())
        throw std::invalid_argument("immanant: functional size != label space size");
    int r = space->r, k = space->k, n = space->n;
    // target: sum_S phi_S sign(S) Delta_{I_1}..Delta_{I_r}
    PluckerExpression target;
    target.r = r;
    target.k = k;
    target.n = n;
    for (size_t t = 0; t < space->size(); ++t) {
        if (phi[t] == 0) continue;
        const Label& S = space->labels[t];
        target.add(label_to_locations(S, r), phi[t] * sign_of_boundary(S));
    }
    // spanning monomial set: the distinct sorted location-lists of the space
    std::vector<std::vector<Subset>> span;
    {
        std::set<std::vector<Subset>> seen;
        for (const auto& S : space->labels) {
            auto I = label_to_locations(S, r);
            std::sort(I.begin(), I.end());
            if (seen.insert(I).second) span.push_back(I);
        }
    }
    auto target_mono = plucker_monomials(target);
    // monomial expansion of each spanning product
    std::vector<std::map<std::vector<int>, Rational>> cols;
    std::set<std::vector<int>> mono_keys;
    for (const auto& I : span) {
        PluckerExpression one;
        one.r = r;
        one.k = k;
        one.n = n;
        one.add(I, Rational(1));
        cols.push_back(plucker_monomials(one));
        for (const auto& [m, c] : cols.back()) mono_keys.insert(m);
    }
    for (const auto& [m, c] : target_mono) mono_keys.insert(m);
    std::vector<std::vector<int>> rows(mono_keys.begin(), mono_keys.end());
    ExactMatrix A(static_cast<int>(rows.size()), static_cast<int>(span.size()));
    std::vector<Rational> b(rows.size(), Rational(0));
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < span.size(); ++j) {
            auto it = cols[j].find(rows[i]);
            if (it != cols[j].end()) A.at(static_cast<int>(i), static_cast<int>(j)) = it->second;
        }
        auto it = target_mono.find(rows[i]);
        if (it != target_mono.end()) b[i] = it->second;
    }
    auto x = matrix_solve(A, b);
    if (!x) throw std::logic_error("immanant: inconsistent solve (implementation fault)");
    PluckerExpression out;
    out.r = r;
    out.k = k;
    out.n = n;
    for (size_t j = 0; j < span.size(); ++j)
        if ((*x)[j] != 0) out.add(span[j], (*x)[j]);
    return out;
}

long long dim_invariant_space(int r, const std::vector<int>& lambda) {
    long sum = 0;
    for (int x : lambda) {
        if (x < 0 || x > r) throw std::invalid_argument("dim_invariant_space: bad lambda entry");
        sum += x;
    }
    if (sum % r != 0) throw std::invalid_argument("dim_invariant_space: sum(lambda) not divisible by r");
    int k = static_cast<int>(sum / r);
    int n = static_cast<int>(lambda.size());
    // fill an r x k array, rows strictly increasing, columns weakly increasing,
    // entry i used lambda_i times
    std::vector<std::vector<int>> t(r, std::vector<int>(k, 0));
    std::vector<int> left = lambda;
    long long count = 0;
    std::function<void(int)> rec = [&](int cell) {
        if (cell == r * k) {
            ++count;
            return;
        }
        int i = cell / k, j = cell % k;
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1] + 1);  // strict along the row
        if (i > 0) lo = std::max(lo, t[i - 1][j]);      // weak down the column
        for (int v = lo; v <= n; ++v) {
            if (left[v - 1] == 0) continue;
            left[v - 1]--;
            t[i][j] = v;
            rec(cell + 1);
            left[v - 1]++;
        }
    };
    rec(0);
    return count;
}

Rational evaluate_on_matrix(const Invariant& x, const std::vector<std::vector<Rational>>& M) {
    const auto& sp = *x.space;
    for (int lam : sp.lambda)
        if (lam != 1)
            throw std::invalid_argument("evaluate_on_matrix: invariant is not multilinear");
    if (static_cast<int>(M.size()) != sp.r)
        throw std::invalid_argument("evaluate_on_matrix: matrix must have r rows");
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != sp.n)
            throw std::invalid_argument("evaluate_on_matrix: matrix must have n columns");
    Rational total(0);
    for (size_t t = 0; t < sp.size(); ++t) {
        if (x.values[t].is_zero()) continue;
        Rational term = x.values[t].constant_value();
        for (int i = 0; i < sp.n; ++i) {
            int color = mask_to_subset(sp.labels[t][i])[0];
            term *= M[color - 1][i];
        }
        total += term;
    }
    return total;
}

Invariant partial_evaluate(const Invariant& x, const Subset& I) {
    const auto& sp = *x.space;
    if (static_cast<int>(I.size()) != sp.k)
        throw std::invalid_argument("partial_evaluate: |I| != k");
    if (sp.r < 2) throw std::invalid_argument("partial_evaluate: r must be at least 2");
    std::vector<int> mu = sp.lambda;
    for (int i : I) {
        if (mu[i - 1] == 0)
            throw std::invalid_argument("partial_evaluate: lambda is 0 at position " +
                                        std::to_string(i));
        mu[i - 1]--;
    }
    auto out_space = LabelSpace::make(sp.r - 1, sp.k, mu);
    Invariant out(out_space);
    std::uint32_t top = 1u << (sp.r - 1);
    for (size_t t = 0; t < out_space->size(); ++t) {
        Label S = out_space->labels[t];
        for (int i : I) S[i - 1] |= top;
        out.values[t] = x.at(S);
    }
    return out;
}

Invariant permute(const Invariant& x, const std::vector<int>& sigma) {
    const auto& sp = *x.space;
    if (static_cast<int>(sigma.size()) != sp.n)
        throw std::invalid_argument("permute: sigma size != n");
    for (int i = 0; i < sp.n; ++i)
        if (sp.lambda[sigma[i] - 1] != sp.lambda[i])
            throw std::invalid_argument("permute: lambda not constant along sigma");
    Invariant out(x.space);
    for (size_t t = 0; t < sp.size(); ++t) {
        const Label& S = sp.labels[t];
        Label pre(sp.n);
        for (int j = 0; j < sp.n; ++j) pre[j] = S[sigma[j] - 1];
        // value of the permuted invariant at `pre` is x at S... equivalently:
        out.values[t] = x.values[sp.index(pre)];
    }
    return out;
}

PluckerExpression permute(const PluckerExpression& f, const std::vector<int>& sigma) {
    PluckerExpression out;
    out.r = f.r;
    out.k = f.k;
    out.n = f.n;
    for (const auto& [key, c] : f.terms) {
        std::vector<Subset> img;
        int sgn = 1;
        for (const auto& I : key) {
            // sigma(Delta_I) = det of the permuted columns: reordering the
            // images into a sorted subset costs the sign of the image word
            Subset J;
            for (int j : I) J.push_back(sigma[j - 1]);
            sgn *= perm_sign(J);
            std::sort(J.begin(), J.end());
            img.push_back(std::move(J));
        }
        out.add(img, c * sgn);
    }
    return out;
}

PositroidSubspace positroid_subspace(const PlanarBipartiteGraph& g, int r,
                                     const std::vector<int>& lambda) {
    PositroidSubspace out;
    out.subgraphs = enumerate_weblike(g, r, lambda);
    auto space = LabelSpace::make(r, g.excedance(), lambda);
    RowSpace rs(static_cast<int>(space->size()));
    for (size_t w = 0; w < out.subgraphs.size(); ++w) {
        auto counts = labeling_counts(out.subgraphs[w], *space);
        bool zero = true;
        std::vector<Rational> row(space->size());
        for (size_t t = 0; t < counts.size(); ++t) {
            if (counts[t]) zero = false;
            row[t] = from_ll(sign_of_boundary(space->labels[t]) * counts[t]);
        }
        if (zero) {
            out.zero_invariants++;
            continue;
        }
        if (rs.add(std::move(row))) out.basis.push_back(static_cast<int>(w));
    }
    out.dimension = rs.rank();
    return out;
}

PartialEvalSplit partial_eval_split(const PlanarBipartiteGraph& g, int r,
                                    const std::vector<int>& lambda, const Subset& I) {
    auto space = LabelSpace::make(r, g.excedance(), lambda);
    std::vector<int> mu = lambda;
    for (int i : I) {
        if (mu[i - 1] == 0) throw std::invalid_argument("partial_eval_split: lambda 0 on I");
        mu[i - 1]--;
    }
    auto sub_space = LabelSpace::make(r - 1, g.excedance(), mu);
    std::uint32_t top = 1u << (r - 1);

    RowSpace full(static_cast<int>(space->size()));
    RowSpace part(static_cast<int>(sub_space->size()));
    for (const auto& w : enumerate_weblike(g, r, lambda)) {
        auto counts = labeling_counts(w, *space);
        std::vector<Rational> row(space->size());
        bool zero = true;
        for (size_t t = 0; t < counts.size(); ++t) {
            if (counts[t]) zero = false;
            row[t] = from_ll(sign_of_boundary(space->labels[t]) * counts[t]);
        }
        if (zero) continue;
        // partial-evaluation row: entries at S' with color r inserted on I
        std::vector<Rational> prow(sub_space->size());
        for (size_t t = 0; t < sub_space->size(); ++t) {
            Label S = sub_space->labels[t];
            for (int i : I) S[i - 1] |= top;
            prow[t] = row[space->index(S)];
        }
        full.add(std::move(row));
        part.add(std::move(prow));
    }
    PartialEvalSplit split;
    split.total = full.rank();
    split.surviving = part.rank();
    split.killed = split.total - split.surviving;
    return split;
}

}  // namespace webdimer
