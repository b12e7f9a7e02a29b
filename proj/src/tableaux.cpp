#include "weylext/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylext {

int DividedWord::degree() const {
    int d = 0;
    for (auto& [l, e] : factors)
        d += e;
    return d;
}

int DividedWord::exponent_of(int letter) const {
    for (auto& [l, e] : factors)
        if (l == letter)
            return e;
    return 0;
}

DividedWord DividedWord::with_exponent(int letter, int delta) const {
    DividedWord out = *this;
    auto it = std::lower_bound(out.factors.begin(), out.factors.end(),
                               std::pair<int, int>{letter, 0});
    if (it != out.factors.end() && it->first == letter) {
        it->second += delta;
        if (it->second == 0)
            out.factors.erase(it);
        else if (it->second < 0)
            throw std::invalid_argument("with_exponent: negative exponent");
    } else {
        if (delta < 0)
            throw std::invalid_argument("with_exponent: letter absent");
        if (delta > 0)
            out.factors.insert(it, {letter, delta});
    }
    return out;
}

bool ExteriorWord::contains(int letter) const {
    return std::binary_search(letters.begin(), letters.end(), letter);
}

CoefficientModule CoefficientModule::skew(int m, int l) {
    if (m < 0 || l < 0)
        throw std::invalid_argument("CoefficientModule::skew: negative degree");
    CoefficientModule M;
    M.kind = Kind::skew;
    M.dpow = m;
    M.ext = l;
    return M;
}

CoefficientModule CoefficientModule::weyl(Hook h) {
    if (h.arm < 1 || h.leg < 0)
        throw std::invalid_argument("CoefficientModule::weyl: bad hook");
    CoefficientModule M;
    M.kind = Kind::weyl;
    M.hook = h;
    return M;
}

int CoefficientModule::degree() const {
    return kind == Kind::skew ? dpow + ext : hook.degree();
}

std::string CoefficientModule::describe() const {
    if (kind == Kind::skew)
        return "skew_d" + std::to_string(dpow) + "_l" + std::to_string(ext);
    return "weyl_a" + std::to_string(hook.arm) + "_b" + std::to_string(hook.leg);
}

void FreeVector::add(const Tableau& t, const Int& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

void FreeVector::add_scaled(const FreeVector& v, const Int& c) {
    if (c == 0)
        return;
    for (auto& [t, x] : v.terms)
        add(t, x * c);
}

Composition content_of(const Tableau& t) {
    int maxl = 0;
    for (auto& [l, e] : t.d.factors)
        maxl = std::max(maxl, l);
    for (int l : t.e.letters)
        maxl = std::max(maxl, l);
    std::vector<int> mult(maxl, 0);
    for (auto& [l, e] : t.d.factors)
        mult[l - 1] += e;
    for (int l : t.e.letters)
        mult[l - 1] += 1;
    return Composition(std::move(mult)); // throws if an inner letter is missing
}

std::vector<int> flatten(const Tableau& t) {
    std::vector<int> seq;
    for (auto& [l, e] : t.d.factors)
        seq.insert(seq.end(), e, l);
    seq.insert(seq.end(), t.e.letters.begin(), t.e.letters.end());
    return seq;
}

bool basis_less(const Tableau& x, const Tableau& y) {
    std::vector<int> fx = flatten(x), fy = flatten(y);
    return std::lexicographical_compare(fx.begin(), fx.end(), fy.begin(), fy.end());
}

namespace {

// Visit every size-k subset of `pool`.
template <typename F>
void for_each_subset(const std::vector<int>& pool, int k, F&& visit) {
    int n = static_cast<int>(pool.size());
    if (k < 0 || k > n)
        return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        std::vector<int> subset(k);
        for (int i = 0; i < k; ++i)
            subset[i] = pool[idx[i]];
        visit(subset);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

Tableau split_tableau(const Composition& mu, const std::vector<int>& ext) {
    Tableau t;
    t.e.letters = ext;
    for (int j = 1; j <= mu.length(); ++j) {
        int m = mu.parts[j - 1];
        if (std::binary_search(ext.begin(), ext.end(), j))
            --m;
        if (m > 0)
            t.d.factors.emplace_back(j, m);
    }
    return t;
}

} // namespace

std::vector<Tableau> skew_weight_basis(const Composition& mu, int m, int l) {
    if (mu.sum != m + l)
        throw std::invalid_argument("skew_weight_basis: weight degree mismatch");
    std::vector<int> pool(mu.length());
    for (int j = 0; j < mu.length(); ++j)
        pool[j] = j + 1;
    std::vector<Tableau> out;
    for_each_subset(pool, l, [&](const std::vector<int>& s) {
        out.push_back(split_tableau(mu, s));
    });
    std::sort(out.begin(), out.end(), basis_less);
    return out;
}

std::vector<Tableau> weyl_weight_basis(const Composition& mu, const Hook& h) {
    if (mu.sum != h.degree())
        throw std::invalid_argument("weyl_weight_basis: weight degree mismatch");
    // Standard tableaux keep every 1 in the top row, so the column is any
    // leg-subset of the remaining letters.
    std::vector<int> pool;
    for (int j = 2; j <= mu.length(); ++j)
        pool.push_back(j);
    std::vector<Tableau> out;
    for_each_subset(pool, h.leg, [&](const std::vector<int>& s) {
        out.push_back(split_tableau(mu, s));
    });
    std::sort(out.begin(), out.end(), basis_less);
    return out;
}

std::vector<Tableau> weight_basis(const Composition& mu, const CoefficientModule& M) {
    if (M.kind == CoefficientModule::Kind::skew)
        return skew_weight_basis(mu, M.dpow, M.ext);
    return weyl_weight_basis(mu, M.hook);
}

std::optional<std::pair<int, ExteriorWord>> normalize_exterior(std::vector<int> letters) {
    int sign = 1;
    for (size_t i = 1; i < letters.size(); ++i) { // insertion sort, count swaps
        int v = letters[i];
        size_t j = i;
        while (j > 0 && letters[j - 1] > v) {
            letters[j] = letters[j - 1];
            --j;
            sign = -sign;
        }
        letters[j] = v;
    }
    for (size_t i = 1; i < letters.size(); ++i)
        if (letters[i] == letters[i - 1])
            return std::nullopt;
    return std::make_pair(sign, ExteriorWord{std::move(letters)});
}

namespace {

bool is_standard(const DividedWord& top, const ExteriorWord& col) {
    if (col.letters.empty())
        return true;
    if (top.factors.empty())
        return false;
    return top.factors.front().first < col.letters.front();
}

struct StraightenWorker {
    FreeVector out;
    long long fuel;

    void rec(const DividedWord& top, const ExteriorWord& col, const Int& coeff) {
        if (--fuel < 0)
            throw std::runtime_error("straighten: rewriting did not terminate");
        if (is_standard(top, col)) {
            out.add(Tableau{top, col}, coeff);
            return;
        }
        if (top.factors.empty())
            throw std::runtime_error("straighten: empty top row");
        const int i1 = top.factors.front().first;
        const int j1 = col.letters.front();
        const std::vector<int> rest(col.letters.begin() + 1, col.letters.end());
        // One rewriting step: the offending first column letter trades places
        // with a divided letter, the sign flips, and the new column is
        // sign-normalized before recursing.
        const size_t s0 = (j1 == i1) ? 1 : 0;
        const int joining = (j1 == i1) ? i1 : j1;
        for (size_t s = s0; s < top.factors.size(); ++s) {
            const int is = top.factors[s].first;
            DividedWord nt = top.with_exponent(joining, +1).with_exponent(is, -1);
            std::vector<int> nl;
            nl.reserve(rest.size() + 1);
            nl.push_back(is);
            nl.insert(nl.end(), rest.begin(), rest.end());
            auto norm = normalize_exterior(std::move(nl));
            if (!norm)
                continue;
            rec(nt, norm->second, -coeff * norm->first);
        }
    }
};

} // namespace

FreeVector straighten(const DividedWord& top, std::vector<int> col) {
    auto norm = normalize_exterior(std::move(col));
    if (!norm)
        return {};
    long long size = top.degree() + norm->second.length();
    StraightenWorker w;
    w.fuel = 1;
    for (long long i = 0; i < size; ++i)
        w.fuel *= 4;
    w.rec(top, norm->second, norm->first);
    return w.out;
}

FreeVector theta(int s, const Tableau& t, const CoefficientModule& M) {
    if (s < 1)
        throw std::invalid_argument("theta: s must be positive");
    int maxl = 0;
    for (auto& [l, e] : t.d.factors)
        maxl = std::max(maxl, l);
    for (int l : t.e.letters)
        maxl = std::max(maxl, l);
    if (maxl < s + 1)
        return {}; // needs at least s+1 letter slots to act on

    // Divided part: letters above s drop by one, factors at s and s+1 merge.
    Int factor = 1;
    {
        int c = t.d.exponent_of(s), c1 = t.d.exponent_of(s + 1);
        if (c > 0 && c1 > 0)
            factor = binomial(c + c1, c);
    }
    DividedWord nd;
    for (auto& [l, e] : t.d.factors) {
        int nl = l > s ? l - 1 : l;
        if (!nd.factors.empty() && nd.factors.back().first == nl)
            nd.factors.back().second += e;
        else
            nd.factors.emplace_back(nl, e);
    }

    std::vector<int> ne;
    ne.reserve(t.e.letters.size());
    for (int l : t.e.letters)
        ne.push_back(l > s ? l - 1 : l);

    FreeVector out;
    if (M.kind == CoefficientModule::Kind::skew) {
        auto norm = normalize_exterior(std::move(ne));
        if (!norm)
            return {};
        out.add(Tableau{nd, norm->second}, factor * norm->first);
    } else {
        out.add_scaled(straighten(nd, std::move(ne)), factor);
    }
    return out;
}

FreeVector theta(int s, const FreeVector& v, const CoefficientModule& M) {
    FreeVector out;
    for (auto& [t, c] : v.terms)
        out.add_scaled(theta(s, t, M), c);
    return out;
}

FreeVector lower_map(const Tableau& x) {
    FreeVector out;
    for (auto& [l, e] : x.d.factors) {
        DividedWord nd = x.d.with_exponent(l, -1);
        std::vector<int> nl;
        nl.reserve(x.e.letters.size() + 1);
        nl.push_back(l);
        nl.insert(nl.end(), x.e.letters.begin(), x.e.letters.end());
        auto norm = normalize_exterior(std::move(nl));
        if (!norm)
            continue;
        out.add(Tableau{nd, norm->second}, norm->first);
    }
    return out;
}

namespace {

std::string letter_str(int l) {
    if (l <= 9)
        return std::to_string(l);
    return "(" + std::to_string(l) + ")";
}

std::string divided_str(const DividedWord& d) {
    std::string s;
    for (auto& [l, e] : d.factors) {
        s += letter_str(l);
        if (e > 1)
            s += "^(" + std::to_string(e) + ")";
    }
    return s;
}

std::string exterior_str(const ExteriorWord& e) {
    std::string s;
    for (int l : e.letters)
        s += letter_str(l);
    return s;
}

} // namespace

std::string to_string(const Tableau& t, CoefficientModule::Kind kind) {
    std::string d = t.d.factors.empty() ? "∅" : divided_str(t.d);
    if (t.e.letters.empty())
        return d;
    if (kind == CoefficientModule::Kind::skew)
        return d + " ⊗ " + exterior_str(t.e);
    return d + "/" + exterior_str(t.e);
}

std::string to_string(const FreeVector& v, CoefficientModule::Kind kind) {
    if (v.terms.empty())
        return "0";
    std::string s;
    for (auto& [t, c] : v.terms) {
        if (!s.empty())
            s += c > 0 ? " + " : " - ";
        else if (c < 0)
            s += "-";
        Int a = abs(c);
        if (a != 1)
            s += a.str() + "·";
        s += to_string(t, kind);
    }
    return s;
}

} // namespace weylext
