// Brute-force reference computations for tests. Everything here recomputes
// from first principles, independently of the library's enumeration order
// and algebra.
#pragma once

#include "weylext/tableaux.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using weylext::Composition;
using weylext::Int;
using weylext::Tableau;

// Pascal-triangle binomial table.
inline Int pascal_binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::vector<std::vector<Int>> row(n + 1);
    for (int i = 0; i <= n; ++i) {
        row[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j)
            row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
    }
    return row[n][k];
}

// All compositions of `total` into `len` positive parts, enumeration order
// unspecified.
inline void all_compositions_rec(int total, int len, std::vector<int>& acc,
                                 std::vector<std::vector<int>>& out) {
    if (len == 1) {
        if (total >= 1) {
            acc.push_back(total);
            out.push_back(acc);
            acc.pop_back();
        }
        return;
    }
    for (int p = 1; p + (len - 1) <= total; ++p) {
        acc.push_back(p);
        all_compositions_rec(total - p, len - 1, acc, out);
        acc.pop_back();
    }
}

inline std::vector<std::vector<int>> all_compositions(int total, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    if (len >= 1)
        all_compositions_rec(total, len, acc, out);
    return out;
}

// All splittings of the content mu into an exterior subset (bitmask over
// letters) and a divided remainder; the filter decides which splittings to
// keep.
template <typename Keep>
std::vector<Tableau> splittings(const Composition& mu, Keep keep) {
    const int n = mu.length();
    std::vector<Tableau> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Tableau t;
        bool valid = true;
        for (int j = 1; j <= n && valid; ++j) {
            int m = mu.parts[j - 1];
            if (mask & (1u << (j - 1))) {
                t.e.letters.push_back(j);
                --m;
            }
            if (m < 0)
                valid = false;
            else if (m > 0)
                t.d.factors.emplace_back(j, m);
        }
        if (valid && keep(t))
            out.push_back(t);
    }
    return out;
}

// Coefficient of x^mu in h_m * e_l over mu.length() variables: expand the
// complete homogeneous monomials (multisets) against the elementary ones
// (subsets) and count the pairs hitting mu.
inline long character_coefficient(const Composition& mu, int m, int l) {
    const int n = mu.length();
    long count = 0;
    std::vector<int> exp(n, 0);

    // enumerate multisets of size m as exponent vectors
    std::vector<std::vector<int>> hmon;
    std::vector<int> he(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            he[pos] = left;
            hmon.push_back(he);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            he[pos] = c;
            self(self, pos + 1, left - c);
        }
    };
    if (n > 0)
        rec(rec, 0, m);
    else if (m == 0)
        hmon.push_back({});

    for (auto& h : hmon)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != l)
                continue;
            bool hit = true;
            for (int j = 0; j < n && hit; ++j)
                hit = h[j] + ((mask >> j) & 1) == static_cast<unsigned>(mu.parts[j]);
            if (hit)
                ++count;
        }
    return count;
}

// Standardness predicate spelled out directly on the tableau.
inline bool is_standard_weyl(const Tableau& t) {
    for (size_t i = 1; i < t.e.letters.size(); ++i)
        if (t.e.letters[i - 1] >= t.e.letters[i])
            return false;
    if (t.e.letters.empty())
        return true;
    if (t.d.factors.empty())
        return false;
    return t.d.factors.front().first < t.e.letters.front();
}

// Random positive composition of `total` with at most `maxlen` parts.
inline Composition random_composition(std::mt19937_64& rng, int total, int maxlen) {
    std::uniform_int_distribution<int> len_d(1, std::min(total, maxlen));
    int len = len_d(rng);
    std::vector<int> parts(len, 1);
    int left = total - len;
    std::uniform_int_distribution<int> pos_d(0, len - 1);
    while (left-- > 0)
        ++parts[pos_d(rng)];
    return Composition(parts);
}

} // namespace oracle
