#include "weylext/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylext {

Hook Hook::shift(int k) const {
    if (k < 0 || k > leg)
        throw std::invalid_argument("Hook::shift: k out of range");
    return Hook{arm + k, leg - k};
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts) {
        if (x <= 0)
            throw std::invalid_argument("Composition: parts must be positive");
        sum += x;
    }
}

std::string Composition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    s += ')';
    return s;
}

Int binomial(long long n, long long k) {
    if (n < 0)
        throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

bool weight_less(const Composition& mu, const Composition& nu) {
    size_t len = std::max(mu.parts.size(), nu.parts.size());
    for (size_t i = 0; i < len; ++i) {
        int x = i < mu.parts.size() ? mu.parts[i] : 0;
        int y = i < nu.parts.size() ? nu.parts[i] : 0;
        if (x != y)
            return x > y;
    }
    return false;
}

Composition merge_at(const Composition& mu, int s) {
    if (s < 1 || s >= mu.length())
        throw std::invalid_argument("merge_at: position out of range");
    std::vector<int> p = mu.parts;
    p[s - 1] += p[s];
    p.erase(p.begin() + s);
    return Composition(std::move(p));
}

namespace {

// Emit compositions of `total` into `len` positive parts in lex-descending
// order, first part restricted to [lo, hi].
void emit(int total, int len, int lo, int hi,
          std::vector<int>& acc, std::vector<Composition>& out) {
    if (len == 1) {
        if (total >= lo && total <= hi) {
            acc.push_back(total);
            out.emplace_back(acc);
            acc.pop_back();
        }
        return;
    }
    int top = std::min(hi, total - (len - 1));
    for (int p = top; p >= lo; --p) {
        acc.push_back(p);
        emit(total - p, len - 1, 1, total - p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Composition> resolution_compositions(int a, int b, int i) {
    if (a < 1 || b < 0 || i < 0)
        throw std::invalid_argument("resolution_compositions: bad shape");
    if (i > b)
        return {};
    std::vector<Composition> out;
    std::vector<int> acc;
    emit(a + b, b + 1 - i, a, a + i, acc, out);
    return out;
}

} // namespace weylext
