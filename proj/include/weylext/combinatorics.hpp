#pragma once

#include "weylext/bigint.hpp"

#include <compare>
#include <string>
#include <vector>

namespace weylext {

// Hook shape (arm, 1^leg); degree arm + leg.
struct Hook {
    int arm = 1;
    int leg = 0;

    int degree() const { return arm + leg; }

    // Shift k boxes from the leg into the arm: (arm+k, 1^(leg-k)).
    Hook shift(int k) const;

    bool operator==(const Hook&) const = default;
};

// Composition with positive parts.
struct Composition {
    std::vector<int> parts;
    int sum = 0;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

    std::string to_string() const; // "(2,1,1)"
};

// Binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
Int binomial(long long n, long long k);

// Order on weights: mu comes before nu when mu is lexicographically greater
// after zero padding to a common length. Strict total order on distinct
// weights of equal sum.
bool weight_less(const Composition& mu, const Composition& nu);

// Merge parts s and s+1 of mu (1-based); length drops by one.
Composition merge_at(const Composition& mu, int s);

// Index set of the degree-i term of the resolution of the hook (a, 1^b):
// compositions of a+b with b+1-i positive parts whose first part lies in
// [a, a+i], listed in weight order. Empty for i > b.
std::vector<Composition> resolution_compositions(int a, int b, int i);

} // namespace weylext
