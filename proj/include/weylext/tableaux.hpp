#pragma once

#include "weylext/combinatorics.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weylext {

// Divided-power word: (letter, exponent) factors, letters strictly
// increasing, exponents positive.
struct DividedWord {
    std::vector<std::pair<int, int>> factors;

    int degree() const;
    int exponent_of(int letter) const; // 0 when absent

    // Add delta to the exponent of `letter`, inserting or erasing the factor
    // as needed. delta may be negative; the result must stay nonnegative.
    DividedWord with_exponent(int letter, int delta) const;

    bool operator==(const DividedWord&) const = default;
    auto operator<=>(const DividedWord&) const = default;
};

// Exterior word: strictly increasing letters.
struct ExteriorWord {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool contains(int letter) const;

    bool operator==(const ExteriorWord&) const = default;
    auto operator<=>(const ExteriorWord&) const = default;
};

// Basis tableau of a coefficient module: a divided part and an exterior
// part. For skew modules D_m (x) Λ^l this is d (x) e; for Weyl modules the
// divided part is the top row and the exterior part the column.
struct Tableau {
    DividedWord d;
    ExteriorWord e;

    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;
};

struct CoefficientModule {
    enum class Kind { skew, weyl };
    Kind kind = Kind::skew;
    int dpow = 0;  // skew: D_dpow
    int ext = 0;   // skew: Λ^ext
    Hook hook;     // weyl shape

    static CoefficientModule skew(int m, int l);
    static CoefficientModule weyl(Hook h);

    int degree() const;
    std::string describe() const; // stable token, used in cache keys
    bool operator==(const CoefficientModule&) const = default;
};

// Integer combination of tableaux; zero coefficients are never stored.
struct FreeVector {
    std::map<Tableau, Int> terms;

    void add(const Tableau& t, const Int& c);
    void add_scaled(const FreeVector& v, const Int& c);
    bool empty() const { return terms.empty(); }
};

// Letter multiplicities of a tableau, as a weight (1-based letters up to the
// largest letter present; every internal multiplicity must be positive).
Composition content_of(const Tableau& t);

// Letters of t in sequence: divided letters with repetition, then the
// exterior letters. Within a fixed weight space this determines t.
std::vector<int> flatten(const Tableau& t);

// Basis order inside a weight space: lex on the flattened letter sequence.
bool basis_less(const Tableau& x, const Tableau& y);

// Basis of the mu-weight space of D_m (x) Λ^l: all splittings of the content
// mu into a divided part of degree m and an exterior part of l distinct
// letters, in basis order.
std::vector<Tableau> skew_weight_basis(const Composition& mu, int m, int l);

// Standard basis of the mu-weight space of the Weyl module of hook shape h:
// top row weakly increasing of degree h.arm, column strictly increasing of
// length h.leg, first top letter smaller than first column letter.
std::vector<Tableau> weyl_weight_basis(const Composition& mu, const Hook& h);

std::vector<Tableau> weight_basis(const Composition& mu, const CoefficientModule& M);

// Sort letters and return the permutation sign, or nullopt when a letter
// repeats (the wedge is zero).
std::optional<std::pair<int, ExteriorWord>> normalize_exterior(std::vector<int> letters);

// Express top/col in the standard basis of the Weyl module of its shape.
// The column may arrive unsorted; content is preserved.
FreeVector straighten(const DividedWord& top, std::vector<int> col);

// Apply the degree-lowering substitution that sends every letter above s to
// its predecessor: divided factors at s, s+1 merge with a binomial
// coefficient, exterior letters collide to zero, Weyl results are
// straightened. Zero when the content of t has fewer than s+1 parts.
FreeVector theta(int s, const Tableau& t, const CoefficientModule& M);
FreeVector theta(int s, const FreeVector& v, const CoefficientModule& M);

// Comultiply one letter out of the divided part and wedge it onto the
// exterior part: D_m (x) Λ^l -> D_{m-1} (x) Λ^{l+1}, one term per letter
// class, sign from sorting the enlarged wedge.
FreeVector lower_map(const Tableau& x);

std::string to_string(const Tableau& t, CoefficientModule::Kind kind);
std::string to_string(const FreeVector& v, CoefficientModule::Kind kind);

} // namespace weylext
