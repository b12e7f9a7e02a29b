#pragma once

#include "weylext/extcalc.hpp"

#include <functional>
#include <string>
#include <vector>

namespace weylext {

struct SuiteResult {
    int cells = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Run fn(0..n-1) on up to `jobs` worker threads; results stay index-ordered.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

// Ext^2 with Weyl coefficients against the closed form, full (a,b,k) grid
// with 1 <= a <= amax, 2 <= b <= bmax, 0 <= k <= b.
SuiteResult suite_closed_form(int amax, int bmax, int jobs, const MatrixCache* cache = nullptr);

// Skew coefficients for 0 <= k < b: Ext^1 is Z_2 exactly for k >= 1 and
// Ext^2 is Z_3 exactly for k in {2,3}; both depend on k alone.
SuiteResult suite_skew_table(int amax, int bmax, int jobs, const MatrixCache* cache = nullptr);

// Frozen small differential matrices and their invariant factors.
SuiteResult suite_fixture_matrices(const MatrixCache* cache = nullptr);

// d compose d = 0 for every swept coefficient module, and for k >= 1 the
// rational ranks of consecutive differentials add up to the middle
// dimension (the rational complex is exact in positive degrees).
SuiteResult suite_complex(int amax, int bmax, int jobs, const MatrixCache* cache = nullptr);

// Block reassembly of the degree-2 differential for both recursion shapes.
SuiteResult suite_blocks(int amax, int bmin, int bmax, int jobs,
                         const MatrixCache* cache = nullptr);

// Coset orders of the distinguished cochains and the lowering-map relation.
SuiteResult suite_generators(int amax, int bmax, int jobs, const MatrixCache* cache = nullptr);

// Cocycle relation certificates.
SuiteResult suite_relations(int amax, int bmax, int jobs, const MatrixCache* cache = nullptr);

// First-Ext dichotomy for 2 <= k < b (it fails at k = 1, where the first
// group picks up torsion of order (a+b)/gcd(2,a+b)).
SuiteResult suite_first_ext(int amax, int bmax, int jobs, const MatrixCache* cache = nullptr);

// Modular Ext^1 dimensions against the closed-form predicate.
SuiteResult suite_modular(int amax, int bmax, const std::vector<long>& primes, int jobs,
                          const MatrixCache* cache = nullptr);

} // namespace weylext
