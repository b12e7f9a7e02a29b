#pragma once

#include "weylext/tableaux.hpp"
#include "weylext/zlinalg.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace weylext {

// Ordered basis of Hom(P_i, M) for the resolution of the hook (a, 1^b):
// one block per index composition, blocks in weight order, tableaux in basis
// order inside each block.
struct HomBasis {
    int a = 0, b = 0, degree = 0;
    CoefficientModule M;
    std::vector<std::pair<Composition, std::vector<Tableau>>> blocks;

    int size() const;
    // Flat index of a tableau inside the block of weight mu; -1 when absent.
    int index_of(const Composition& mu, const Tableau& t) const;
    std::vector<std::string> labels() const; // "(2,1,1) 1^(2)23"

    // Flat column vector of a tableau combination; every term must be a
    // basis element.
    std::vector<Int> column_of(const FreeVector& v) const;
};

HomBasis hom_basis(int a, int b, int i, const CoefficientModule& M);

// Optional on-disk matrix store (sparse triplet text files, one per matrix,
// published by create-then-rename). An empty root disables it.
class MatrixCache {
  public:
    MatrixCache() = default;
    explicit MatrixCache(std::filesystem::path root);

    bool enabled() const { return !root_.empty(); }
    std::optional<IntMatrix> load(const std::string& key) const;
    void store(const std::string& key, const IntMatrix& A) const;

    static std::string differential_key(int a, int b, int i, const CoefficientModule& M);

  private:
    std::filesystem::path root_; // includes the format-version directory
};

// Matrix of the degree-i differential of Hom(P_*, M): columns indexed by
// hom_basis(a, b, i-1, M), rows by hom_basis(a, b, i, M); the column of a
// tableau T holds sum_s (-1)^(s-1) theta_s(T) spread over the row blocks of
// the merged weights.
IntMatrix differential_matrix(int a, int b, int i, const CoefficientModule& M,
                              const MatrixCache* cache = nullptr);

// Differential of Hom(P_*(1, b1), M_a) where M_a is spanned by the tableaux
// of M whose letter-1 multiplicity is exactly `a` (letters kept as is, so
// the small index compositions are extended by a fixed first part a). The
// substitution theta_s of the small complex is theta_{s+1} of the big one.
IntMatrix ma_differential_matrix(int a, int b1, int i, const CoefficientModule& M);

struct CheckReport {
    bool ok = true;
    std::string detail;
};

// d compose d = 0 for consecutive differentials up to degree `up_to`.
CheckReport verify_complex(int a, int b, const CoefficientModule& M, int up_to,
                           const MatrixCache* cache = nullptr);

// Splitting of the degree-i differential under the first-part dichotomy
// a_1 >= a+1 / a_1 = a: top-left block equals the degree-(i-1) differential
// for the hook (a+1, 1^(b-1)) (when i >= 2), bottom-left block vanishes,
// bottom-right block equals minus the M_a differential.
CheckReport block_check_split(int a, int b, int i, const CoefficientModule& M,
                              const MatrixCache* cache = nullptr);

// Refinement for M = D_{a+k} (x) Λ^(b-k) and i >= 2: the a_1 = a part
// separates further by whether the exterior part contains the letter 1,
// giving a block-triangular matrix whose diagonal blocks are differentials
// of smaller skew coefficients after dropping the 1s and shifting letters
// down.
CheckReport block_check_skew(int a, int b, int i, int k,
                             const MatrixCache* cache = nullptr);

} // namespace weylext
