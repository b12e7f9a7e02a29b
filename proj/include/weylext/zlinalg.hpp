#pragma once

#include "weylext/bigint.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace weylext {

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> invariant_factors; // each >= 2, d1 | d2 | ...

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool operator==(const AbelianGroup&) const = default;

    std::string to_string() const; // "0", "Z", "Z_3", "Z^2 (+) Z_2 (+) Z_6", ...
};

// Dense integer matrix with optional row/column labels for reporting.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;

    // Rows and columns picked by index, in the given order.
    IntMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    static IntMatrix identity(int n);

    std::vector<std::string> row_labels, col_labels;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SmithResult {
    std::vector<Int> factors; // nonzero invariant factors, d1 | d2 | ...
    int rank = 0;
};

// Diagonalization L * A * R = D with unimodular L, R; D carries the
// invariant factors on its diagonal.
struct SmithTransforms {
    std::vector<Int> factors;
    int rank = 0;
    IntMatrix L, R;
};

SmithResult smith_normal_form(IntMatrix A);
SmithTransforms smith_with_transforms(IntMatrix A);

// Some integer solution x of A x = v, or nullopt when v is outside the
// column lattice.
std::optional<std::vector<Int>> hermite_solve(const IntMatrix& A, const std::vector<Int>& v);

// Z^ambient / colspace(A); ambient must equal A.rows().
AbelianGroup cokernel(const IntMatrix& A, int ambient);

// Least m >= 1 with m v in colspace(A); nullopt when no multiple lands there.
std::optional<Int> coset_order(const IntMatrix& A, const std::vector<Int>& v);

// Rank of A over the prime field F_p.
int rank_mod_p(const IntMatrix& A, long p);

// Sparse triplet text format: "rows cols" header, then "i j value" lines
// (0-based, sorted by row then column).
void write_triplets(std::ostream& os, const IntMatrix& A);
IntMatrix read_triplets(std::istream& is);

} // namespace weylext
