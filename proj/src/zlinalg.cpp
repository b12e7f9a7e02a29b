#include "weylext/zlinalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace weylext {

std::string AbelianGroup::to_string() const {
    if (is_trivial())
        return "0";
    std::string s;
    if (free_rank == 1)
        s = "Z";
    else if (free_rank > 1)
        s = "Z^" + std::to_string(free_rank);
    for (const Int& d : invariant_factors) {
        if (!s.empty())
            s += " (+) ";
        s += "Z_" + d.str();
    }
    return s;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (Int& x : r.a_)
        x = -x;
    return r;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    IntMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    if (!row_labels.empty()) {
        for (int i : rows)
            r.row_labels.push_back(row_labels[i]);
    }
    if (!col_labels.empty()) {
        for (int j : cols)
            r.col_labels.push_back(col_labels[j]);
    }
    return r;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        r.at(i, i) = 1;
    return r;
}

namespace {

// Diagonalize A in place by unimodular row and column operations, tracking
// the operations in L and R when given.
int diagonalize(IntMatrix& A, IntMatrix* L, IntMatrix* R) {
    const int rows = A.rows(), cols = A.cols();

    auto row_sub = [&](int dst, int src, const Int& q) {
        for (int j = 0; j < cols; ++j)
            A.at(dst, j) -= q * A.at(src, j);
        if (L)
            for (int j = 0; j < rows; ++j)
                L->at(dst, j) -= q * L->at(src, j);
    };
    auto col_sub = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < rows; ++i)
            A.at(i, dst) -= q * A.at(i, src);
        if (R)
            for (int i = 0; i < cols; ++i)
                R->at(i, dst) -= q * R->at(i, src);
    };
    auto row_swap = [&](int r1, int r2) {
        if (r1 == r2)
            return;
        for (int j = 0; j < cols; ++j)
            std::swap(A.at(r1, j), A.at(r2, j));
        if (L)
            for (int j = 0; j < rows; ++j)
                std::swap(L->at(r1, j), L->at(r2, j));
    };
    auto col_swap = [&](int c1, int c2) {
        if (c1 == c2)
            return;
        for (int i = 0; i < rows; ++i)
            std::swap(A.at(i, c1), A.at(i, c2));
        if (R)
            for (int i = 0; i < cols; ++i)
                std::swap(R->at(i, c1), R->at(i, c2));
    };

    int t = 0;
    while (t < rows && t < cols) {
        // Bring a nonzero entry of smallest magnitude to the pivot.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const Int& x = A.at(i, j);
                if (x == 0)
                    continue;
                if (pi < 0 || abs(x) < abs(A.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break;
        row_swap(t, pi);
        col_swap(t, pj);

        // Shrink the pivot along its Euclid chain before any exact clearing:
        // the moment a division leaves a remainder, swap it into the pivot
        // and start over. The pivot magnitude strictly decreases on every
        // pass through this loop, and the accumulated quotients telescope,
        // which keeps intermediate entries from compounding.
        for (bool settled = false; !settled;) {
            settled = true;
            for (int r = t + 1; r < rows && settled; ++r)
                if (A.at(r, t) % A.at(t, t) != 0) {
                    row_sub(r, t, A.at(r, t) / A.at(t, t));
                    row_swap(r, t);
                    settled = false;
                }
            for (int c = t + 1; c < cols && settled; ++c)
                if (A.at(t, c) % A.at(t, t) != 0) {
                    col_sub(c, t, A.at(t, c) / A.at(t, t));
                    col_swap(c, t);
                    settled = false;
                }
            if (!settled)
                continue;

            // The pivot divides its row and column: clear the column first,
            // then the row operations below touch nothing but row t.
            for (int r = t + 1; r < rows; ++r)
                if (A.at(r, t) != 0)
                    row_sub(r, t, A.at(r, t) / A.at(t, t));
            for (int c = t + 1; c < cols; ++c)
                if (A.at(t, c) != 0)
                    col_sub(c, t, A.at(t, c) / A.at(t, t));

            // Pivot must divide the rest of the submatrix for the
            // invariant-factor chain; fold an offending row in and retry.
            for (int i = t + 1; i < rows && settled; ++i)
                for (int j = t + 1; j < cols && settled; ++j)
                    if (A.at(i, j) % A.at(t, t) != 0) {
                        row_sub(t, i, Int(-1));
                        settled = false;
                    }
        }
        if (A.at(t, t) < 0) {
            for (int j = t; j < cols; ++j)
                A.at(t, j) = -A.at(t, j);
            if (L)
                for (int j = 0; j < rows; ++j)
                    L->at(t, j) = -L->at(t, j);
        }
        ++t;
    }
    return t;
}

std::vector<Int> matvec(const IntMatrix& A, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != A.cols())
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<Int> r(A.rows());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            r[i] += A.at(i, j) * v[j];
    return r;
}

} // namespace

SmithResult smith_normal_form(IntMatrix A) {
    SmithResult res;
    res.rank = diagonalize(A, nullptr, nullptr);
    for (int i = 0; i < res.rank; ++i)
        res.factors.push_back(A.at(i, i));
    return res;
}

SmithTransforms smith_with_transforms(IntMatrix A) {
    SmithTransforms res;
    res.L = IntMatrix::identity(A.rows());
    res.R = IntMatrix::identity(A.cols());
    res.rank = diagonalize(A, &res.L, &res.R);
    for (int i = 0; i < res.rank; ++i)
        res.factors.push_back(A.at(i, i));
    return res;
}

std::optional<std::vector<Int>> hermite_solve(const IntMatrix& A, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != A.rows())
        throw std::invalid_argument("hermite_solve: vector length mismatch");
    SmithTransforms st = smith_with_transforms(A);
    std::vector<Int> w = matvec(st.L, v);
    std::vector<Int> y(A.cols());
    for (int i = 0; i < st.rank; ++i) {
        if (w[i] % st.factors[i] != 0)
            return std::nullopt;
        y[i] = w[i] / st.factors[i];
    }
    for (int i = st.rank; i < A.rows(); ++i)
        if (w[i] != 0)
            return std::nullopt;
    return matvec(st.R, y);
}

AbelianGroup cokernel(const IntMatrix& A, int ambient) {
    if (ambient != A.rows())
        throw std::invalid_argument("cokernel: ambient rank must equal row count");
    SmithResult snf = smith_normal_form(A);
    AbelianGroup g;
    g.free_rank = ambient - snf.rank;
    for (const Int& d : snf.factors)
        if (d > 1)
            g.invariant_factors.push_back(d);
    return g;
}

std::optional<Int> coset_order(const IntMatrix& A, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != A.rows())
        throw std::invalid_argument("coset_order: vector length mismatch");
    SmithTransforms st = smith_with_transforms(A);
    std::vector<Int> w = matvec(st.L, v);
    for (int i = st.rank; i < A.rows(); ++i)
        if (w[i] != 0)
            return std::nullopt;
    Int m = 1;
    for (int i = 0; i < st.rank; ++i) {
        if (w[i] == 0)
            continue;
        Int need = st.factors[i] / gcd(st.factors[i], Int(abs(w[i])));
        m = lcm(m, need);
    }
    return abs(m);
}

int rank_mod_p(const IntMatrix& A, long p) {
    if (p < 2)
        throw std::invalid_argument("rank_mod_p: p must be a prime");
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0)
            throw std::invalid_argument("rank_mod_p: p must be a prime");

    const int rows = A.rows(), cols = A.cols();
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Int r = A.at(i, j) % p;
            if (r < 0)
                r += p;
            m[i][j] = static_cast<long>(r);
        }

    auto inv = [&](long x) { // p prime, 0 < x < p
        long r = 1, b = x, e = p - 2;
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };

    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[rank]);
        long k = inv(m[rank][c]);
        for (int j = c; j < cols; ++j)
            m[rank][j] = m[rank][j] * k % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0)
                continue;
            long f = m[i][c];
            for (int j = c; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

void write_triplets(std::ostream& os, const IntMatrix& A) {
    os << A.rows() << ' ' << A.cols() << '\n';
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (A.at(i, j) != 0)
                os << i << ' ' << j << ' ' << A.at(i, j) << '\n';
}

IntMatrix read_triplets(std::istream& is) {
    int rows, cols;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0)
        throw std::runtime_error("read_triplets: bad header");
    IntMatrix A(rows, cols);
    int i, j;
    std::string val;
    while (is >> i >> j >> val) {
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw std::runtime_error("read_triplets: index out of range");
        A.at(i, j) = Int(val);
    }
    return A;
}

} // namespace weylext
