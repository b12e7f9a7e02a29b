#include "weylext/resolution.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace weylext {

int HomBasis::size() const {
    int n = 0;
    for (auto& [mu, tabs] : blocks)
        n += static_cast<int>(tabs.size());
    return n;
}

int HomBasis::index_of(const Composition& mu, const Tableau& t) const {
    int offset = 0;
    for (auto& [nu, tabs] : blocks) {
        if (nu == mu) {
            for (size_t j = 0; j < tabs.size(); ++j)
                if (tabs[j] == t)
                    return offset + static_cast<int>(j);
            return -1;
        }
        offset += static_cast<int>(tabs.size());
    }
    return -1;
}

std::vector<std::string> HomBasis::labels() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (auto& [mu, tabs] : blocks)
        for (auto& t : tabs)
            out.push_back(mu.to_string() + " " + to_string(t, M.kind));
    return out;
}

std::vector<Int> HomBasis::column_of(const FreeVector& v) const {
    std::vector<Int> col(size());
    for (auto& [t, c] : v.terms) {
        int idx = index_of(content_of(t), t);
        if (idx < 0)
            throw std::runtime_error("column_of: term is not a basis element: " +
                                     to_string(t, M.kind));
        col[idx] = c;
    }
    return col;
}

HomBasis hom_basis(int a, int b, int i, const CoefficientModule& M) {
    if (M.degree() != a + b)
        throw std::invalid_argument("hom_basis: coefficient degree must be a+b");
    HomBasis H;
    H.a = a;
    H.b = b;
    H.degree = i;
    H.M = M;
    for (auto& mu : resolution_compositions(a, b, i))
        H.blocks.emplace_back(mu, weight_basis(mu, M));
    return H;
}

MatrixCache::MatrixCache(std::filesystem::path root) {
    if (root.empty())
        return;
    root_ = root / "v1"; // format version of the triplet files
    std::filesystem::create_directories(root_);
}

std::optional<IntMatrix> MatrixCache::load(const std::string& key) const {
    if (!enabled())
        return std::nullopt;
    std::ifstream in(root_ / (key + ".mat"));
    if (!in)
        return std::nullopt;
    return read_triplets(in);
}

void MatrixCache::store(const std::string& key, const IntMatrix& A) const {
    if (!enabled())
        return;
    auto final_path = root_ / (key + ".mat");
    if (std::filesystem::exists(final_path))
        return;
    static std::mt19937_64 rng{std::random_device{}()};
    auto tmp = root_ / (key + ".tmp" + std::to_string(rng()));
    {
        std::ofstream out(tmp);
        write_triplets(out, A);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, final_path, ec); // publish atomically
    if (ec)
        std::filesystem::remove(tmp, ec);
}

std::string MatrixCache::differential_key(int a, int b, int i, const CoefficientModule& M) {
    return "e_a" + std::to_string(a) + "_b" + std::to_string(b) + "_i" + std::to_string(i) +
           "_" + M.describe() + "_n" + std::to_string(b + 1);
}

namespace {

// Flat row lookup: weight -> (block offset, tableau -> position).
struct RowIndex {
    std::map<Composition, std::pair<int, std::map<Tableau, int>>> by_weight;

    explicit RowIndex(const HomBasis& H) {
        int offset = 0;
        for (auto& [mu, tabs] : H.blocks) {
            auto& slot = by_weight[mu];
            slot.first = offset;
            for (size_t j = 0; j < tabs.size(); ++j)
                slot.second.emplace(tabs[j], static_cast<int>(j));
            offset += static_cast<int>(tabs.size());
        }
    }

    // -1 when the weight has no block (the term is dropped).
    int find(const Composition& mu, const Tableau& t) const {
        auto it = by_weight.find(mu);
        if (it == by_weight.end())
            return -1;
        auto jt = it->second.second.find(t);
        if (jt == it->second.second.end())
            throw std::runtime_error("differential: image term missing from its weight block");
        return it->second.first + jt->second;
    }
};

} // namespace

IntMatrix differential_matrix(int a, int b, int i, const CoefficientModule& M,
                              const MatrixCache* cache) {
    const std::string key = MatrixCache::differential_key(a, b, i, M);
    if (cache) {
        if (auto hit = cache->load(key))
            return *hit;
    }

    HomBasis dom = hom_basis(a, b, i - 1, M);
    HomBasis cod = hom_basis(a, b, i, M);
    RowIndex rows(cod);

    IntMatrix E(cod.size(), dom.size());
    E.row_labels = cod.labels();
    E.col_labels = dom.labels();

    int col = 0;
    for (auto& [mu, tabs] : dom.blocks) {
        for (auto& t : tabs) {
            for (int s = 1; s < mu.length(); ++s) {
                Composition nu = merge_at(mu, s);
                if (!rows.by_weight.count(nu))
                    continue; // merged weight left the index set
                FreeVector img = theta(s, t, M);
                const int sign = (s % 2 == 1) ? 1 : -1;
                for (auto& [u, c] : img.terms)
                    E.at(rows.find(nu, u), col) += sign * c;
            }
            ++col;
        }
    }

    if (cache)
        cache->store(key, E);
    return E;
}

IntMatrix ma_differential_matrix(int a, int b1, int i, const CoefficientModule& M) {
    if (M.degree() != a + 1 + b1)
        throw std::invalid_argument("ma_differential_matrix: coefficient degree mismatch");

    auto extend = [a](const Composition& nu) {
        std::vector<int> p;
        p.reserve(nu.parts.size() + 1);
        p.push_back(a);
        p.insert(p.end(), nu.parts.begin(), nu.parts.end());
        return Composition(std::move(p));
    };

    auto make_basis = [&](int deg) {
        std::vector<std::pair<Composition, std::vector<Tableau>>> blocks;
        for (auto& nu : resolution_compositions(1, b1, deg))
            blocks.emplace_back(nu, weight_basis(extend(nu), M));
        return blocks;
    };

    auto dom = make_basis(i - 1);
    auto cod = make_basis(i);

    std::map<Composition, std::pair<int, std::map<Tableau, int>>> rows;
    int offset = 0;
    for (auto& [nu, tabs] : cod) {
        auto& slot = rows[nu];
        slot.first = offset;
        for (size_t j = 0; j < tabs.size(); ++j)
            slot.second.emplace(tabs[j], static_cast<int>(j));
        offset += static_cast<int>(tabs.size());
    }

    int ncols = 0;
    for (auto& [nu, tabs] : dom)
        ncols += static_cast<int>(tabs.size());
    IntMatrix E(offset, ncols);

    int col = 0;
    for (auto& [nu, tabs] : dom) {
        for (auto& t : tabs) {
            for (int s = 1; s < nu.length(); ++s) {
                Composition merged = merge_at(nu, s);
                auto it = rows.find(merged);
                if (it == rows.end())
                    continue;
                FreeVector img = theta(s + 1, t, M); // letter 1 is frozen
                const int sign = (s % 2 == 1) ? 1 : -1;
                for (auto& [u, c] : img.terms) {
                    auto jt = it->second.second.find(u);
                    if (jt == it->second.second.end())
                        throw std::runtime_error("ma_differential: term missing from block");
                    E.at(it->second.first + jt->second, col) += sign * c;
                }
            }
            ++col;
        }
    }
    return E;
}

CheckReport verify_complex(int a, int b, const CoefficientModule& M, int up_to,
                           const MatrixCache* cache) {
    CheckReport rep;
    IntMatrix prev = differential_matrix(a, b, 1, M, cache);
    for (int i = 1; i < up_to; ++i) {
        IntMatrix next = differential_matrix(a, b, i + 1, M, cache);
        IntMatrix prod = next * prev;
        if (!prod.is_zero()) {
            for (int r = 0; r < prod.rows(); ++r)
                for (int c = 0; c < prod.cols(); ++c)
                    if (prod.at(r, c) != 0) {
                        rep.ok = false;
                        rep.detail = "d∘d ≠ 0 at degree " + std::to_string(i + 1) + ", row " +
                                     next.row_labels[r] + ", column " + prev.col_labels[c] +
                                     ", value " + prod.at(r, c).str();
                        return rep;
                    }
        }
        prev = std::move(next);
    }
    return rep;
}

namespace {

std::vector<int> indices_where(const HomBasis& H, bool (*pred)(int, const Tableau&, int)) {
    std::vector<int> out;
    int idx = 0;
    for (auto& [mu, tabs] : H.blocks) {
        for (auto& t : tabs) {
            if (pred(mu.parts.front(), t, H.a))
                out.push_back(idx);
            ++idx;
        }
    }
    return out;
}

bool first_part_high(int first, const Tableau&, int a) { return first >= a + 1; }
bool first_part_low(int first, const Tableau&, int a) { return first == a; }

CheckReport compare_blocks(const IntMatrix& got, const IntMatrix& want, const std::string& name) {
    CheckReport rep;
    if (got.rows() != want.rows() || got.cols() != want.cols()) {
        rep.ok = false;
        rep.detail = name + ": block is " + std::to_string(got.rows()) + "x" +
                     std::to_string(got.cols()) + ", expected " + std::to_string(want.rows()) +
                     "x" + std::to_string(want.cols());
        return rep;
    }
    for (int i = 0; i < got.rows(); ++i)
        for (int j = 0; j < got.cols(); ++j)
            if (got.at(i, j) != want.at(i, j)) {
                rep.ok = false;
                rep.detail = name + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is " + got.at(i, j).str() + ", expected " + want.at(i, j).str();
                return rep;
            }
    return rep;
}

CheckReport check_zero(const IntMatrix& block, const std::string& name) {
    CheckReport rep;
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j)
            if (block.at(i, j) != 0) {
                rep.ok = false;
                rep.detail = name + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is " + block.at(i, j).str() + ", expected 0";
                return rep;
            }
    return rep;
}

} // namespace

CheckReport block_check_split(int a, int b, int i, const CoefficientModule& M,
                              const MatrixCache* cache) {
    if (i < 1 || i > b)
        throw std::invalid_argument("block_check_split: need 1 <= i <= b");
    IntMatrix E = differential_matrix(a, b, i, M, cache);
    HomBasis dom = hom_basis(a, b, i - 1, M);
    HomBasis cod = hom_basis(a, b, i, M);

    auto rows_hi = indices_where(cod, first_part_high);
    auto rows_lo = indices_where(cod, first_part_low);
    auto cols_hi = indices_where(dom, first_part_high);
    auto cols_lo = indices_where(dom, first_part_low);

    CheckReport rep = check_zero(E.submatrix(rows_lo, cols_hi), "lower-left block");
    if (!rep.ok)
        return rep;

    if (i >= 2) {
        IntMatrix small = differential_matrix(a + 1, b - 1, i - 1, M, cache);
        rep = compare_blocks(E.submatrix(rows_hi, cols_hi), small, "upper-left block");
        if (!rep.ok)
            return rep;
    }

    IntMatrix sub = ma_differential_matrix(a, b - 1, i, M);
    rep = compare_blocks(E.submatrix(rows_lo, cols_lo), -sub, "lower-right block");
    return rep;
}

namespace {

// Inverse relabeling for the skew refinement: shift all letters up by one,
// add `ones_d` letter-1s to the divided part and, when asked, the letter 1
// to the exterior part.
Tableau shift_up(const Tableau& t, int ones_d, bool one_e) {
    Tableau out;
    for (auto& [l, e] : t.d.factors)
        out.d.factors.emplace_back(l + 1, e);
    if (ones_d > 0)
        out.d.factors.insert(out.d.factors.begin(), {1, ones_d});
    if (one_e)
        out.e.letters.push_back(1);
    for (int l : t.e.letters)
        out.e.letters.push_back(l + 1);
    return out;
}

Composition extend_by(int a, const Composition& nu) {
    std::vector<int> p;
    p.reserve(nu.parts.size() + 1);
    p.push_back(a);
    p.insert(p.end(), nu.parts.begin(), nu.parts.end());
    return Composition(std::move(p));
}

// Flat indices of the relabeled small basis inside the big one.
std::vector<int> mapped_indices(const HomBasis& big, const HomBasis& small,
                                int ones_d, bool one_e) {
    std::vector<int> out;
    for (auto& [nu, tabs] : small.blocks) {
        Composition mu = extend_by(big.a, nu);
        for (auto& t : tabs) {
            int idx = big.index_of(mu, shift_up(t, ones_d, one_e));
            if (idx < 0)
                throw std::runtime_error("block_check_skew: relabeled element missing");
            out.push_back(idx);
        }
    }
    return out;
}

} // namespace

CheckReport block_check_skew(int a, int b, int i, int k, const MatrixCache* cache) {
    if (i < 2 || i > b)
        throw std::invalid_argument("block_check_skew: need 2 <= i <= b");
    if (k < 0 || k > b)
        throw std::invalid_argument("block_check_skew: need 0 <= k <= b");
    CoefficientModule M = CoefficientModule::skew(a + k, b - k);
    IntMatrix E = differential_matrix(a, b, i, M, cache);
    HomBasis dom = hom_basis(a, b, i - 1, M);
    HomBasis cod = hom_basis(a, b, i, M);

    auto lo_split = [](const HomBasis& H) {
        std::vector<int> with1, without1;
        int idx = 0;
        for (auto& [mu, tabs] : H.blocks) {
            for (auto& t : tabs) {
                if (mu.parts.front() == H.a)
                    (t.e.contains(1) ? with1 : without1).push_back(idx);
                ++idx;
            }
        }
        return std::make_pair(with1, without1);
    };

    auto rows_hi = indices_where(cod, first_part_high);
    auto cols_hi = indices_where(dom, first_part_high);
    auto [rows_b1, rows_b0] = lo_split(cod);
    auto [cols_b1, cols_b0] = lo_split(dom);

    CheckReport rep;
    for (auto& [block, name] :
         std::vector<std::pair<IntMatrix, std::string>>{
             {E.submatrix(rows_b1, cols_hi), "rows with 1, high columns"},
             {E.submatrix(rows_b0, cols_hi), "rows without 1, high columns"},
             {E.submatrix(rows_b1, cols_b0), "rows with 1, columns without 1"},
             {E.submatrix(rows_b0, cols_b1), "rows without 1, columns with 1"}}) {
        rep = check_zero(block, name);
        if (!rep.ok)
            return rep;
    }

    IntMatrix upper = differential_matrix(a + 1, b - 1, i - 1, M, cache);
    rep = compare_blocks(E.submatrix(rows_hi, cols_hi), upper, "upper-left block");
    if (!rep.ok)
        return rep;

    if (k < b) {
        CoefficientModule M1 = CoefficientModule::skew(1 + k, b - k - 1);
        IntMatrix small = differential_matrix(1, b - 1, i, M1, cache);
        HomBasis sdom = hom_basis(1, b - 1, i - 1, M1);
        HomBasis scod = hom_basis(1, b - 1, i, M1);
        auto rmap = mapped_indices(cod, scod, a - 1, true);
        auto cmap = mapped_indices(dom, sdom, a - 1, true);
        if (rmap != rows_b1 || cmap != cols_b1) {
            rep.ok = false;
            rep.detail = "middle block: relabeling is not order-compatible";
            return rep;
        }
        rep = compare_blocks(E.submatrix(rmap, cmap), -small, "middle block");
        if (!rep.ok)
            return rep;
    } else if (!rows_b1.empty() || !cols_b1.empty()) {
        rep.ok = false;
        rep.detail = "middle block: expected no exterior letter 1 at k = b";
        return rep;
    }

    {
        CoefficientModule M0 = CoefficientModule::skew(k, b - k);
        IntMatrix small = differential_matrix(1, b - 1, i, M0, cache);
        HomBasis sdom = hom_basis(1, b - 1, i - 1, M0);
        HomBasis scod = hom_basis(1, b - 1, i, M0);
        auto rmap = mapped_indices(cod, scod, a, false);
        auto cmap = mapped_indices(dom, sdom, a, false);
        if (rmap != rows_b0 || cmap != cols_b0) {
            rep.ok = false;
            rep.detail = "last block: relabeling is not order-compatible";
            return rep;
        }
        rep = compare_blocks(E.submatrix(rmap, cmap), -small, "last block");
    }
    return rep;
}

} // namespace weylext
