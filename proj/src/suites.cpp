#include "weylext/suites.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace weylext {

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs < 2 || n < 2) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
            fn(i);
    };
    std::vector<std::thread> pool;
    int count = std::min(jobs, n);
    pool.reserve(count);
    for (int t = 0; t < count; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
}

namespace {

// Run one task per cell; exceptions and returned messages become failures.
SuiteResult run_cells(const std::vector<std::function<std::string()>>& tasks, int jobs) {
    SuiteResult res;
    res.cells = static_cast<int>(tasks.size());
    std::vector<std::string> msg(tasks.size());
    parallel_for(res.cells, jobs, [&](int i) {
        try {
            msg[i] = tasks[i]();
        } catch (const std::exception& e) {
            msg[i] = std::string("exception: ") + e.what();
        }
    });
    for (auto& m : msg)
        if (!m.empty())
            res.failures.push_back(m);
    return res;
}

std::string cell_name(int a, int b, int k) {
    return "(a,b,k)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) +
           ")";
}

} // namespace

SuiteResult suite_closed_form(int amax, int bmax, int jobs, const MatrixCache* cache) {
    std::vector<std::function<std::string()>> tasks;
    for (int a = 1; a <= amax; ++a)
        for (int b = 2; b <= bmax; ++b)
            for (int k = 0; k <= b; ++k)
                tasks.push_back([=]() -> std::string {
                    AbelianGroup got = ext({a, b, k, 2, false}, cache).group;
                    AbelianGroup want = expected_ext2(a, b, k);
                    if (got == want)
                        return {};
                    return cell_name(a, b, k) + ": Ext^2 is " + got.to_string() + ", expected " +
                           want.to_string();
                });
    return run_cells(tasks, jobs);
}

SuiteResult suite_skew_table(int amax, int bmax, int jobs, const MatrixCache* cache) {
    std::vector<std::function<std::string()>> tasks;
    for (int a = 1; a <= amax; ++a)
        for (int b = 2; b <= bmax; ++b)
            for (int k = 0; k < b; ++k)
                tasks.push_back([=]() -> std::string {
                    AbelianGroup g1 = ext({a, b, k, 1, true}, cache).group;
                    AbelianGroup g2 = ext({a, b, k, 2, true}, cache).group;
                    AbelianGroup want1;
                    if (k >= 1)
                        want1.invariant_factors.push_back(2);
                    AbelianGroup want2;
                    if (k == 2 || k == 3)
                        want2.invariant_factors.push_back(3);
                    if (g1 != want1)
                        return cell_name(a, b, k) + ": skew Ext^1 is " + g1.to_string() +
                               ", expected " + want1.to_string();
                    if (g2 != want2)
                        return cell_name(a, b, k) + ": skew Ext^2 is " + g2.to_string() +
                               ", expected " + want2.to_string();
                    return {};
                });
    return run_cells(tasks, jobs);
}

SuiteResult suite_fixture_matrices(const MatrixCache* cache) {
    SuiteResult res;
    auto fail = [&](const std::string& m) { res.failures.push_back(m); };

    for (int k = 1; k <= 6; ++k) {
        ++res.cells;
        CoefficientModule M = CoefficientModule::skew(k + 1, 0);
        IntMatrix E = differential_matrix(1, k, 1, M, cache);
        if (E.rows() != k || E.cols() != 1) {
            fail("first differential at b=" + std::to_string(k) + " has wrong shape");
            continue;
        }
        for (int s = 0; s < k; ++s) {
            Int want = s % 2 == 0 ? 2 : -2;
            if (E.at(s, 0) != want) {
                fail("first differential at b=" + std::to_string(k) + " row " +
                     std::to_string(s) + " is " + E.at(s, 0).str());
                break;
            }
        }
    }

    {
        ++res.cells;
        IntMatrix E = differential_matrix(1, 2, 2, CoefficientModule::skew(3, 0), cache);
        IntMatrix want(1, 2);
        want.at(0, 0) = 3;
        want.at(0, 1) = 3;
        if (!(E == want))
            fail("second differential at (1,2) does not match the frozen 1x2 matrix");
        auto snf = smith_normal_form(E);
        if (snf.factors != std::vector<Int>{3})
            fail("invariant factors at (1,2) are not [3]");
    }

    {
        ++res.cells;
        IntMatrix E = differential_matrix(1, 3, 2, CoefficientModule::skew(4, 0), cache);
        const long long want[3][3] = {{3, 3, 0}, {-2, 0, 2}, {0, -3, -3}};
        bool ok = E.rows() == 3 && E.cols() == 3;
        for (int i = 0; ok && i < 3; ++i)
            for (int j = 0; ok && j < 3; ++j)
                ok = E.at(i, j) == want[i][j];
        if (!ok)
            fail("second differential at (1,3) does not match the frozen 3x3 matrix");
        auto snf = smith_normal_form(E);
        if (snf.factors != std::vector<Int>{1, 3})
            fail("invariant factors at (1,3) are not [1,3]");
    }

    for (int k = 2; k <= 6; ++k) {
        ++res.cells;
        CoefficientModule M = CoefficientModule::skew(k + 1, 0);
        IntMatrix E = differential_matrix(1, k, 2, M, cache);
        HomBasis dom = hom_basis(1, k, 1, M);
        HomBasis cod = hom_basis(1, k, 2, M);
        std::vector<int> rows_hi, cols_lo;
        int idx = 0;
        for (auto& [mu, tabs] : cod.blocks) {
            for (size_t j = 0; j < tabs.size(); ++j, ++idx)
                if (mu.parts.front() >= 2)
                    rows_hi.push_back(idx);
        }
        idx = 0;
        for (auto& [mu, tabs] : dom.blocks) {
            for (size_t j = 0; j < tabs.size(); ++j, ++idx)
                if (mu.parts.front() == 1)
                    cols_lo.push_back(idx);
        }
        IntMatrix B = E.submatrix(rows_hi, cols_lo);
        bool ok = B.rows() == k - 1 && B.cols() == k - 1;
        for (int i = 0; ok && i < B.rows(); ++i)
            for (int j = 0; ok && j < B.cols(); ++j) {
                Int want = i == j ? (i == 0 ? 3 : 2) : 0;
                ok = B.at(i, j) == want;
            }
        if (!ok)
            fail("upper-right block at b=" + std::to_string(k) + " is not diag(3,2,...,2)");
    }

    return res;
}

SuiteResult suite_complex(int amax, int bmax, int jobs, const MatrixCache* cache) {
    std::vector<std::function<std::string()>> tasks;
    for (int a = 1; a <= amax; ++a)
        for (int b = 2; b <= bmax; ++b)
            for (int k = 0; k <= b; ++k)
                for (int skew = 0; skew <= 1; ++skew)
                    tasks.push_back([=]() -> std::string {
                        CoefficientModule M =
                            skew ? CoefficientModule::skew(a + k, b - k)
                                 : CoefficientModule::weyl(Hook{a + k, b - k});
                        CheckReport rep = verify_complex(a, b, M, b, cache);
                        if (!rep.ok)
                            return cell_name(a, b, k) + (skew ? " skew " : " weyl ") + rep.detail;
                        if (k >= 1) {
                            // rational exactness in positive degrees
                            std::vector<int> dim(b + 2, 0), rank(b + 2, 0);
                            for (int i = 1; i <= b; ++i) {
                                IntMatrix E = differential_matrix(a, b, i, M, cache);
                                dim[i] = E.rows();
                                rank[i] = smith_normal_form(E).rank;
                            }
                            for (int i = 1; i <= b; ++i)
                                if (rank[i] + rank[i + 1] != dim[i])
                                    return cell_name(a, b, k) + (skew ? " skew" : " weyl") +
                                           ": rational complex not exact at degree " +
                                           std::to_string(i);
                        }
                        return {};
                    });
    return run_cells(tasks, jobs);
}

SuiteResult suite_blocks(int amax, int bmin, int bmax, int jobs, const MatrixCache* cache) {
    std::vector<std::function<std::string()>> tasks;
    for (int a = 1; a <= amax; ++a)
        for (int b = bmin; b <= bmax; ++b)
            for (int k = 0; k <= b; ++k) {
                tasks.push_back([=]() -> std::string {
                    CheckReport rep = block_check_skew(a, b, 2, k, cache);
                    if (!rep.ok)
                        return cell_name(a, b, k) + " skew refinement: " + rep.detail;
                    return {};
                });
                for (int skew = 0; skew <= 1; ++skew)
                    tasks.push_back([=]() -> std::string {
                        CoefficientModule M =
                            skew ? CoefficientModule::skew(a + k, b - k)
                                 : CoefficientModule::weyl(Hook{a + k, b - k});
                        CheckReport rep = block_check_split(a, b, 2, M, cache);
                        if (!rep.ok)
                            return cell_name(a, b, k) + (skew ? " skew" : " weyl") +
                                   " split: " + rep.detail;
                        return {};
                    });
            }
    return run_cells(tasks, jobs);
}

SuiteResult suite_generators(int amax, int bmax, int jobs, const MatrixCache* cache) {
    std::vector<std::function<std::string()>> tasks;
    for (int a = 1; a <= amax; ++a)
        for (int b = 3; b <= bmax; ++b) {
            tasks.push_back([=]() -> std::string {
                CheckReport rep = check_generators(a, b, cache);
                return rep.ok ? std::string{} : rep.detail;
            });
            tasks.push_back([=]() -> std::string {
                CheckReport rep = phi_check(a, b, cache);
                return rep.ok ? std::string{} : rep.detail;
            });
        }
    return run_cells(tasks, jobs);
}

SuiteResult suite_relations(int amax, int bmax, int jobs, const MatrixCache* cache) {
    std::vector<std::function<std::string()>> tasks;
    for (int a = 1; a <= amax; ++a)
        for (int b = 3; b <= bmax; ++b)
            tasks.push_back([=]() -> std::string {
                CheckReport rep = relations_check(a, b, cache);
                return rep.ok ? std::string{} : rep.detail;
            });
    return run_cells(tasks, jobs);
}

SuiteResult suite_first_ext(int amax, int bmax, int jobs, const MatrixCache* cache) {
    std::vector<std::function<std::string()>> tasks;
    // k = 1 is excluded: there Ext^1 with Delta(h(2)) surjects onto
    // Ext^2 with Delta(h(2)) = Z_{(a+b)/gcd(2,a+b)}, so the first group
    // carries odd torsion and neither two-out-of-three pattern applies
    for (int a = 1; a <= amax; ++a)
        for (int b = 3; b <= bmax; ++b)
            for (int k = 2; k < b; ++k)
                tasks.push_back([=]() -> std::string {
                    CheckReport rep = first_ext_pattern_check(a, b, k, cache);
                    return rep.ok ? std::string{} : rep.detail;
                });
    return run_cells(tasks, jobs);
}

SuiteResult suite_modular(int amax, int bmax, const std::vector<long>& primes, int jobs,
                          const MatrixCache* cache) {
    std::vector<std::function<std::string()>> tasks;
    for (long p : primes)
        for (int a = 1; a <= amax; ++a)
            for (int b = 2; b <= bmax; ++b)
                for (int k = 1; k <= b; ++k)
                    tasks.push_back([=]() -> std::string {
                        int got = modular_ext1_dim(a, b, k, p, cache);
                        int want = expected_modular_ext1(a, b, k, p);
                        if (got == want)
                            return {};
                        return cell_name(a, b, k) + " p=" + std::to_string(p) +
                               ": modular Ext^1 dimension is " + std::to_string(got) +
                               ", expected " + std::to_string(want);
                    });
    return run_cells(tasks, jobs);
}

} // namespace weylext
