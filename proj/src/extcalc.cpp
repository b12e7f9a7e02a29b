#include "weylext/extcalc.hpp"

#include <numeric>
#include <stdexcept>

namespace weylext {

CoefficientModule coefficients_for(const ExtQuery& q) {
    if (q.a < 1 || q.b < 0 || q.k < 0 || q.k > q.b || q.degree < 0)
        throw std::invalid_argument("ext: need a >= 1, 0 <= k <= b, degree >= 0");
    if (q.skew)
        return CoefficientModule::skew(q.a + q.k, q.b - q.k);
    return CoefficientModule::weyl(Hook{q.a + q.k, q.b - q.k});
}

ExtResult ext(const ExtQuery& q, const MatrixCache* cache) {
    CoefficientModule M = coefficients_for(q);
    ExtResult res;
    if (q.degree == 0) {
        res.group.free_rank = hom_basis(q.a, q.b, 0, M).size();
        return res;
    }
    if (q.degree > q.b)
        return res; // resolution has length b
    IntMatrix E = differential_matrix(q.a, q.b, q.degree, M, cache);
    AbelianGroup coker = cokernel(E, E.rows());
    res.group.invariant_factors = std::move(coker.invariant_factors);

    if (q.skew && q.degree == 2 && q.b >= 3 && (q.k == 2 || q.k == 3)) {
        FreeVector gen = q.k == 3 ? build_Gamma(q.a, q.b) : build_gamma(q.a, q.b);
        HomBasis cod = hom_basis(q.a, q.b, 2, M);
        res.generator_order = coset_order(E, cod.column_of(gen));
    }
    return res;
}

AbelianGroup expected_ext2(int a, int b, int k) {
    const long long r = a + b;
    long long order = 1;
    if (k == 2)
        order = r / std::gcd<long long>(2, r);
    else if (k == 3)
        order = 3 / std::gcd<long long>(3, r);
    else if (k == 4)
        order = std::gcd<long long>(3, r);
    AbelianGroup g;
    if (order > 1)
        g.invariant_factors.push_back(order);
    return g;
}

namespace {

Tableau tab(std::vector<std::pair<int, int>> divided, std::vector<int> ext) {
    Tableau t;
    for (auto& [l, e] : divided)
        if (e > 0)
            t.d.factors.emplace_back(l, e);
    std::sort(t.d.factors.begin(), t.d.factors.end());
    std::sort(ext.begin(), ext.end());
    t.e.letters = std::move(ext);
    return t;
}

// Letters lo..hi with the listed ones removed.
std::vector<int> seq_excl(int lo, int hi, std::initializer_list<int> excl) {
    std::vector<int> out;
    for (int l = lo; l <= hi; ++l)
        if (std::find(excl.begin(), excl.end(), l) == excl.end())
            out.push_back(l);
    return out;
}

int sgn(int e) { return e % 2 == 0 ? 1 : -1; } // (-1)^e

// Degree-2 cochain elements over D_{a+3} (x) Λ^(b-3).
Tableau B_1j(int a, int b, int j) { return tab({{1, a + 2}, {j, 1}}, seq_excl(2, b - 1, {j})); }
Tableau B_i1(int a, int b, int i) { return tab({{1, a}, {i, 3}}, seq_excl(2, b - 1, {i})); }
Tableau B_ij(int a, int b, int i, int j) {
    return tab({{1, a - 1}, {i, 3}, {j, 1}}, seq_excl(1, b - 1, {i, j}));
}

// Degree-2 cochain elements over D_{a+2} (x) Λ^(b-2).
Tableau b_11(int a, int b) { return tab({{1, a + 2}}, seq_excl(2, b - 1, {})); }
Tableau b_j1(int a, int b, int j) { return tab({{1, a + 1}, {j, 1}}, seq_excl(1, b - 1, {j})); }
Tableau b_1i(int a, int b, int i) { return tab({{1, a}, {i, 2}}, seq_excl(2, b - 1, {})); }
Tableau b_ji(int a, int b, int i, int j) {
    if (j == i)
        return tab({{1, a - 1}, {i, 3}}, seq_excl(1, b - 1, {i}));
    return tab({{1, a - 1}, {i, 2}, {j, 1}}, seq_excl(1, b - 1, {j}));
}

} // namespace

FreeVector build_Gamma(int a, int b) {
    if (a < 1 || b < 3)
        throw std::invalid_argument("build_Gamma: need a >= 1, b >= 3");
    FreeVector G;
    const Int c = binomial(a + 2, 3);
    for (int j = 2; j <= b - 1; ++j)
        G.add(B_1j(a, b, j), c * sgn(j));
    for (int i = 2; i <= b - 1; ++i) {
        const int si = sgn(i - 1);
        G.add(B_i1(a, b, i), Int(a) * si);
        for (int j = 2; j <= i - 1; ++j)
            G.add(B_ij(a, b, i, j), Int(-sgn(j) * si));
        for (int j = i + 1; j <= b - 1; ++j)
            G.add(B_ij(a, b, i, j), Int(sgn(j) * si));
    }
    return G;
}

FreeVector build_gamma(int a, int b) {
    if (a < 1 || b < 2)
        throw std::invalid_argument("build_gamma: need a >= 1, b >= 2");
    FreeVector g;
    g.add(b_11(a, b), binomial(a + 2, 3));
    for (int i = 2; i <= b - 1; ++i)
        g.add(b_ji(a, b, i, i), sgn(i - 1));
    return g;
}

namespace {

struct Degree2Setup {
    CoefficientModule M;
    HomBasis cod;
    IntMatrix E;

    Degree2Setup(int a, int b, int k, const MatrixCache* cache)
        : M(CoefficientModule::skew(a + k, b - k)),
          cod(hom_basis(a, b, 2, M)),
          E(differential_matrix(a, b, 2, M, cache)) {}

    bool in_image(const FreeVector& v) const {
        return hermite_solve(E, cod.column_of(v)).has_value();
    }

    std::optional<Int> order(const FreeVector& v) const {
        return coset_order(E, cod.column_of(v));
    }
};

CheckReport expect_order_3(const Degree2Setup& s, const FreeVector& v, const std::string& name) {
    CheckReport rep;
    FreeVector triple;
    triple.add_scaled(v, 3);
    if (!s.in_image(triple)) {
        rep.ok = false;
        rep.detail = name + ": three times the cochain is not a coboundary";
        return rep;
    }
    if (s.in_image(v)) {
        rep.ok = false;
        rep.detail = name + ": the cochain itself is a coboundary";
        return rep;
    }
    auto ord = s.order(v);
    if (!ord || *ord != 3) {
        rep.ok = false;
        rep.detail = name + ": coset order is " + (ord ? ord->str() : "infinite") +
                     ", expected 3";
    }
    return rep;
}

} // namespace

CheckReport check_generators(int a, int b, const MatrixCache* cache) {
    if (a < 1 || b < 3)
        throw std::invalid_argument("check_generators: need a >= 1, b >= 3");
    Degree2Setup s3(a, b, 3, cache);
    const std::string gname = "Gamma(" + std::to_string(a) + "," + std::to_string(b) + ")";
    CheckReport rep;
    if (b == 3 && (a + b) % 3 == 0) {
        // at b = 3 the cochain sits over the fully shifted module, whose
        // degree-2 group is Z_{3/gcd(3,a+b)}; here that group is trivial,
        // so generating it means vanishing
        auto ord = s3.order(build_Gamma(a, b));
        if (!ord || *ord != 1) {
            rep.ok = false;
            rep.detail = gname + ": coset order is " + (ord ? ord->str() : "infinite") +
                         ", expected 1";
        }
    } else {
        rep = expect_order_3(s3, build_Gamma(a, b), gname);
    }
    if (!rep.ok)
        return rep;
    Degree2Setup s2(a, b, 2, cache);
    return expect_order_3(s2, build_gamma(a, b), "gamma(" + std::to_string(a) + "," +
                                                     std::to_string(b) + ")");
}

CheckReport phi_check(int a, int b, const MatrixCache* cache) {
    if (a < 1 || b < 3)
        throw std::invalid_argument("phi_check: need a >= 1, b >= 3");
    CheckReport rep;
    FreeVector Gamma = build_Gamma(a, b);
    FreeVector phi;
    for (auto& [t, c] : Gamma.terms)
        phi.add_scaled(lower_map(t), c);

    Degree2Setup s2(a, b, 2, cache);
    FreeVector diff = phi;
    diff.add_scaled(build_gamma(a, b), Int(-(a + b)));
    if (!s2.in_image(diff)) {
        rep.ok = false;
        rep.detail = "phi(Gamma) - (a+b)gamma is not a coboundary at (" + std::to_string(a) +
                     "," + std::to_string(b) + ")";
        return rep;
    }

    auto ord = s2.order(phi);
    const Int expected = (a + b) % 3 == 0 ? 1 : 3;
    if (!ord || *ord != expected) {
        rep.ok = false;
        rep.detail = "phi(Gamma) has coset order " + (ord ? ord->str() : "infinite") +
                     ", expected " + expected.str() + " at (" + std::to_string(a) + "," +
                     std::to_string(b) + ")";
    }
    return rep;
}

CheckReport relations_check(int a, int b, const MatrixCache* cache) {
    if (a < 1 || b < 3)
        throw std::invalid_argument("relations_check: need a >= 1, b >= 3");
    Degree2Setup s2(a, b, 2, cache);
    CheckReport rep;

    auto expect_member = [&](const FreeVector& v, const std::string& name) {
        if (!s2.in_image(v)) {
            rep.ok = false;
            rep.detail = name + " fails at (" + std::to_string(a) + "," + std::to_string(b) +
                         "): difference is not a coboundary";
            return false;
        }
        return true;
    };

    {
        // alternating sum of the b_j over j recovers (a+2) copies of b_1
        FreeVector v;
        for (int j = 2; j <= b - 1; ++j)
            v.add(b_j1(a, b, j), sgn(j));
        v.add(b_11(a, b), Int(-(a + 2)));
        if (!expect_member(v, "first-row relation"))
            return rep;
    }

    for (int i = 2; i <= b - 1; ++i) {
        // alternating sum across row i collapses to three times the diagonal
        FreeVector v;
        v.add(b_1i(a, b, i), Int(a) * sgn(i));
        for (int j = 2; j <= b - 1; ++j) {
            if (j == i)
                continue;
            v.add(b_ji(a, b, i, j), Int(sgn(i) * sgn(j - 1)));
        }
        v.add(b_ji(a, b, i, i), Int(-3));
        if (!expect_member(v, "row collapse at i=" + std::to_string(i)))
            return rep;
    }

    for (int i = 2; i <= b - 2; ++i) {
        // left-tail recursion between consecutive rows
        FreeVector v;
        v.add(b_1i(a, b, i + 1), Int(a));
        for (int j = 2; j <= i; ++j)
            v.add(b_ji(a, b, i + 1, j), Int(-sgn(j)));
        v.add(b_1i(a, b, i), Int(-a));
        for (int j = 2; j <= i - 1; ++j)
            v.add(b_ji(a, b, i, j), Int(sgn(j)));
        v.add(b_ji(a, b, i, i), Int(-3 * sgn(i + 1)));
        if (!expect_member(v, "left-tail recursion at i=" + std::to_string(i)))
            return rep;
    }

    for (int i = 2; i <= b - 2; ++i) {
        // right-tail recursion between consecutive rows
        FreeVector v;
        for (int j = i + 2; j <= b - 1; ++j)
            v.add(b_ji(a, b, i + 1, j), sgn(j - i));
        v.add(b_ji(a, b, i + 1, i + 1), Int(-3));
        for (int j = i + 1; j <= b - 1; ++j)
            v.add(b_ji(a, b, i, j), Int(-sgn(j - i)));
        if (!expect_member(v, "right-tail recursion at i=" + std::to_string(i)))
            return rep;
    }

    return rep;
}

CheckReport first_ext_pattern_check(int a, int b, int k, const MatrixCache* cache) {
    if (a < 1 || k < 1 || k >= b)
        throw std::invalid_argument("first_ext_pattern_check: need a >= 1, 1 <= k < b");
    const AbelianGroup z2{0, {2}};
    AbelianGroup g_up = ext({a, b, k + 1, 1, false}, cache).group;
    AbelianGroup g_skew = ext({a, b, k, 1, true}, cache).group;
    AbelianGroup g_dn = ext({a, b, k, 1, false}, cache).group;

    const bool alt_a = g_up == z2 && g_skew == z2 && g_dn.is_trivial();
    const bool alt_b = g_skew == z2 && g_dn == z2 && g_up.is_trivial();
    CheckReport rep;
    if (alt_a == alt_b) {
        rep.ok = false;
        rep.detail = "first-Ext pattern fails at (a,b,k)=(" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(k) + "): up=" + g_up.to_string() +
                     " skew=" + g_skew.to_string() + " down=" + g_dn.to_string();
    }
    return rep;
}

int modular_ext1_dim(int a, int b, int k, long p, const MatrixCache* cache) {
    if (k < 1)
        throw std::invalid_argument("modular_ext1_dim: need k >= 1");
    CoefficientModule M = coefficients_for({a, b, k, 1, false});

    auto count_p = [&](int degree) {
        int n = 0;
        for (const Int& d : ext({a, b, k, degree, false}, cache).group.invariant_factors)
            if (d % p == 0)
                ++n;
        return n;
    };
    const int torsion_route = count_p(1) + count_p(2);

    IntMatrix e1 = differential_matrix(a, b, 1, M, cache);
    IntMatrix e2 = differential_matrix(a, b, 2, M, cache);
    const int n1 = e1.rows();
    const int rank_route = n1 - rank_mod_p(e1, p) - rank_mod_p(e2, p);

    if (torsion_route != rank_route)
        throw std::runtime_error("modular_ext1_dim: torsion and rank routes disagree at (a,b,k,p)=(" +
                                 std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(k) + "," + std::to_string(p) + ")");
    return torsion_route;
}

int expected_modular_ext1(int a, int b, int k, long p) {
    const long r = a + b;
    long q = 0; // value whose prime divisors give dimension 1
    switch (k) {
    case 1:
        q = r;
        break;
    case 2:
        q = 2 * r / (std::gcd(2L, r) * std::gcd(2L, r));
        break;
    case 3:
        q = 6 / (std::gcd(2L, r + 1) * std::gcd(3L, r));
        break;
    case 4:
        q = 2 * std::gcd(3L, r) / std::gcd(2L, r);
        break;
    default:
        return (k >= 5 && p == 2 && (r + k) % 2 == 1) ? 1 : 0;
    }
    return q % p == 0 ? 1 : 0;
}

} // namespace weylext
