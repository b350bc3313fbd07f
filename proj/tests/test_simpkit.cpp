#include "doctest.h"
#include "support_simpkit.hpp"

#include "simpkit/affine.hpp"
#include "simpkit/dold_kan.hpp"
#include "simpkit/ez_aw.hpp"
#include "simpkit/simplicial.hpp"

using namespace simpkit;
using corecx::rat;
using testsupport::Rng;

namespace {

Rational R(long n, long d = 1) { return rat(n, d); }

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

ChainComplexNN two_term(const Rational& d) {
    return make_chain_complex({1, 1}, {Mat(), Mat{{d}}});
}

// all monotone maps [m] -> [n] as value lists
void monotone_maps(int m, int n, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(size_t(m) + 1, 0);
    while (true) {
        out.push_back(cur);
        int k = m;
        while (k >= 0 && cur[size_t(k)] == n) --k;
        if (k < 0) break;
        int v = ++cur[size_t(k)];
        for (int l = k + 1; l <= m; ++l) cur[size_t(l)] = v;
    }
}

ChainComplexNN truncate_levels(const ChainComplexNN& c, int N) {
    std::vector<int> dims;
    std::vector<Mat> delta;
    for (int n = 0; n <= N; ++n) {
        dims.push_back(c.dim(n));
        delta.push_back(n == 0 ? Mat() : c.d(n));
    }
    return make_chain_complex(std::move(dims), std::move(delta));
}

Mat direct_sum(const std::vector<Mat>& blocks) {
    int r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Mat m(r, c);
    int r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(r0 + i, c0 + j) = b.at(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

bool is_permutation_matrix(const Mat& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i) {
        int ones = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == R(1))
                ++ones;
            else if (m.at(i, j) != R(0))
                return false;
        }
        if (ones != 1) return false;
    }
    for (int j = 0; j < m.cols(); ++j) {
        int ones = 0;
        for (int i = 0; i < m.rows(); ++i)
            if (m.at(i, j) == R(1)) ++ones;
        if (ones != 1) return false;
    }
    return true;
}

} // namespace

TEST_CASE("chain complexes validate and reindex") {
    ChainComplexNN c = make_chain_complex({1, 2, 1}, {Mat(), Mat{{R(1), R(0)}}, Mat{{R(0)}, {R(3)}}});
    CHECK(c.total_dim() == 4);
    CHECK_THROWS(make_chain_complex({1, 1, 1}, {Mat(), Mat{{R(1)}}, Mat{{R(1)}}}));
    GradedComplex g = c.to_cochain();
    CHECK(g.lo() == -2);
    CHECK(g.hi() == 0);
    CHECK(g.dim(-2) == 1);
    CHECK(g.dim(-1) == 2);
    CHECK(g.dim(0) == 1);
    CHECK(g.d(-2) == c.d(2));
    CHECK(g.d(-1) == c.d(1));

    ChainComplexNN p = pad_levels(c, 4);
    CHECK(p.levels() == 4);
    CHECK(p.dim(3) == 0);
    CHECK(p.d(2) == c.d(2));
}

TEST_CASE("constant simplicial space normalizes to degree zero") {
    for (int dim : {1, 2}) {
        Normalization n = normalize(constant_simplicial(dim, 4));
        CHECK(n.complex.dim(0) == dim);
        for (int lvl = 1; lvl <= 4; ++lvl) CHECK(n.complex.dim(lvl) == 0);
    }
}

TEST_CASE("identity checker flags a broken face") {
    SimplicialVectorSpace s = denormalize(two_term(R(2)), 3);
    CHECK(check_simplicial(s).ok);
    s.face[2][1].at(0, 1) += R(1);
    CHECK_FALSE(check_simplicial(s).ok);
}

TEST_CASE("surjection tables carry the binomial combinatorics") {
    for (int n = 0; n <= 5; ++n)
        for (int p = 0; p <= n; ++p) {
            auto table = surjections(n, p);
            CHECK(long(table.size()) == binom(n, p));
            for (const auto& eta : table) {
                REQUIRE(int(eta.size()) == n + 1);
                CHECK(eta.front() == 0);
                CHECK(eta.back() == p);
                for (int j = 0; j < n; ++j) {
                    int step = eta[size_t(j) + 1] - eta[size_t(j)];
                    CHECK(step >= 0);
                    CHECK(step <= 1);
                }
            }
        }

    ChainComplexNN v = two_term(R(5));
    CHECK(dk_layout(v, 2).total == 3);
    CHECK(dk_layout(v, 3).total == 4);
    SimplicialVectorSpace s = denormalize(v, 4);
    for (int n = 0; n <= 4; ++n) CHECK(s.dim(n) == 1 + n);
}

TEST_CASE("degree zero complexes denormalize to constant spaces") {
    ChainComplexNN v = make_chain_complex({2}, {Mat()});
    SimplicialVectorSpace s = denormalize(v, 3);
    SimplicialVectorSpace c = constant_simplicial(2, 3);
    CHECK(s.dims == c.dims);
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i <= n; ++i) CHECK(s.d_face(n, i) == c.d_face(n, i));
    for (int n = 0; n < 3; ++n)
        for (int j = 0; j <= n; ++j) CHECK(s.d_degen(n, j) == c.d_degen(n, j));
}

TEST_CASE("denormalizations satisfy every simplicial identity") {
    CHECK(check_simplicial(denormalize(two_term(R(7)), 4)).ok);
    Rng rng(2024);
    for (int t = 0; t < 12; ++t) {
        ChainComplexNN v = testsupport::rand_chain_complex(rng, testsupport::rand_int(rng, 1, 4), 3);
        CHECK(check_simplicial(denormalize(v, 4)).ok);
    }
}

TEST_CASE("normalize inverts denormalize on the nose") {
    ChainComplexNN v11 = two_term(R(3));
    CHECK(normalize(denormalize(v11, 4)).complex == pad_levels(v11, 4));

    Rng rng(77);
    for (int t = 0; t < 25; ++t) {
        ChainComplexNN v = testsupport::rand_chain_complex(rng, testsupport::rand_int(rng, 1, 4), 3);
        Normalization n = normalize(denormalize(v, 4));
        CHECK(n.complex == pad_levels(v, 4));
    }
}

TEST_CASE("normalization splits off the degenerate part") {
    Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        ChainComplexNN v = testsupport::rand_chain_complex(rng, 3, 2);
        SimplicialVectorSpace s = testsupport::conjugated(rng, denormalize(v, 3));
        REQUIRE(check_simplicial(s).ok);
        Normalization n = normalize(s);
        for (int lvl = 0; lvl <= 3; ++lvl) {
            CHECK(n.complex.dim(lvl) == s.dim(lvl) - degenerate_dim(s, lvl));
            CHECK(n.projection[size_t(lvl)] * n.basis[size_t(lvl)] == Mat::identity(n.complex.dim(lvl)));
            if (lvl >= 1)
                for (int j = 0; j < lvl; ++j)
                    CHECK((n.projection[size_t(lvl)] * s.d_degen(lvl - 1, j)).is_zero());
        }
    }
}

TEST_CASE("simplicial operators follow the epi-monic summand rule") {
    Rng rng(404);
    ChainComplexNN v = testsupport::rand_chain_complex(rng, 3, 2);
    SimplicialVectorSpace s = denormalize(v, 3);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            std::vector<std::vector<int>> thetas;
            monotone_maps(m, n, thetas);
            for (const auto& theta : thetas)
                CHECK(s.simplicial_operator(theta, n) == dk_operator(v, theta, n));
        }
}

TEST_CASE("simplicial operators compose contravariantly") {
    Rng rng(405);
    SimplicialVectorSpace s = testsupport::conjugated(rng, denormalize(testsupport::rand_chain_complex(rng, 3, 2), 3));
    std::vector<std::vector<int>> outer, inner;
    monotone_maps(2, 3, outer); // theta: [2] -> [3]
    monotone_maps(1, 2, inner); // psi: [1] -> [2]
    for (const auto& theta : outer)
        for (const auto& psi : inner) {
            std::vector<int> comp;
            for (int x : psi) comp.push_back(theta[size_t(x)]);
            CHECK(s.simplicial_operator(comp, 3) ==
                  s.simplicial_operator(psi, 2) * s.simplicial_operator(theta, 3));
        }
}

TEST_CASE("morphism transport round trips through K and N") {
    Rng rng(555);
    for (int t = 0; t < 8; ++t) {
        ChainComplexNN v = testsupport::rand_chain_complex(rng, 3, 2);
        ChainComplexNN w = testsupport::rand_chain_complex(rng, 3, 2);
        ChainMapNN f = testsupport::rand_chain_map_nn(rng, v, w);
        REQUIRE(is_chain_map_nn(v, w, f));
        SimplicialMap kf = denormalize_map(v, w, f, 4);
        SimplicialVectorSpace kv = denormalize(v, 4), kw = denormalize(w, 4);
        CHECK(is_simplicial_map(kv, kw, kf));
        ChainMapNN back = normalize_map(normalize(kv), normalize(kw), kf);
        for (int n = 0; n <= 4; ++n) {
            if (n <= f.levels())
                CHECK(back.block(n) == f.block(n));
            else
                CHECK(back.block(n).is_zero());
        }
    }
}

TEST_CASE("shuffles enumerate with parity signs") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) CHECK(long(shuffles(p, q).size()) == binom(p + q, p));

    auto sh = shuffles(1, 1);
    REQUIRE(sh.size() == 2);
    CHECK(sh[0].mu == std::vector<int>{0});
    CHECK(sh[0].nu == std::vector<int>{1});
    CHECK(sh[0].sign == 1);
    CHECK(sh[1].mu == std::vector<int>{1});
    CHECK(sh[1].nu == std::vector<int>{0});
    CHECK(sh[1].sign == -1);

    for (const Shuffle& x : shuffles(3, 2)) {
        std::vector<bool> seen(5, false);
        for (int a : x.mu) seen[size_t(a)] = true;
        for (int a : x.nu) seen[size_t(a)] = true;
        for (bool b : seen) CHECK(b);
    }
}

TEST_CASE("the (1,1) shuffle map is the signed two-term sum") {
    ChainComplexNN v = two_term(R(2)), w = two_term(R(3));
    SimplicialVectorSpace a = denormalize(v, 2), b = denormalize(w, 2);
    Normalization na = normalize(a), nb = normalize(b), nt = normalize(tensor(a, b));
    Mat ez = ez_map(a, b, 1, 1);
    REQUIRE(ez.cols() == 1);
    // s_1 a (x) s_0 b - s_0 a (x) s_1 b, written out with the raw degeneracies
    Mat left = kron(a.d_degen(1, 1) * na.basis[1], b.d_degen(1, 0) * nb.basis[1]) -
               kron(a.d_degen(1, 0) * na.basis[1], b.d_degen(1, 1) * nb.basis[1]);
    CHECK(nt.basis[2] * ez == left);
}

TEST_CASE("zero-degree EZ and AW are identities") {
    Rng rng(12);
    ChainComplexNN v = testsupport::rand_chain_complex(rng, 2, 2);
    ChainComplexNN w = testsupport::rand_chain_complex(rng, 2, 2);
    SimplicialVectorSpace a = denormalize(v, 2), b = denormalize(w, 2);
    CHECK(ez_map(a, b, 0, 0) == Mat::identity(v.dim(0) * w.dim(0)));
    CHECK(aw_map(a, b, 0) == Mat::identity(v.dim(0) * w.dim(0)));
}

TEST_CASE("AW composed with EZ is the identity") {
    Rng rng(808);
    for (int t = 0; t < 3; ++t) {
        ChainComplexNN v = testsupport::rand_chain_complex(rng, 3, 1);
        ChainComplexNN w = testsupport::rand_chain_complex(rng, 3, 1);
        SimplicialVectorSpace a = denormalize(v, 4), b = denormalize(w, 4);
        Normalization na = normalize(a), nb = normalize(b);
        for (int n = 0; n <= 4; ++n) {
            int total = 0;
            for (int p = 0; p <= n; ++p) total += na.complex.dim(p) * nb.complex.dim(n - p);
            CHECK(aw_map(a, b, n) * ez_assembled(a, b, n) == Mat::identity(total));
        }
    }
    // also in conjugated coordinates, where the normalized bases are not standard
    SimplicialVectorSpace a = testsupport::conjugated(rng, denormalize(testsupport::rand_chain_complex(rng, 2, 2), 3));
    SimplicialVectorSpace b = testsupport::conjugated(rng, denormalize(testsupport::rand_chain_complex(rng, 2, 2), 3));
    Normalization na = normalize(a), nb = normalize(b);
    for (int n = 0; n <= 3; ++n) {
        int total = 0;
        for (int p = 0; p <= n; ++p) total += na.complex.dim(p) * nb.complex.dim(n - p);
        CHECK(aw_map(a, b, n) * ez_assembled(a, b, n) == Mat::identity(total));
    }
}

TEST_CASE("EZ and AW are chain maps against the tensor differential") {
    Rng rng(909);
    ChainComplexNN v = testsupport::rand_chain_complex(rng, 3, 1);
    ChainComplexNN w = testsupport::rand_chain_complex(rng, 2, 2);
    SimplicialVectorSpace a = denormalize(v, 4), b = denormalize(w, 4);
    Normalization na = normalize(a), nb = normalize(b), nt = normalize(tensor(a, b));
    ChainComplexNN prod = truncate_levels(chain_tensor(na.complex, nb.complex), 4);

    ChainMapNN ez, aw;
    for (int n = 0; n <= 4; ++n) {
        ez.blocks.push_back(ez_assembled(a, b, n));
        aw.blocks.push_back(aw_map(a, b, n));
    }
    ChainComplexNN ntc = nt.complex;
    CHECK(is_chain_map_nn(prod, ntc, ez));
    CHECK(is_chain_map_nn(ntc, prod, aw));
}

TEST_CASE("EZ after AW induces the identity on homology") {
    Rng rng(111);
    for (int t = 0; t < 2; ++t) {
        ChainComplexNN v = testsupport::rand_chain_complex(rng, 3, 1);
        ChainComplexNN w = testsupport::rand_chain_complex(rng, 2, 2);
        SimplicialVectorSpace a = denormalize(v, 3), b = denormalize(w, 3);
        Normalization nt = normalize(tensor(a, b));
        GradedComplex c = nt.complex.to_cochain();
        std::map<int, Mat> blocks;
        for (int n = 0; n <= 3; ++n) blocks[-n] = ez_assembled(a, b, n) * aw_map(a, b, n);
        corecx::ComplexMap f(c, c, 0, blocks);
        REQUIRE(f.is_chain_map());
        for (int n = 0; n <= 3; ++n) {
            Mat ind = corecx::induced_on_cohomology(f, -n);
            CHECK(ind == Mat::identity(ind.rows()));
        }
    }
}

TEST_CASE("EZ is natural in both arguments") {
    Rng rng(246);
    ChainComplexNN v = testsupport::rand_chain_complex(rng, 2, 2);
    ChainComplexNN v2 = testsupport::rand_chain_complex(rng, 2, 2);
    ChainComplexNN w = testsupport::rand_chain_complex(rng, 2, 2);
    ChainComplexNN w2 = testsupport::rand_chain_complex(rng, 2, 2);
    ChainMapNN f = testsupport::rand_chain_map_nn(rng, v, v2);
    ChainMapNN g = testsupport::rand_chain_map_nn(rng, w, w2);
    int N = 3;
    SimplicialVectorSpace a = denormalize(v, N), a2 = denormalize(v2, N);
    SimplicialVectorSpace b = denormalize(w, N), b2 = denormalize(w2, N);
    SimplicialMap kf = denormalize_map(v, v2, f, N), kg = denormalize_map(w, w2, g, N);

    SimplicialVectorSpace t = tensor(a, b), t2 = tensor(a2, b2);
    SimplicialMap kfg;
    for (int n = 0; n <= N; ++n) kfg.level.push_back(kron(kf.level[size_t(n)], kg.level[size_t(n)]));
    REQUIRE(is_simplicial_map(t, t2, kfg));
    Normalization nt = normalize(t), nt2 = normalize(t2);
    ChainMapNN nfg = normalize_map(nt, nt2, kfg);

    for (int n = 0; n <= N; ++n) {
        std::vector<Mat> diag;
        for (int p = 0; p <= n; ++p) {
            Mat fb = (p <= f.levels()) ? f.block(p) : Mat(0, 0);
            Mat gb = (n - p <= g.levels()) ? g.block(n - p) : Mat(0, 0);
            diag.push_back(kron(fb, gb));
        }
        CHECK(nfg.block(n) * ez_assembled(a, b, n) == ez_assembled(a2, b2, n) * direct_sum(diag));
    }
}

TEST_CASE("affine level-one faces differ exactly by the boundary") {
    AffineComplex a{two_term(R(5)), true};
    SimplicialAffineSpace s = affine_denormalize(a, 2);
    CHECK(s.lin.d_face(1, 1) == Mat{{R(1), R(5)}});
    CHECK(s.lin.d_face(1, 0) == Mat{{R(1), R(0)}});
    CHECK(s.lin.d_degen(0, 0) == Mat{{R(1)}, {R(0)}});
    CHECK(corecx::is_zero_vec(s.face_tr[1][0]));
    CHECK(corecx::is_zero_vec(s.face_tr[1][1]));
}

TEST_CASE("affine round trip recovers objects and translations") {
    Rng rng(613);
    for (int t = 0; t < 6; ++t) {
        AffineComplex a = testsupport::rand_affine_complex(rng, 3, 2);
        AffineComplex b = testsupport::rand_affine_complex(rng, 3, 2);
        SimplicialAffineSpace sa = affine_denormalize(a, 3), sb = affine_denormalize(b, 3);
        REQUIRE(check_affine_simplicial(sa).ok);

        AffineNormalization na = affine_normalize(sa), nb = affine_normalize(sb);
        CHECK(na.complex.v == pad_levels(a.v, 3));
        CHECK(na.complex.origin_free);

        AffineMap phi = testsupport::rand_affine_map(rng, a, b);
        REQUIRE(is_affine_chain_map(a, b, phi));
        SimplicialAffineMap kphi = affine_denormalize_map(a, b, phi, 3);
        CHECK(is_simplicial_affine_map(sa, sb, kphi));
        AffineMap back = affine_normalize_map(na, nb, kphi);
        CHECK(back.b == phi.b);
        for (int n = 0; n <= 3; ++n) {
            if (n <= phi.f.levels())
                CHECK(back.f.block(n) == phi.f.block(n));
            else
                CHECK(back.f.block(n).is_zero());
        }
    }
}

TEST_CASE("origin shifts change translations but not the normalization") {
    Rng rng(1999);
    AffineComplex a = testsupport::rand_affine_complex(rng, 3, 2);
    SimplicialAffineSpace s = affine_denormalize(a, 3);
    std::vector<std::vector<Rational>> o;
    for (int n = 0; n <= 3; ++n) o.push_back(testsupport::rand_vec(rng, s.lin.dim(n)));

    SimplicialAffineSpace sh = s;
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i <= n; ++i)
            sh.face_tr[size_t(n)][size_t(i)] =
                corecx::sub_vec(s.lin.d_face(n, i) * o[size_t(n)], o[size_t(n) - 1]);
    for (int n = 0; n < 3; ++n)
        for (int j = 0; j <= n; ++j)
            sh.degen_tr[size_t(n)][size_t(j)] =
                corecx::sub_vec(s.lin.d_degen(n, j) * o[size_t(n)], o[size_t(n) + 1]);
    REQUIRE(check_affine_simplicial(sh).ok);

    CHECK(affine_normalize(sh).complex == affine_normalize(s).complex);

    SimplicialAffineMap move;
    for (int n = 0; n <= 3; ++n) {
        move.lin.push_back(Mat::identity(s.lin.dim(n)));
        move.tr.push_back(o[size_t(n)]);
    }
    CHECK(is_simplicial_affine_map(sh, s, move));
}

TEST_CASE("affine tensor expands the three summands") {
    AffineComplex a{two_term(R(2)), true};
    AffineComplex b{make_chain_complex({1, 0}, {Mat(), Mat(1, 0)}), true};
    AffineComplex t = affine_tensor(a, b);
    CHECK(t.v.dim(0) == 3);
    CHECK(t.v.dim(1) == 1 + 0 + 1); // V_1, W_1, V_1 (x) W_0
    CHECK(t.origin_free);
}

TEST_CASE("the unit collapses through the unitors") {
    Rng rng(321);
    AffineComplex b = testsupport::rand_affine_complex(rng, 3, 2);
    LabeledComplex lb = label_atoms(b, "b");
    LabeledComplex lu = label_atoms(unit_affine(), "u");

    for (const LabeledComplex& prod : {affine_tensor(lu, lb), affine_tensor(lb, lu)}) {
        CHECK(prod.obj.v == b.v);
        AffineMap unitor = label_matcher(prod, lb);
        CHECK(is_affine_chain_map(prod.obj, b, unitor));
        for (const Mat& blk : unitor.f.blocks) CHECK(is_permutation_matrix(blk));
    }
}

TEST_CASE("morphism tensor acts blockwise and is functorial") {
    Rng rng(7777);
    AffineComplex a1 = testsupport::rand_affine_complex(rng, 2, 2);
    AffineComplex a2 = testsupport::rand_affine_complex(rng, 2, 2);
    AffineComplex a3 = testsupport::rand_affine_complex(rng, 2, 2);
    AffineComplex b1 = testsupport::rand_affine_complex(rng, 2, 2);
    AffineComplex b2 = testsupport::rand_affine_complex(rng, 2, 2);
    AffineComplex b3 = testsupport::rand_affine_complex(rng, 2, 2);
    AffineMap f1 = testsupport::rand_affine_map(rng, a1, a2), f2 = testsupport::rand_affine_map(rng, a2, a3);
    AffineMap g1 = testsupport::rand_affine_map(rng, b1, b2), g2 = testsupport::rand_affine_map(rng, b2, b3);

    AffineMap t1 = affine_tensor_map(f1, a1, a2, g1, b1, b2);
    AffineMap t2 = affine_tensor_map(f2, a2, a3, g2, b2, b3);
    CHECK(is_affine_chain_map(affine_tensor(a1, b1), affine_tensor(a2, b2), t1));

    AffineMap lhs = affine_compose(t2, t1);
    AffineMap rhs = affine_tensor_map(affine_compose(f2, f1), a1, a3, affine_compose(g2, g1), b1, b3);
    CHECK(lhs == rhs);

    // translation sits in the two linear summands only
    std::vector<Rational> expect = corecx::zero_vec(affine_tensor(a2, b2).v.dim(0));
    for (int k = 0; k < a2.v.dim(0); ++k) expect[size_t(k)] = f1.b[size_t(k)];
    for (int k = 0; k < b2.v.dim(0); ++k) expect[size_t(a2.v.dim(0)) + k] = g1.b[size_t(k)];
    CHECK(t1.b == expect);
}

TEST_CASE("associator, pentagon, and triangle cohere") {
    Rng rng(4242);
    LabeledComplex a = label_atoms(testsupport::rand_affine_complex(rng, 2, 1), "a");
    LabeledComplex b = label_atoms(testsupport::rand_affine_complex(rng, 2, 1), "b");
    LabeledComplex c = label_atoms(testsupport::rand_affine_complex(rng, 2, 1), "c");
    LabeledComplex d = label_atoms(testsupport::rand_affine_complex(rng, 2, 1), "d");

    LabeledComplex ab_c = affine_tensor(affine_tensor(a, b), c);
    LabeledComplex a_bc = affine_tensor(a, affine_tensor(b, c));
    AffineMap assoc = label_matcher(ab_c, a_bc);
    CHECK(is_affine_chain_map(ab_c.obj, a_bc.obj, assoc));
    for (const Mat& blk : assoc.f.blocks) CHECK(is_permutation_matrix(blk));

    LabeledComplex x1 = affine_tensor(ab_c, d);
    LabeledComplex x2 = affine_tensor(a_bc, d);
    LabeledComplex x3 = affine_tensor(a, affine_tensor(affine_tensor(b, c), d));
    LabeledComplex x4 = affine_tensor(a, affine_tensor(b, affine_tensor(c, d)));
    LabeledComplex x5 = affine_tensor(affine_tensor(a, b), affine_tensor(c, d));
    AffineMap path1 = affine_compose(label_matcher(x3, x4),
                                     affine_compose(label_matcher(x2, x3), label_matcher(x1, x2)));
    AffineMap path2 = affine_compose(label_matcher(x5, x4), label_matcher(x1, x5));
    CHECK(path1 == path2);
    CHECK(is_affine_chain_map(x1.obj, x4.obj, path1));

    LabeledComplex u = label_atoms(unit_affine(), "u");
    LabeledComplex au_b = affine_tensor(affine_tensor(a, u), b);
    LabeledComplex a_ub = affine_tensor(a, affine_tensor(u, b));
    LabeledComplex ab = affine_tensor(a, b);
    AffineMap tri1 = affine_compose(label_matcher(a_ub, ab), label_matcher(au_b, a_ub));
    AffineMap tri2 = label_matcher(au_b, ab);
    CHECK(tri1 == tri2);
}

TEST_CASE("levelwise tensor of simplicial spaces stays simplicial") {
    Rng rng(515);
    SimplicialVectorSpace a = testsupport::conjugated(rng, denormalize(testsupport::rand_chain_complex(rng, 2, 2), 3));
    SimplicialVectorSpace b = testsupport::conjugated(rng, denormalize(testsupport::rand_chain_complex(rng, 2, 2), 3));
    CHECK(check_simplicial(tensor(a, b)).ok);
}
