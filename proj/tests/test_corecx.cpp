#include "doctest.h"
#include "support.hpp"

#include "corecx/complex.hpp"
#include "corecx/filtration.hpp"

using namespace corecx;
using testsupport::Rng;

namespace {
Rational R(long n, long d = 1) { return rat(n, d); }

GradedComplex point_complex(int deg) {
    return GradedComplex(deg, {1}, {});
}

GradedComplex two_term_acyclic() {
    return GradedComplex(0, {1, 1}, {{0, Mat{{R(1)}}}});
}

GradedComplex zero_d_121() {
    return GradedComplex(0, {1, 2, 1}, {});
}
} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_str(rat_parse("3/4")) == "3/4");
    CHECK(rat_str(rat_parse("-6/8")) == "-3/4");
    CHECK(rat_str(rat_parse("5")) == "5");
    CHECK(rat_parse("2/4") == R(1, 2));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
}

TEST_CASE("kernel_basis on the pinned examples") {
    CHECK(kernel_basis(Mat::identity(2)).cols() == 0);
    CHECK(spans_equal(kernel_basis(Mat(2, 2)), Mat::identity(2)));
    Mat row{{R(1), R(1)}};
    Mat k = kernel_basis(row);
    REQUIRE(k.cols() == 1);
    Mat expected{{R(1)}, {R(-1)}};
    CHECK(spans_equal(k, expected));
    CHECK((row * k).is_zero());
}

TEST_CASE("kernel dimension formula on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = testsupport::rand_int(rng, 0, 5), cols = testsupport::rand_int(rng, 0, 5);
        Mat m = testsupport::rand_mat(rng, rows, cols);
        Mat k = kernel_basis(m);
        CHECK(k.cols() == cols - rank(m));
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("solve and inverse") {
    Mat a{{R(2), R(1)}, {R(1), R(1)}};
    auto x = solve(a, {R(3), R(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == R(1));
    CHECK((*x)[1] == R(1));
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK((*inv * a) == Mat::identity(2));
    Mat sing{{R(1), R(1)}, {R(1), R(1)}};
    CHECK(!inverse(sing).has_value());
    CHECK(!solve(sing, {R(1), R(0)}).has_value());
}

TEST_CASE("span arithmetic") {
    Mat a{{R(1), R(0)}, {R(0), R(1)}, {R(0), R(0)}};
    Mat b{{R(1)}, {R(1)}, {R(0)}};
    CHECK(span_contains(a, b));
    CHECK(!span_contains(b, a));
    Mat c{{R(0)}, {R(0)}, {R(1)}};
    Mat inter = span_intersection(a, hstack(b, c));
    CHECK(inter.cols() == 1);
    CHECK(in_span(a, inter.col_vec(0)));
    Mat ext = extend_basis(b, Mat::identity(3));
    CHECK(ext.cols() == 2);
    CHECK(spans_equal(hstack(b, ext), Mat::identity(3)));
}

TEST_CASE("graded complex rejects d^2 != 0") {
    std::map<int, Mat> d;
    d[0] = Mat{{R(1)}};
    d[1] = Mat{{R(1)}};
    CHECK_THROWS_AS(GradedComplex(0, {1, 1, 1}, d), std::invalid_argument);
}

TEST_CASE("cohomology of pinned complexes") {
    GradedComplex pt = point_complex(0);
    CHECK(cohomology_dim(pt, 0) == 1);
    CHECK(cohomology_dim(pt, 1) == 0);
    CHECK(cohomology_dim(pt, -1) == 0);

    GradedComplex ac = two_term_acyclic();
    CHECK(cohomology_dim(ac, 0) == 0);
    CHECK(cohomology_dim(ac, 1) == 0);

    GradedComplex z = zero_d_121();
    CHECK(cohomology_dim(z, 0) == 1);
    CHECK(cohomology_dim(z, 1) == 2);
    CHECK(cohomology_dim(z, 2) == 1);
}

TEST_CASE("subquotient presentation invariants") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        GradedComplex v = testsupport::rand_complex(rng, {0, 3, 3});
        for (int n = v.lo(); n <= v.hi(); ++n) {
            SubquotientSpace h = cohomology(v, n);
            CHECK(h.dim() == cohomology_dim(v, n));
            CHECK((h.projection * h.sub).is_zero());
            CHECK(h.projection * h.reps == Mat::identity(h.dim()));
            CHECK(rank(h.projection) + h.sub.cols() == h.ambient_dim);
        }
    }
}

TEST_CASE("euler characteristic equals alternating sum of cohomology") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        GradedComplex v = testsupport::rand_complex(rng, {-1, 4, 3});
        int chi_h = 0;
        for (int n = v.lo(); n <= v.hi(); ++n)
            chi_h += (n % 2 == 0 ? 1 : -1) * cohomology_dim(v, n);
        CHECK(v.euler_characteristic() == chi_h);
    }
}

TEST_CASE("random complexes have the cohomology they were built with") {
    Rng rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        auto built = testsupport::rand_complex_known_h(rng, {0, 4, 3});
        for (auto [n, h] : built.h_dim) CHECK(cohomology_dim(built.complex, n) == h);
    }
}

TEST_CASE("shift convention") {
    GradedComplex v = zero_d_121();
    CHECK(shift(v, 0) == v);
    GradedComplex w = shift(v, -1);
    CHECK(w.lo() == 1);
    CHECK(w.hi() == 3);
    CHECK(w.dim(1) == 1);
    CHECK(w.dim(2) == 2);
    CHECK(w.dim(3) == 1);
    GradedComplex p = point_complex(1);
    CHECK(shift(p, -1).dim(2) == 1);
    Rng rng(15);
    GradedComplex r = testsupport::rand_complex(rng, {0, 3, 3});
    CHECK(shift(shift(r, 2), -2) == r);
}

TEST_CASE("hom complex dimensions on pinned examples") {
    GradedComplex pt = point_complex(0);
    HomComplex hpt = hom_complex(pt, pt);
    CHECK(hpt.total().dim(0) == 1);
    CHECK(hpt.total().dim(1) == 0);
    CHECK(hpt.total().dim(-1) == 0);

    GradedComplex v(0, {1, 1}, {});
    HomComplex h = hom_complex(v, v);
    CHECK(h.total().dim(-1) == 1);
    CHECK(h.total().dim(0) == 2);
    CHECK(h.total().dim(1) == 1);
}

TEST_CASE("hom complex differential squares to zero and detects chain maps") {
    Rng rng(16);
    for (int trial = 0; trial < 25; ++trial) {
        GradedComplex v = testsupport::rand_complex(rng, {0, 3, 2});
        GradedComplex w = testsupport::rand_complex(rng, {0, 3, 2});
        if (v.total_dim() + w.total_dim() > 8) continue;
        HomComplex h = hom_complex(v, w);
        // d^2 = 0 is asserted by the GradedComplex constructor; also check a
        // flattened random element explicitly.
        for (int n = h.total().lo(); n <= h.total().hi(); ++n) {
            int dn = h.total().dim(n);
            if (dn == 0) continue;
            std::vector<Rational> f(dn);
            for (auto& x : f) x = testsupport::rand_rat(rng);
            auto df = h.total().d(n) * f;
            auto ddf = h.total().d(n + 1) * df;
            CHECK(is_zero_vec(ddf));
            // D(f) = 0 iff the unflattened map is a chain map
            ComplexMap fm = h.unflatten(n, f);
            CHECK(fm.is_chain_map() == is_zero_vec(df));
        }
        // identity is a chain map and is killed by D
        ComplexMap idm = ComplexMap::identity(v);
        CHECK(idm.is_chain_map());
        HomComplex hv = hom_complex(v, v);
        CHECK(is_zero_vec(hv.total().d(0) * hv.flatten(idm)));
    }
}

TEST_CASE("flatten and unflatten are inverse, composition is correct") {
    Rng rng(17);
    GradedComplex v = testsupport::rand_complex(rng, {0, 3, 3});
    HomComplex h = hom_complex(v, v);
    for (int n = h.total().lo(); n <= h.total().hi(); ++n) {
        int dn = h.total().dim(n);
        std::vector<Rational> f(dn);
        for (auto& x : f) x = testsupport::rand_rat(rng);
        CHECK(h.flatten(h.unflatten(n, f)) == f);
    }
    std::vector<Rational> f(h.total().dim(0)), g(h.total().dim(1));
    for (auto& x : f) x = testsupport::rand_rat(rng);
    for (auto& x : g) x = testsupport::rand_rat(rng);
    ComplexMap fg = h.unflatten(0, f).compose(h.unflatten(1, g));
    CHECK(h.flatten(fg) == h.compose(0, f, 1, g));
}

TEST_CASE("induced map on cohomology of the identity is the identity") {
    Rng rng(18);
    GradedComplex v = testsupport::rand_complex(rng, {0, 3, 3});
    ComplexMap id = ComplexMap::identity(v);
    for (int n = v.lo(); n <= v.hi(); ++n)
        CHECK(induced_on_cohomology(id, n) == Mat::identity(cohomology_dim(v, n)));
}

TEST_CASE("filtration check on pinned examples") {
    GradedComplex v = zero_d_121();
    CHECK(filtration_check(trivial_filtration(v)).ok);

    // F^1 = degree-0 line of an acyclic two-term complex is not d-stable.
    GradedComplex ac = two_term_acyclic();
    std::map<int, std::map<int, Mat>> steps;
    steps[1][0] = Mat{{R(1)}};
    Filtration bad(ac, 1, steps);
    FiltrationCheck r = filtration_check(bad);
    CHECK(!r.ok);
    CHECK(r.kind == FiltrationCheck::Fail::d_stability);
    CHECK(r.p == 1);
    CHECK(r.degree == 0);

    // Rank-deficient basis is reported distinctly.
    std::map<int, std::map<int, Mat>> steps2;
    steps2[1][1] = Mat{{R(1), R(2)}, {R(2), R(4)}};
    Filtration defective(zero_d_121(), 1, steps2);
    CHECK(filtration_check(defective).kind == FiltrationCheck::Fail::rank_deficient);

    // Nesting violation: F^2 not inside F^1.
    std::map<int, std::map<int, Mat>> steps3;
    steps3[1][1] = Mat{{R(1)}, {R(0)}};
    steps3[2][1] = Mat{{R(0)}, {R(1)}};
    Filtration notnested(zero_d_121(), 1, steps3);
    CHECK(filtration_check(notnested).kind == FiltrationCheck::Fail::nesting);
}
