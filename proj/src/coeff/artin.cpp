#include "coeff/artin.hpp"

#include "corecx/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace coeff {

namespace {

int sgn(int k) { return k % 2 == 0 ? 1 : -1; }

} // namespace

std::vector<Rational> ArtinAlgebra::unit() const { return basis_vector(0); }

std::vector<Rational> ArtinAlgebra::basis_vector(int i) const {
    std::vector<Rational> v(size_t(dim()), Rational(0));
    v[size_t(i)] = 1;
    return v;
}

std::vector<Rational> ArtinAlgebra::product(const std::vector<Rational>& x,
                                            const std::vector<Rational>& y) const {
    int n = dim();
    std::vector<Rational> k(size_t(n) * size_t(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        if (x[size_t(i)] == 0) continue;
        for (int j = 0; j < n; ++j) k[size_t(i) * n + j] = x[size_t(i)] * y[size_t(j)];
    }
    return mult * k;
}

Mat ArtinAlgebra::left_mult(const std::vector<Rational>& x) const {
    int n = dim();
    Mat m(n, n);
    for (int j = 0; j < n; ++j) {
        auto col = product(x, basis_vector(j));
        for (int i = 0; i < n; ++i) m.at(i, j) = col[size_t(i)];
    }
    return m;
}

Mat ArtinAlgebra::ideal_inclusion() const {
    Mat m(dim(), int(maximal_ideal.size()));
    for (int j = 0; j < int(maximal_ideal.size()); ++j) m.at(maximal_ideal[size_t(j)], j) = 1;
    return m;
}

bool ArtinAlgebra::is_classical() const {
    return std::all_of(degrees.begin(), degrees.end(), [](int t) { return t == 0; }) && d.is_zero();
}

ArtinCheck check_artin(const ArtinAlgebra& a) {
    auto fail = [](std::string s) { return ArtinCheck{false, std::move(s)}; };
    int n = a.dim();
    if (n < 1) return fail("ring needs at least the unit");
    if (int(a.names.size()) != n) return fail("names/degrees size mismatch");
    if (std::set<std::string>(a.names.begin(), a.names.end()).size() != size_t(n))
        return fail("basis names are not distinct");
    if (a.mult.rows() != n || a.mult.cols() != n * n)
        return fail("mult table must be dim x dim^2");
    if (a.d.rows() != n || a.d.cols() != n) return fail("differential must be dim x dim");
    if (a.degrees[0] != 0) return fail("unit must sit in degree 0");
    for (int t : a.degrees)
        if (t > 0) return fail("generators must sit in non-positive degrees");
    std::vector<int> expect;
    for (int i = 1; i < n; ++i) expect.push_back(i);
    if (a.maximal_ideal != expect)
        return fail("maximal ideal basis must be every non-unit basis element");

    auto prod = [&](int i, int j) { return a.product(a.basis_vector(i), a.basis_vector(j)); };

    for (int j = 0; j < n; ++j) {
        if (prod(0, j) != a.basis_vector(j) || prod(j, 0) != a.basis_vector(j))
            return fail("unit law fails at " + a.names[size_t(j)]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto p = prod(i, j);
            for (int k = 0; k < n; ++k)
                if (p[size_t(k)] != 0 && a.degrees[size_t(k)] != a.degrees[size_t(i)] + a.degrees[size_t(j)])
                    return fail("product " + a.names[size_t(i)] + "*" + a.names[size_t(j)] +
                                " is not homogeneous of the right degree");
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            auto lhs = prod(i, j);
            auto rhs = prod(j, i);
            int s = sgn(a.degrees[size_t(i)] * a.degrees[size_t(j)]);
            for (int k = 0; k < n; ++k)
                if (lhs[size_t(k)] != Rational(s) * rhs[size_t(k)])
                    return fail("graded commutativity fails at (" + a.names[size_t(i)] + ", " +
                                a.names[size_t(j)] + ")");
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                auto lhs = a.product(prod(i, j), a.basis_vector(k));
                auto rhs = a.product(a.basis_vector(i), prod(j, k));
                if (lhs != rhs)
                    return fail("associativity fails at (" + a.names[size_t(i)] + ", " +
                                a.names[size_t(j)] + ", " + a.names[size_t(k)] + ")");
            }

    for (int j = 0; j < n; ++j) {
        auto dj = a.d * a.basis_vector(j);
        for (int i = 0; i < n; ++i)
            if (dj[size_t(i)] != 0 && a.degrees[size_t(i)] != a.degrees[size_t(j)] + 1)
                return fail("d(" + a.names[size_t(j)] + ") is not homogeneous of degree +1");
    }
    if (!(a.d * a.basis_vector(0) == std::vector<Rational>(size_t(n), Rational(0))))
        return fail("d(1) must vanish");
    if (!(a.d * a.d).is_zero()) return fail("d^2 must vanish");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto lhs = a.d * prod(i, j);
            auto di = a.d * a.basis_vector(i);
            auto dj = a.d * a.basis_vector(j);
            auto rhs = a.product(di, a.basis_vector(j));
            auto second = a.product(a.basis_vector(i), dj);
            int s = sgn(a.degrees[size_t(i)]);
            for (int k = 0; k < n; ++k) rhs[size_t(k)] = rhs[size_t(k)] + Rational(s) * second[size_t(k)];
            if (lhs != rhs)
                return fail("Leibniz fails at (" + a.names[size_t(i)] + ", " + a.names[size_t(j)] + ")");
        }

    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < n; ++i)
            if (prod(i, j)[0] != 0)
                return fail("ideal escapes: " + a.names[size_t(i)] + "*" + a.names[size_t(j)] +
                            " has a unit component");
        if ((a.d * a.basis_vector(j))[0] != 0)
            return fail("ideal escapes: d(" + a.names[size_t(j)] + ") has a unit component");
    }

    Mat cur = a.ideal_inclusion();
    for (int step = 0; step <= n; ++step) {
        if (cur.cols() == 0) return {};
        Mat next(n, 0);
        for (int i : a.maximal_ideal)
            for (int j = 0; j < cur.cols(); ++j) {
                auto p = a.product(a.basis_vector(i), cur.col_vec(j));
                next = hstack(next, Mat::column(p));
            }
        next = corecx::column_space_basis(next);
        if (next.cols() >= cur.cols() && cur.cols() > 0)
            return fail("maximal ideal is not nilpotent: ideal powers stop shrinking");
        cur = next;
    }
    return fail("maximal ideal is not nilpotent within dim steps");
}

ArtinAlgebra make_artin(std::vector<std::string> names, std::vector<int> degrees, Mat mult, Mat d,
                        std::vector<int> maximal_ideal) {
    ArtinAlgebra a{std::move(names), std::move(degrees), std::move(mult), std::move(d),
                   std::move(maximal_ideal)};
    auto c = check_artin(a);
    if (!c.ok) throw std::invalid_argument("not an Artinian algebra: " + c.detail);
    return a;
}

namespace {

// mult table with unit laws filled in and everything else zero.
Mat unital_mult(int n) {
    Mat m(n, n * n);
    for (int j = 0; j < n; ++j) {
        m.at(j, 0 * n + j) = 1;
        if (j > 0) m.at(j, j * n + 0) = 1;
    }
    return m;
}

std::vector<int> all_but_unit(int n) {
    std::vector<int> v;
    for (int i = 1; i < n; ++i) v.push_back(i);
    return v;
}

} // namespace

ArtinAlgebra dual_numbers() {
    return make_artin({"1", "eps"}, {0, 0}, unital_mult(2), Mat(2, 2), {1});
}

ArtinAlgebra square_zero_shift(int n) {
    if (n < 0) throw std::invalid_argument("square_zero_shift needs n >= 0");
    if (n == 0) return dual_numbers();
    return make_artin({"1", "t"}, {0, -n}, unital_mult(2), Mat(2, 2), {1});
}

ArtinAlgebra cone_coefficient(int n) {
    if (n < 1) throw std::invalid_argument("cone_coefficient needs n >= 1");
    Mat d(3, 3);
    d.at(2, 1) = 1;
    return make_artin({"1", "t", "dt"}, {0, -n, -n + 1}, unital_mult(3), d, {1, 2});
}

ArtinAlgebra truncated_polynomial(int s) {
    if (s < 2) throw std::invalid_argument("truncated_polynomial needs s >= 2");
    std::vector<std::string> names{"1", "t"};
    for (int j = 2; j < s; ++j) names.push_back("t" + std::to_string(j));
    Mat m(s, s * s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (i + j < s) m.at(i + j, i * s + j) = 1;
    return make_artin(std::move(names), std::vector<int>(size_t(s), 0), std::move(m), Mat(s, s),
                      all_but_unit(s));
}

IdealFiltration ideal_filtration(const ArtinAlgebra& a) {
    IdealFiltration f;
    Mat cur = a.ideal_inclusion();
    for (int step = 0; step <= a.dim(); ++step) {
        f.powers.push_back(cur);
        if (cur.cols() == 0) return f;
        Mat next(a.dim(), 0);
        for (int i : a.maximal_ideal)
            for (int j = 0; j < cur.cols(); ++j)
                next = hstack(next, Mat::column(a.product(a.basis_vector(i), cur.col_vec(j))));
        next = corecx::column_space_basis(next);
        if (next.cols() >= cur.cols())
            throw std::invalid_argument("ideal filtration does not shrink; ring is not Artinian local");
        cur = next;
    }
    throw std::invalid_argument("ideal filtration fails to reach zero within dim steps");
}

corecx::GradedComplex ideal_complex(const ArtinAlgebra& a) {
    std::map<int, std::vector<int>> by_degree;
    for (int i : a.maximal_ideal) by_degree[a.degrees[size_t(i)]].push_back(i);
    if (by_degree.empty()) return corecx::GradedComplex(0, {0}, {});
    int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;
    std::vector<int> dims;
    for (int t = lo; t <= hi; ++t) dims.push_back(int(by_degree[t].size()));
    std::map<int, Mat> d;
    for (int t = lo; t < hi; ++t) {
        const auto& src = by_degree[t];
        const auto& tgt = by_degree[t + 1];
        Mat block(int(tgt.size()), int(src.size()));
        for (int c = 0; c < int(src.size()); ++c)
            for (int r = 0; r < int(tgt.size()); ++r)
                block.at(r, c) = a.d.at(tgt[size_t(r)], src[size_t(c)]);
        d[t] = block;
    }
    return corecx::GradedComplex(lo, dims, d);
}

MorphismCheck check_artin_morphism(const ArtinAlgebra& src, const ArtinAlgebra& tgt,
                                   const ArtinMorphism& f) {
    auto fail = [](std::string s) { return MorphismCheck{false, std::move(s)}; };
    const Mat& m = f.matrix;
    if (m.rows() != tgt.dim() || m.cols() != src.dim())
        return fail("morphism matrix must be target dim x source dim");
    if (m * src.unit() != tgt.unit()) return fail("morphism is not unital");
    for (int j = 0; j < src.dim(); ++j) {
        auto fj = m * src.basis_vector(j);
        for (int i = 0; i < tgt.dim(); ++i)
            if (fj[size_t(i)] != 0 && tgt.degrees[size_t(i)] != src.degrees[size_t(j)])
                return fail("morphism does not preserve degree at " + src.names[size_t(j)]);
    }
    if (!(m * src.d == tgt.d * m)) return fail("morphism does not commute with d");
    for (int i = 0; i < src.dim(); ++i)
        for (int j = 0; j < src.dim(); ++j) {
            auto lhs = m * src.product(src.basis_vector(i), src.basis_vector(j));
            auto rhs = tgt.product(m * src.basis_vector(i), m * src.basis_vector(j));
            if (lhs != rhs)
                return fail("morphism is not multiplicative at (" + src.names[size_t(i)] + ", " +
                            src.names[size_t(j)] + ")");
        }
    for (int j : src.maximal_ideal)
        if ((m * src.basis_vector(j))[0] != 0)
            return fail("morphism does not carry the maximal ideal into the maximal ideal");
    return {};
}

QuotientRing quotient_ring(const ArtinAlgebra& a, const Mat& ideal) {
    int n = a.dim();
    if (!ideal.empty() && ideal.rows() != n)
        throw std::invalid_argument("quotient ideal lives in the wrong space");
    Mat w = corecx::column_space_basis(ideal.empty() ? Mat(n, 0) : ideal);
    if (w.cols() == 0)
        return {a, ArtinMorphism{Mat::identity(n)}, Mat::identity(n)};

    if (!corecx::span_contains(a.ideal_inclusion(), w))
        throw std::invalid_argument("quotient ideal must sit inside the maximal ideal");
    std::set<int> degs(a.degrees.begin(), a.degrees.end());
    int graded_total = 0;
    for (int t : degs) {
        Mat coord(n, 0);
        for (int i = 0; i < n; ++i)
            if (a.degrees[size_t(i)] == t) coord = hstack(coord, Mat::column(a.basis_vector(i)));
        graded_total += corecx::span_intersection(w, coord).cols();
    }
    if (graded_total != w.cols()) throw std::invalid_argument("quotient ideal is not graded");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < w.cols(); ++j)
            if (!corecx::in_span(w, a.product(a.basis_vector(i), w.col_vec(j))))
                throw std::invalid_argument("quotient ideal is not an ideal");
    if (!corecx::span_contains(w, a.d * w))
        throw std::invalid_argument("quotient ideal is not d-stable");

    Mat comp = corecx::extend_basis(w, Mat::identity(n));
    int q = comp.cols();
    // extend_basis picks coordinate vectors, so quotient generators keep
    // their names and degrees.
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int j = 0; j < q; ++j) {
        int idx = -1;
        for (int i = 0; i < n; ++i)
            if (comp.at(i, j) != 0) { idx = i; break; }
        names.push_back(a.names[size_t(idx)]);
        degrees.push_back(a.degrees[size_t(idx)]);
    }
    Mat p = hstack(comp, w);
    auto pinv = corecx::inverse(p);
    if (!pinv) throw std::invalid_argument("quotient complement is degenerate");
    Mat proj = pinv->submatrix(0, 0, q, n);

    Mat mult(q, q * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            auto col = proj * a.product(comp.col_vec(i), comp.col_vec(j));
            for (int k = 0; k < q; ++k) mult.at(k, i * q + j) = col[size_t(k)];
        }
    Mat d = proj * (a.d * comp);
    auto ring = make_artin(std::move(names), std::move(degrees), std::move(mult), std::move(d),
                           all_but_unit(q));
    return {std::move(ring), ArtinMorphism{std::move(proj)}, std::move(comp)};
}

std::vector<SmallExtensionStep> small_extension_tower(const ArtinAlgebra& a) {
    auto filt = ideal_filtration(a);
    int s = filt.nilpotency_index();
    int n = a.dim();

    std::set<int> degs(a.degrees.begin(), a.degrees.end());
    auto coord_of_degree = [&](int t) {
        Mat coord(n, 0);
        for (int i = 0; i < n; ++i)
            if (a.degrees[size_t(i)] == t) coord = hstack(coord, Mat::column(a.basis_vector(i)));
        return coord;
    };

    // Descending chain of d-stable graded ideals from m to 0, each rung
    // dropping a single graded piece of one m^i / m^{i+1}, lowest degree
    // first. Dropping low degrees first keeps every rung d-stable since d
    // raises degree.
    struct Rung {
        Mat ideal;
        int piece_degree; // degree of the piece separating it from the rung above
        int stratum;
    };
    std::vector<Rung> rungs{{filt.powers[0], 0, 0}};
    for (int i = 1; i < s; ++i) {
        const Mat& top = filt.powers[size_t(i - 1)];
        const Mat& nxt = filt.powers[size_t(i)];
        std::vector<int> present;
        std::map<int, Mat> piece;
        for (int t : degs) {
            Mat pt = corecx::span_intersection(top, coord_of_degree(t));
            Mat pn = corecx::span_intersection(nxt, coord_of_degree(t));
            if (pt.cols() > pn.cols()) {
                present.push_back(t);
                piece[t] = pt;
            }
        }
        for (int idx = 1; idx < int(present.size()); ++idx) {
            Mat j = nxt;
            for (int k = idx; k < int(present.size()); ++k)
                j = corecx::span_sum_basis(j, piece[present[size_t(k)]]);
            rungs.push_back({j, present[size_t(idx - 1)], i});
        }
        rungs.push_back({nxt, present.back(), i});
    }

    std::vector<QuotientRing> rings;
    for (const auto& r : rungs) rings.push_back(quotient_ring(a, r.ideal));

    std::vector<SmallExtensionStep> steps;
    for (int l = 1; l < int(rungs.size()); ++l) {
        SmallExtensionStep st;
        st.source = rings[size_t(l)].ring;
        st.quotient = rings[size_t(l - 1)].ring;
        st.projection = ArtinMorphism{rings[size_t(l - 1)].projection.matrix * rings[size_t(l)].section};
        st.kernel = corecx::column_space_basis(rings[size_t(l)].projection.matrix * rungs[size_t(l - 1)].ideal);
        st.kernel_degree = rungs[size_t(l)].piece_degree;
        st.stratum = rungs[size_t(l)].stratum;
        steps.push_back(std::move(st));
    }
    return steps;
}

ArtinMorphism cone_to_shift_projection(int n) {
    if (n < 1) throw std::invalid_argument("cone_to_shift_projection needs n >= 1");
    Mat m(2, 3);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    return {m};
}

} // namespace coeff
