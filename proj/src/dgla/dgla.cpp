#include "dgla/dgla.hpp"

#include <stdexcept>
#include <string>

namespace dgla {

namespace {

int sgn(int k) { return k % 2 == 0 ? 1 : -1; }

std::vector<Rational> basis_vec(int dim, int i) {
    std::vector<Rational> v(size_t(dim), Rational(0));
    v[size_t(i)] = 1;
    return v;
}

std::vector<Rational> add(std::vector<Rational> a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
    return a;
}

std::vector<Rational> scale(std::vector<Rational> a, const Rational& c) {
    for (auto& x : a) x = x * c;
    return a;
}

bool is_zero(const std::vector<Rational>& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

} // namespace

Mat Dgla::bracket(int i, int j) const {
    auto it = brackets.find({i, j});
    int rows = complex.dim(i + j);
    int cols = complex.dim(i) * complex.dim(j);
    if (it == brackets.end()) return Mat(rows, cols);
    return it->second;
}

std::vector<Rational> Dgla::apply(int i, const std::vector<Rational>& x, int j,
                                  const std::vector<Rational>& y) const {
    int di = complex.dim(i), dj = complex.dim(j);
    std::vector<Rational> k(size_t(di) * size_t(dj), Rational(0));
    for (int p = 0; p < di; ++p) {
        if (x[size_t(p)] == 0) continue;
        for (int q = 0; q < dj; ++q) k[size_t(p) * dj + q] = x[size_t(p)] * y[size_t(q)];
    }
    return bracket(i, j) * k;
}

Mat Dgla::ad(int i, const std::vector<Rational>& x, int j) const {
    int dj = complex.dim(j);
    Mat m(complex.dim(i + j), dj);
    for (int q = 0; q < dj; ++q) {
        auto col = apply(i, x, j, basis_vec(dj, q));
        for (int r = 0; r < m.rows(); ++r) m.at(r, q) = col[size_t(r)];
    }
    return m;
}

DglaCheck check_dgla(const Dgla& g) {
    auto fail = [](std::string s) { return DglaCheck{false, std::move(s)}; };
    int lo = g.complex.lo(), hi = g.complex.hi();

    for (const auto& [key, mat] : g.brackets) {
        auto [i, j] = key;
        int rows = g.complex.dim(i + j), cols = g.complex.dim(i) * g.complex.dim(j);
        if (mat.rows() != rows || mat.cols() != cols)
            return fail("bracket block (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") has the wrong shape");
    }
    for (int n = lo; n < hi; ++n)
        if (!(g.complex.d(n + 1) * g.complex.d(n)).is_zero())
            return fail("d^2 does not vanish at degree " + std::to_string(n));

    auto wit = [](int i, int p, int j, int q) {
        return "(e" + std::to_string(p) + "^" + std::to_string(i) + ", e" + std::to_string(q) +
               "^" + std::to_string(j) + ")";
    };

    for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j)
            for (int p = 0; p < g.dim(i); ++p)
                for (int q = 0; q < g.dim(j); ++q) {
                    auto x = basis_vec(g.dim(i), p);
                    auto y = basis_vec(g.dim(j), q);
                    auto xy = g.apply(i, x, j, y);
                    if (i + j < lo || i + j > hi) {
                        if (!is_zero(xy))
                            return fail("bracket leaves the degree window at " + wit(i, p, j, q));
                        continue;
                    }
                    auto yx = g.apply(j, y, i, x);
                    if (xy != scale(yx, Rational(-sgn(i * j))))
                        return fail("graded antisymmetry fails at " + wit(i, p, j, q));
                    auto lhs = g.complex.d(i + j) * xy;
                    auto rhs = add(g.apply(i + 1, g.complex.d(i) * x, j, y),
                                   scale(g.apply(i, x, j + 1, g.complex.d(j) * y), Rational(sgn(i))));
                    if (lhs != rhs) return fail("Leibniz fails at " + wit(i, p, j, q));
                }

    for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j)
            for (int k = lo; k <= hi; ++k)
                for (int p = 0; p < g.dim(i); ++p)
                    for (int q = 0; q < g.dim(j); ++q)
                        for (int r = 0; r < g.dim(k); ++r) {
                            auto x = basis_vec(g.dim(i), p);
                            auto y = basis_vec(g.dim(j), q);
                            auto z = basis_vec(g.dim(k), r);
                            auto lhs = g.apply(i, x, j + k, g.apply(j, y, k, z));
                            auto rhs = add(g.apply(i + j, g.apply(i, x, j, y), k, z),
                                           scale(g.apply(j, y, i + k, g.apply(i, x, k, z)),
                                                 Rational(sgn(i * j))));
                            if (lhs != rhs)
                                return fail("graded Jacobi fails at (e" + std::to_string(p) + "^" +
                                            std::to_string(i) + ", e" + std::to_string(q) + "^" +
                                            std::to_string(j) + ", e" + std::to_string(r) + "^" +
                                            std::to_string(k) + ")");
                        }
    return {};
}

Dgla make_dgla(GradedComplex complex, std::map<std::pair<int, int>, Mat> brackets) {
    Dgla g{std::move(complex), std::move(brackets)};
    auto c = check_dgla(g);
    if (!c.ok) throw std::invalid_argument("not a dgla: " + c.detail);
    return g;
}

Dgla abelian_dgla(GradedComplex v) { return Dgla{std::move(v), {}}; }

Dgla end_dgla(const GradedComplex& v) {
    auto hc = corecx::hom_complex(v, v);
    Dgla g{hc.total(), {}};
    int lo = g.complex.lo(), hi = g.complex.hi();
    for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j) {
            if (i + j < lo || i + j > hi) continue;
            int di = g.complex.dim(i), dj = g.complex.dim(j);
            if (di == 0 || dj == 0 || g.complex.dim(i + j) == 0) continue;
            Mat block(g.complex.dim(i + j), di * dj);
            for (int p = 0; p < di; ++p)
                for (int q = 0; q < dj; ++q) {
                    auto fg = hc.compose(i, basis_vec(di, p), j, basis_vec(dj, q));
                    auto gf = hc.compose(j, basis_vec(dj, q), i, basis_vec(di, p));
                    auto col = add(fg, scale(gf, Rational(-sgn(i * j))));
                    for (int r = 0; r < block.rows(); ++r) block.at(r, p * dj + q) = col[size_t(r)];
                }
            if (!block.is_zero()) g.brackets[{i, j}] = std::move(block);
        }
    return g;
}

} // namespace dgla
