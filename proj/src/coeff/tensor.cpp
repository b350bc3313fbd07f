#include "coeff/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace coeff {

namespace {

int sgn(int k) { return k % 2 == 0 ? 1 : -1; }

const std::vector<TensorSummand> no_summands;

} // namespace

const std::vector<TensorSummand>& TensorDgla::summands(int total_degree) const {
    auto it = layout.find(total_degree);
    return it == layout.end() ? no_summands : it->second;
}

int TensorDgla::index(int total_degree, int a_index, int r) const {
    for (const auto& s : summands(total_degree))
        if (s.a_index == a_index) {
            if (r < 0 || r >= s.dim) throw std::out_of_range("tensor summand index out of range");
            return s.offset + r;
        }
    throw std::out_of_range("tensor summand absent in this degree");
}

std::vector<Rational> TensorDgla::embed(int total_degree, int a_index,
                                        const std::vector<Rational>& x) const {
    std::vector<Rational> v(size_t(g.complex.dim(total_degree)), Rational(0));
    for (const auto& s : summands(total_degree))
        if (s.a_index == a_index) {
            if (int(x.size()) != s.dim) throw std::invalid_argument("tensor embed size mismatch");
            for (int r = 0; r < s.dim; ++r) v[size_t(s.offset + r)] = x[size_t(r)];
            return v;
        }
    throw std::out_of_range("tensor summand absent in this degree");
}

std::vector<Rational> TensorDgla::component(int total_degree, int a_index,
                                            const std::vector<Rational>& v) const {
    for (const auto& s : summands(total_degree))
        if (s.a_index == a_index) {
            std::vector<Rational> x(size_t(s.dim), Rational(0));
            for (int r = 0; r < s.dim; ++r) x[size_t(r)] = v[size_t(s.offset + r)];
            return x;
        }
    throw std::out_of_range("tensor summand absent in this degree");
}

TensorDgla tensor_nilpotent(const dgla::Dgla& g, const ArtinAlgebra& a) {
    TensorDgla t;
    if (a.maximal_ideal.empty() || g.complex.lo() > g.complex.hi()) {
        t.g = dgla::Dgla{corecx::GradedComplex(), {}};
        return t;
    }
    int min_deg = 0, max_deg = a.degrees[size_t(a.maximal_ideal[0])];
    for (int s : a.maximal_ideal) {
        min_deg = std::min(min_deg, a.degrees[size_t(s)]);
        max_deg = std::max(max_deg, a.degrees[size_t(s)]);
    }
    int lo = g.complex.lo() + min_deg;
    int hi = g.complex.hi() + max_deg;

    std::vector<int> dims;
    for (int deg = lo; deg <= hi; ++deg) {
        int off = 0;
        std::vector<TensorSummand> row;
        for (int s : a.maximal_ideal) {
            int gd = deg - a.degrees[size_t(s)];
            int d = g.complex.dim(gd);
            if (d == 0) continue;
            row.push_back({s, gd, off, d});
            off += d;
        }
        dims.push_back(off);
        if (!row.empty()) t.layout[deg] = std::move(row);
    }

    std::map<int, Mat> diff;
    for (int deg = lo; deg < hi; ++deg) {
        Mat block(dims[size_t(deg + 1 - lo)], dims[size_t(deg - lo)]);
        if (block.empty()) {
            diff[deg] = std::move(block);
            continue;
        }
        for (const auto& src : t.summands(deg)) {
            const Mat& dg = g.complex.d(src.g_degree);
            for (const auto& tgt : t.summands(deg + 1)) {
                if (tgt.a_index == src.a_index && tgt.g_degree == src.g_degree + 1) {
                    for (int r = 0; r < tgt.dim; ++r)
                        for (int c = 0; c < src.dim; ++c)
                            block.at(tgt.offset + r, src.offset + c) = dg.at(r, c);
                }
                if (tgt.g_degree == src.g_degree) {
                    const Rational& coef = a.d.at(tgt.a_index, src.a_index);
                    if (coef == 0) continue;
                    Rational signed_coef = Rational(sgn(src.g_degree)) * coef;
                    for (int r = 0; r < src.dim; ++r)
                        block.at(tgt.offset + r, src.offset + r) =
                            block.at(tgt.offset + r, src.offset + r) + signed_coef;
                }
            }
        }
        diff[deg] = std::move(block);
    }
    t.g.complex = corecx::GradedComplex(lo, dims, std::move(diff));

    for (int d1 = lo; d1 <= hi; ++d1)
        for (int d2 = lo; d2 <= hi; ++d2) {
            int dt = d1 + d2;
            if (dt < lo || dt > hi) continue;
            int n1 = t.g.complex.dim(d1), n2 = t.g.complex.dim(d2), nt = t.g.complex.dim(dt);
            if (n1 == 0 || n2 == 0 || nt == 0) continue;
            Mat block(nt, n1 * n2);
            bool nonzero = false;
            for (const auto& s1 : t.summands(d1))
                for (const auto& s2 : t.summands(d2)) {
                    const Mat& gb = g.bracket(s1.g_degree, s2.g_degree);
                    if (gb.is_zero()) continue;
                    auto prod = a.product(a.basis_vector(s1.a_index), a.basis_vector(s2.a_index));
                    int sign = sgn(a.degrees[size_t(s1.a_index)] * s2.g_degree);
                    for (const auto& tg : t.summands(dt)) {
                        if (tg.g_degree != s1.g_degree + s2.g_degree) continue;
                        const Rational& cw = prod[size_t(tg.a_index)];
                        if (cw == 0) continue;
                        Rational coef = Rational(sign) * cw;
                        for (int r = 0; r < tg.dim; ++r)
                            for (int p = 0; p < s1.dim; ++p)
                                for (int q = 0; q < s2.dim; ++q) {
                                    const Rational& v = gb.at(r, p * s2.dim + q);
                                    if (v == 0) continue;
                                    auto& cell =
                                        block.at(tg.offset + r, (s1.offset + p) * n2 + s2.offset + q);
                                    cell = cell + coef * v;
                                    nonzero = true;
                                }
                    }
                }
            if (nonzero) t.g.brackets[{d1, d2}] = std::move(block);
        }
    return t;
}

} // namespace coeff
