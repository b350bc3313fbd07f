#include "simpkit/simplicial.hpp"

#include <stdexcept>

namespace simpkit {

int ChainComplexNN::total_dim() const {
    int t = 0;
    for (int k : dims) t += k;
    return t;
}

GradedComplex ChainComplexNN::to_cochain() const {
    int n = levels();
    std::vector<int> cdims;
    std::map<int, Mat> d;
    for (int deg = -n; deg <= 0; ++deg) {
        cdims.push_back(dim(-deg));
        if (deg < 0) d[deg] = delta[size_t(-deg)];
    }
    return GradedComplex(-n, std::move(cdims), std::move(d));
}

ChainComplexNN make_chain_complex(std::vector<int> dims, std::vector<Mat> delta) {
    ChainComplexNN c{std::move(dims), std::move(delta)};
    if (c.delta.size() != c.dims.size())
        throw std::invalid_argument("chain complex needs one boundary slot per level");
    for (int n = 1; n <= c.levels(); ++n)
        if (c.d(n).rows() != c.dim(n - 1) || c.d(n).cols() != c.dim(n))
            throw std::invalid_argument("boundary shape mismatch at level " + std::to_string(n));
    for (int n = 2; n <= c.levels(); ++n)
        if (!(c.d(n - 1) * c.d(n)).is_zero())
            throw std::invalid_argument("boundary does not square to zero");
    return c;
}

Mat SimplicialVectorSpace::simplicial_operator(const std::vector<int>& theta, int n) const {
    int m = int(theta.size()) - 1;
    if (m < 0 || m > N || n < 0 || n > N) throw std::invalid_argument("operator outside truncation");
    for (int i = 0; i < m; ++i)
        if (theta[size_t(i)] > theta[size_t(i) + 1]) throw std::invalid_argument("operator not monotone");
    if (theta.front() < 0 || theta.back() > n) throw std::invalid_argument("operator out of range");
    // Epi-monic factorization: faces strike the values of [n] missing from
    // the image (largest first, so smaller values keep their positions),
    // then degeneracies repeat the positions j with theta(j) = theta(j+1).
    std::vector<bool> hit(size_t(n) + 1, false);
    for (int v : theta) hit[size_t(v)] = true;
    Mat op = Mat::identity(dim(n));
    int level = n;
    for (int v = n; v >= 0; --v)
        if (!hit[size_t(v)]) {
            op = d_face(level, v) * op;
            --level;
        }
    for (int j = 0; j < m; ++j)
        if (theta[size_t(j)] == theta[size_t(j) + 1]) {
            op = d_degen(level, j) * op;
            ++level;
        }
    return op;
}

SimplicialCheck check_simplicial(const SimplicialVectorSpace& s) {
    auto fail = [](std::string d) { return SimplicialCheck{false, std::move(d)}; };
    int N = s.N;
    if (int(s.dims.size()) != N + 1) return fail("dims size mismatch");
    if (int(s.face.size()) != N + 1 || int(s.degen.size()) != N + 1)
        return fail("face/degeneracy table size mismatch");
    for (int n = 1; n <= N; ++n) {
        if (int(s.face[size_t(n)].size()) != n + 1) return fail("face count at level " + std::to_string(n));
        for (int i = 0; i <= n; ++i) {
            const Mat& m = s.d_face(n, i);
            if (m.rows() != s.dim(n - 1) || m.cols() != s.dim(n))
                return fail("face shape at level " + std::to_string(n));
        }
    }
    for (int n = 0; n < N; ++n) {
        if (int(s.degen[size_t(n)].size()) != n + 1)
            return fail("degeneracy count at level " + std::to_string(n));
        for (int j = 0; j <= n; ++j) {
            const Mat& m = s.d_degen(n, j);
            if (m.rows() != s.dim(n + 1) || m.cols() != s.dim(n))
                return fail("degeneracy shape at level " + std::to_string(n));
        }
    }
    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (s.d_face(n - 1, i) * s.d_face(n, j) != s.d_face(n - 1, j - 1) * s.d_face(n, i))
                    return fail("face-face identity (" + std::to_string(i) + "," + std::to_string(j) +
                                ") at level " + std::to_string(n));
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (s.d_degen(n + 1, i) * s.d_degen(n, j) != s.d_degen(n + 1, j + 1) * s.d_degen(n, i))
                    return fail("degeneracy-degeneracy identity (" + std::to_string(i) + "," +
                                std::to_string(j) + ") at level " + std::to_string(n));
    // d_i s_j: shift, identity, identity, shift
    for (int n = 0; n + 1 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                Mat lhs = s.d_face(n + 1, i) * s.d_degen(n, j);
                Mat rhs;
                if (i == j || i == j + 1)
                    rhs = Mat::identity(s.dim(n));
                else if (i < j)
                    rhs = s.d_degen(n - 1, j - 1) * s.d_face(n, i);
                else
                    rhs = s.d_degen(n - 1, j) * s.d_face(n, i - 1);
                if (lhs != rhs)
                    return fail("face-degeneracy identity (" + std::to_string(i) + "," + std::to_string(j) +
                                ") at level " + std::to_string(n));
            }
    return {};
}

SimplicialVectorSpace tensor(const SimplicialVectorSpace& a, const SimplicialVectorSpace& b) {
    SimplicialVectorSpace t;
    t.N = std::min(a.N, b.N);
    t.dims.resize(size_t(t.N) + 1);
    t.face.resize(size_t(t.N) + 1);
    t.degen.resize(size_t(t.N) + 1);
    for (int n = 0; n <= t.N; ++n) t.dims[size_t(n)] = a.dim(n) * b.dim(n);
    for (int n = 1; n <= t.N; ++n)
        for (int i = 0; i <= n; ++i) t.face[size_t(n)].push_back(kron(a.d_face(n, i), b.d_face(n, i)));
    for (int n = 0; n < t.N; ++n)
        for (int j = 0; j <= n; ++j) t.degen[size_t(n)].push_back(kron(a.d_degen(n, j), b.d_degen(n, j)));
    return t;
}

Normalization normalize(const SimplicialVectorSpace& s) {
    SimplicialCheck chk = check_simplicial(s);
    if (!chk.ok) throw std::invalid_argument("simplicial identities fail: " + chk.detail);
    Normalization out;
    out.complex.dims.resize(size_t(s.N) + 1);
    out.complex.delta.resize(size_t(s.N) + 1);
    out.basis.resize(size_t(s.N) + 1);
    out.projection.resize(size_t(s.N) + 1);
    for (int n = 0; n <= s.N; ++n) {
        Mat stacked(0, s.dim(n));
        for (int i = 0; i < n; ++i) stacked = vstack(stacked, s.d_face(n, i));
        Mat ker = (n == 0) ? Mat::identity(s.dim(0)) : kernel_basis(stacked);
        Rational c = ((n * (n + 1) / 2) % 2 == 0) ? 1 : -1;
        out.basis[size_t(n)] = ker * c;
        out.complex.dims[size_t(n)] = ker.cols();
    }
    for (int n = 0; n <= s.N; ++n) {
        // left inverse of the inclusion whose kernel contains every
        // degeneracy image (level n splits as degenerate + normalized)
        Mat deg(s.dim(n), 0);
        for (int j = 0; j + 1 <= n; ++j) deg = hstack(deg, s.d_degen(n - 1, j));
        Mat degb = corecx::column_space_basis(deg);
        Mat known = hstack(degb, out.basis[size_t(n)]);
        Mat rest = corecx::extend_basis(known, Mat::identity(s.dim(n)));
        Mat change = hstack(hstack(degb, rest), out.basis[size_t(n)]);
        auto inv = corecx::inverse(change);
        if (!inv) throw std::logic_error("normalized part does not complement the degenerate part");
        out.projection[size_t(n)] =
            inv->submatrix(degb.cols() + rest.cols(), 0, out.basis[size_t(n)].cols(), s.dim(n));
    }
    for (int n = 1; n <= s.N; ++n) {
        Rational sign = (n % 2 == 0) ? 1 : -1;
        Mat delta_amb = s.d_face(n, n) * out.basis[size_t(n)] * sign;
        auto coords = corecx::solve_matrix(out.basis[size_t(n - 1)], delta_amb);
        if (!coords) throw std::logic_error("normalized boundary left the normalized subspace");
        out.complex.delta[size_t(n)] = *coords;
    }
    out.complex = make_chain_complex(out.complex.dims, out.complex.delta);
    return out;
}

int degenerate_dim(const SimplicialVectorSpace& s, int n) {
    if (n < 1) return 0;
    Mat deg(s.dim(n), 0);
    for (int j = 0; j + 1 <= n; ++j) deg = hstack(deg, s.d_degen(n - 1, j));
    return corecx::rank(deg);
}

SimplicialVectorSpace constant_simplicial(int dim, int N) {
    SimplicialVectorSpace s;
    s.N = N;
    s.dims.assign(size_t(N) + 1, dim);
    s.face.resize(size_t(N) + 1);
    s.degen.resize(size_t(N) + 1);
    for (int n = 1; n <= N; ++n) s.face[size_t(n)].assign(size_t(n) + 1, Mat::identity(dim));
    for (int n = 0; n < N; ++n) s.degen[size_t(n)].assign(size_t(n) + 1, Mat::identity(dim));
    return s;
}

} // namespace simpkit
