#include "simpkit/ez_aw.hpp"

#include <stdexcept>

namespace simpkit {

std::vector<Shuffle> shuffles(int p, int q) {
    std::vector<Shuffle> out;
    if (p < 0 || q < 0) return out;
    int n = p + q;
    std::vector<int> mu(size_t(p), 0);
    for (int k = 0; k < p; ++k) mu[size_t(k)] = k;
    while (true) {
        Shuffle sh;
        sh.mu = mu;
        std::vector<bool> in_mu(size_t(n), false);
        for (int x : mu) in_mu[size_t(x)] = true;
        for (int x = 0; x < n; ++x)
            if (!in_mu[size_t(x)]) sh.nu.push_back(x);
        int inversions = 0;
        for (int x : sh.mu)
            for (int y : sh.nu)
                if (x > y) ++inversions;
        sh.sign = (inversions % 2 == 0) ? 1 : -1;
        out.push_back(std::move(sh));
        if (p == 0) break;
        int k = p - 1;
        while (k >= 0 && mu[size_t(k)] == n - p + k) --k;
        if (k < 0) break;
        ++mu[size_t(k)];
        for (int l = k + 1; l < p; ++l) mu[size_t(l)] = mu[size_t(l) - 1] + 1;
    }
    return out;
}

namespace {

// s_{idx_k} ... s_{idx_1} starting at the given level, indices applied in order
Mat degeneracy_composite(const SimplicialVectorSpace& s, int level, const std::vector<int>& idx) {
    Mat m = Mat::identity(s.dim(level));
    for (int j : idx) {
        m = s.d_degen(level, j) * m;
        ++level;
    }
    return m;
}

// iterated top face: level n down to level p
Mat front_face(const SimplicialVectorSpace& s, int n, int p) {
    Mat m = Mat::identity(s.dim(n));
    for (int lvl = n; lvl > p; --lvl) m = s.d_face(lvl, lvl) * m;
    return m;
}

// iterated zeroth face: level n down to level q
Mat back_face(const SimplicialVectorSpace& s, int n, int q) {
    Mat m = Mat::identity(s.dim(n));
    for (int lvl = n; lvl > q; --lvl) m = s.d_face(lvl, 0) * m;
    return m;
}

} // namespace

Mat ez_map(const SimplicialVectorSpace& a, const SimplicialVectorSpace& b, int p, int q) {
    if (p < 0 || q < 0 || p + q > std::min(a.N, b.N))
        throw std::invalid_argument("shuffle degrees outside truncation");
    Normalization na = normalize(a);
    Normalization nb = normalize(b);
    Normalization nt = normalize(tensor(a, b));
    int n = p + q;
    Mat amb(a.dim(n) * b.dim(n), na.complex.dim(p) * nb.complex.dim(q));
    for (const Shuffle& sh : shuffles(p, q)) {
        Mat left = degeneracy_composite(a, p, sh.nu) * na.basis[size_t(p)];
        Mat right = degeneracy_composite(b, q, sh.mu) * nb.basis[size_t(q)];
        Mat term = kron(left, right);
        amb = (sh.sign > 0) ? amb + term : amb - term;
    }
    auto coords = corecx::solve_matrix(nt.basis[size_t(n)], amb);
    if (!coords) throw std::logic_error("shuffle image left the normalized subspace");
    return *coords;
}

Mat aw_map(const SimplicialVectorSpace& a, const SimplicialVectorSpace& b, int n) {
    if (n < 0 || n > std::min(a.N, b.N)) throw std::invalid_argument("level outside truncation");
    Normalization na = normalize(a);
    Normalization nb = normalize(b);
    Normalization nt = normalize(tensor(a, b));
    Mat out(0, nt.complex.dim(n));
    for (int p = 0; p <= n; ++p) {
        int q = n - p;
        Mat comp = kron(na.projection[size_t(p)] * front_face(a, n, p),
                        nb.projection[size_t(q)] * back_face(b, n, q)) *
                   nt.basis[size_t(n)];
        out = vstack(out, comp);
    }
    return out;
}

Mat ez_assembled(const SimplicialVectorSpace& a, const SimplicialVectorSpace& b, int n) {
    Normalization nt = normalize(tensor(a, b));
    Mat out(nt.complex.dim(n), 0);
    for (int p = 0; p <= n; ++p) out = hstack(out, ez_map(a, b, p, n - p));
    return out;
}

} // namespace simpkit
