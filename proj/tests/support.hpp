#pragma once
// Deterministic random generators shared by the unit and acceptance tests.
// Complexes are built from elementary pieces (points and acyclic arrows)
// conjugated by random invertible matrices, so d^2 = 0 holds exactly and
// the cohomology dimensions are known by construction.

#include "corecx/complex.hpp"
#include "corecx/filtration.hpp"

#include <random>

namespace testsupport {

using corecx::GradedComplex;
using corecx::Mat;
using corecx::Rational;

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational rand_rat(Rng& rng, int spread = 3) {
    return corecx::rat(rand_int(rng, -spread, spread));
}

inline Mat rand_mat(Rng& rng, int rows, int cols, int spread = 3) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rand_rat(rng, spread);
    return m;
}

// Random invertible matrix: unitriangular lower times unitriangular upper
// with a permutation, so it is exactly invertible.
inline Mat rand_gl(Rng& rng, int n) {
    Mat l = Mat::identity(n), u = Mat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            l.at(i, j) = rand_rat(rng, 2);
            u.at(j, i) = rand_rat(rng, 2);
        }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Mat p(n, n);
    for (int i = 0; i < n; ++i) p.at(i, perm[i]) = 1;
    return l * u * p;
}

struct RandomComplexSpec {
    int lo = 0;
    int levels = 3;  // window size
    int max_dim = 3; // cap per degree
};

// Known cohomology: h[deg] points survive, arrows are acyclic.
struct BuiltComplex {
    GradedComplex complex;
    std::map<int, int> h_dim;
};

inline BuiltComplex rand_complex_known_h(Rng& rng, const RandomComplexSpec& spec) {
    int lo = spec.lo, hi = spec.lo + spec.levels - 1;
    std::map<int, int> points, arrows; // arrows[n]: acyclic k -> k in degrees n, n+1
    std::map<int, int> dims;
    for (int n = lo; n <= hi; ++n) { points[n] = 0; arrows[n] = 0; dims[n] = 0; }
    for (int n = lo; n <= hi; ++n) {
        int room = spec.max_dim - dims[n];
        if (room <= 0) continue;
        int p = rand_int(rng, 0, room);
        points[n] = p;
        dims[n] += p;
        if (n < hi) {
            int room2 = std::min(spec.max_dim - dims[n], spec.max_dim - dims[n + 1]);
            if (room2 > 0) {
                int a = rand_int(rng, 0, room2);
                arrows[n] = a;
                dims[n] += a;
                dims[n + 1] += a;
            }
        }
    }
    // Layout per degree: [points | arrow sources (to n+1) | arrow targets (from n-1)]
    std::map<int, Mat> d;
    for (int n = lo; n < hi; ++n) {
        Mat m(dims[n + 1], dims[n]);
        int src_off = points[n];
        int tgt_off = points[n + 1] + arrows[n + 1];
        for (int k = 0; k < arrows[n]; ++k) m.at(tgt_off + k, src_off + k) = 1;
        d[n] = std::move(m);
    }
    std::vector<int> dim_vec;
    for (int n = lo; n <= hi; ++n) dim_vec.push_back(dims[n]);
    GradedComplex plain(lo, dim_vec, d);
    // Conjugate by random change of basis per degree.
    std::map<int, Mat> g, ginv;
    for (int n = lo; n <= hi; ++n) {
        g[n] = rand_gl(rng, dims[n]);
        ginv[n] = *corecx::inverse(g[n]);
    }
    std::map<int, Mat> d2;
    for (int n = lo; n < hi; ++n) d2[n] = g[n + 1] * plain.d(n) * ginv[n];
    BuiltComplex out{GradedComplex(lo, dim_vec, d2), {}};
    for (int n = lo; n <= hi; ++n) out.h_dim[n] = points[n];
    return out;
}

inline GradedComplex rand_complex(Rng& rng, const RandomComplexSpec& spec) {
    return rand_complex_known_h(rng, spec).complex;
}

} // namespace testsupport
