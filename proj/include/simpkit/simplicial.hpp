#pragma once
// Truncated simplicial vector spaces and their normalized chains.

#include "corecx/complex.hpp"

namespace simpkit {

using corecx::GradedComplex;
using corecx::Mat;
using corecx::Rational;

// Non-negatively graded chain complex, levels 0..N.
struct ChainComplexNN {
    std::vector<int> dims;
    // delta[n]: level n -> n-1 (dims[n-1] x dims[n]); delta[0] is empty.
    std::vector<Mat> delta;

    int levels() const { return int(dims.size()) - 1; }
    int dim(int n) const { return (n >= 0 && n < int(dims.size())) ? dims[size_t(n)] : 0; }
    const Mat& d(int n) const { return delta[size_t(n)]; }
    int total_dim() const;

    bool operator==(const ChainComplexNN& o) const { return dims == o.dims && delta == o.delta; }

    // Reindex chain level n to cochain degree -n.
    GradedComplex to_cochain() const;
};

ChainComplexNN make_chain_complex(std::vector<int> dims, std::vector<Mat> delta);

// Levels 0..N. face[n][i]: level n -> n-1 (1 <= n <= N, 0 <= i <= n);
// degen[n][j]: level n -> n+1 (0 <= n < N, 0 <= j <= n).
struct SimplicialVectorSpace {
    int N = 0;
    std::vector<int> dims;
    std::vector<std::vector<Mat>> face;
    std::vector<std::vector<Mat>> degen;

    int dim(int n) const { return (n >= 0 && n <= N) ? dims[size_t(n)] : 0; }
    const Mat& d_face(int n, int i) const { return face[size_t(n)][size_t(i)]; }
    const Mat& d_degen(int n, int j) const { return degen[size_t(n)][size_t(j)]; }

    // Matrix of the operator induced by a monotone map theta: [m] -> [n]
    // within the truncation, composed out of faces and degeneracies.
    Mat simplicial_operator(const std::vector<int>& theta, int n) const;
};

struct SimplicialCheck {
    bool ok = true;
    std::string detail; // first failing identity, human-readable
};

// Exhaustive check of all simplicial identities expressible within the
// truncation, plus shape checks.
SimplicialCheck check_simplicial(const SimplicialVectorSpace& s);

// Levelwise tensor product (faces and degeneracies act diagonally).
SimplicialVectorSpace tensor(const SimplicialVectorSpace& a, const SimplicialVectorSpace& b);

struct Normalization {
    ChainComplexNN complex;
    // basis[n]: inclusion of (NV)_n into level n; projection[n] is a left
    // inverse killing the degenerate part.
    std::vector<Mat> basis;
    std::vector<Mat> projection;
};

// (NV)_n = intersection of ker(face_i), i < n, carrying delta_n = (-1)^n face_n.
// The stored basis is the echelon kernel basis scaled by (-1)^{n(n+1)/2};
// with that choice normalize(denormalize(V)) returns V on the nose.
Normalization normalize(const SimplicialVectorSpace& s);

// Dimension of the span of degeneracy images at level n.
int degenerate_dim(const SimplicialVectorSpace& s, int n);

SimplicialVectorSpace constant_simplicial(int dim, int N);

} // namespace simpkit
