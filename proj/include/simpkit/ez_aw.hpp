#pragma once
// Eilenberg-Zilber shuffle map and Alexander-Whitney map between the
// normalized chains of a levelwise tensor product and the tensor product of
// the normalized chains. All matrices are written in the deterministic bases
// produced by normalize().

#include "simpkit/simplicial.hpp"

namespace simpkit {

struct Shuffle {
    std::vector<int> mu; // increasing, size p
    std::vector<int> nu; // increasing, size q; complement of mu in {0..p+q-1}
    int sign = 1;        // parity of the interleaving permutation
};

// All (p,q)-shuffles, mu enumerated lexicographically. C(p+q, p) of them.
std::vector<Shuffle> shuffles(int p, int q);

// N(A)_p (x) N(B)_q -> N(A (x) B)_{p+q}: sum over shuffles of
// sign * (degeneracies nu applied to the first factor) (x) (mu to the second).
// Source coordinates pair row-major.
Mat ez_map(const SimplicialVectorSpace& a, const SimplicialVectorSpace& b, int p, int q);

// N(A (x) B)_n -> sum over p+q=n of N(A)_p (x) N(B)_q: front face of the
// first factor, iterated zeroth face of the second; components stacked with
// p ascending.
Mat aw_map(const SimplicialVectorSpace& a, const SimplicialVectorSpace& b, int n);

// All EZ components for p+q=n side by side, p ascending; the section of
// aw_map (aw * ez = identity on the nose).
Mat ez_assembled(const SimplicialVectorSpace& a, const SimplicialVectorSpace& b, int n);

} // namespace simpkit
