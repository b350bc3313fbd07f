#pragma once
// Denormalization K, the combinatorial inverse of normalized chains: levelwise
// a direct sum of copies of the complex indexed by order-preserving
// surjections, with operators assembled by the epi-monic rule. Also the
// morphism transport along both K and N.

#include "simpkit/simplicial.hpp"

namespace simpkit {

// Chain map between non-negatively graded chain complexes, one block per level.
struct ChainMapNN {
    std::vector<Mat> blocks; // blocks[n]: V_n -> W_n

    int levels() const { return int(blocks.size()) - 1; }
    const Mat& block(int n) const { return blocks[size_t(n)]; }
    bool operator==(const ChainMapNN& o) const { return blocks == o.blocks; }
};

bool is_chain_map_nn(const ChainComplexNN& v, const ChainComplexNN& w, const ChainMapNN& f);

// Levelwise linear maps commuting with faces and degeneracies.
struct SimplicialMap {
    std::vector<Mat> level; // level[n]: S_n -> T_n
};

bool is_simplicial_map(const SimplicialVectorSpace& s, const SimplicialVectorSpace& t,
                       const SimplicialMap& f);

// Zero-extend to the given number of levels.
ChainComplexNN pad_levels(const ChainComplexNN& v, int N);

// All order-preserving surjections [n] ->> [p] as value lists, ordered
// lexicographically by their jump sets. There are C(n,p) of them.
std::vector<std::vector<int>> surjections(int n, int p);

// Summand bookkeeping for (KV)_n = sum over surjections [n] ->> [p] of V_p,
// p ascending, surjections in enumeration order. Zero-dimensional summands
// are kept so offsets follow the combinatorics.
struct DkSummand {
    int p;
    std::vector<int> eta; // values of the surjection [n] ->> [p]
    int offset;
    int dim;
};
struct DkLayout {
    std::vector<DkSummand> summands;
    int total = 0;
};
DkLayout dk_layout(const ChainComplexNN& v, int n);

// Matrix of K(alpha): (KV)_n -> (KV)_m for monotone alpha: [m] -> [n]. Per
// source summand eta, factor eta(alpha) = eps(eta'); the component into the
// eta' summand is the identity if eps is one, the boundary d_p if eps misses
// exactly the top index p, zero otherwise.
Mat dk_operator(const ChainComplexNN& v, const std::vector<int>& alpha, int n);

SimplicialVectorSpace denormalize(const ChainComplexNN& v, int N);

// K on morphisms: the block f_p on every summand indexed by [n] ->> [p].
SimplicialMap denormalize_map(const ChainComplexNN& v, const ChainComplexNN& w,
                              const ChainMapNN& f, int N);

// N on morphisms: conjugate by the normalization data of source and target.
ChainMapNN normalize_map(const Normalization& nv, const Normalization& nw,
                         const SimplicialMap& f);

} // namespace simpkit
