#pragma once
// Affine chain complexes (a complex whose degree-0 part is an affine space,
// recorded by its difference space plus an origin-free flag), simplicial
// affine spaces (faces and degeneracies carry translation parts), the affine
// Dold-Kan correspondence, and the monoidal structure V (+) W (+) (V (x) W)
// with its label-driven coherence isomorphisms.

#include "simpkit/dold_kan.hpp"

namespace simpkit {

struct AffineComplex {
    ChainComplexNN v;        // difference complex; v.dim(0) is the difference
                             // space of the degree-0 affine space
    bool origin_free = true; // degree 0 is affine: coordinates are relative
                             // to an unnamed origin

    bool operator==(const AffineComplex& o) const {
        return v == o.v && origin_free == o.origin_free;
    }
};

// The unit object: a point with zero difference complex.
AffineComplex unit_affine();

// Linear part plus a translation in the target's degree-0 difference space.
struct AffineMap {
    ChainMapNN f;
    std::vector<Rational> b;

    bool operator==(const AffineMap& o) const { return f == o.f && b == o.b; }
};

// g after f: (g,c)(f,b) = (g f, g_0(b) + c).
AffineMap affine_compose(const AffineMap& g, const AffineMap& f);

bool is_affine_chain_map(const AffineComplex& src, const AffineComplex& tgt, const AffineMap& phi);

// Simplicial object in affine spaces: levelwise difference spaces with linear
// face/degeneracy parts, plus a translation vector per face and degeneracy.
struct SimplicialAffineSpace {
    SimplicialVectorSpace lin;
    std::vector<std::vector<std::vector<Rational>>> face_tr;  // [n][i], in level n-1
    std::vector<std::vector<std::vector<Rational>>> degen_tr; // [n][j], in level n+1
};

// Simplicial identities for the affine structure: linear parts and
// translations both compose correctly.
SimplicialCheck check_affine_simplicial(const SimplicialAffineSpace& s);

struct SimplicialAffineMap {
    std::vector<Mat> lin;                 // [n]: level n linear part
    std::vector<std::vector<Rational>> tr; // [n]: translation, target level n
};

bool is_simplicial_affine_map(const SimplicialAffineSpace& s, const SimplicialAffineSpace& t,
                              const SimplicialAffineMap& f);

// Affine denormalization: the linear denormalization with zero translations
// (in coordinates every face is linear; degree 0 keeps the affine flag).
SimplicialAffineSpace affine_denormalize(const AffineComplex& a, int N);

// Transport of an affine chain map: linear blocks summandwise, translation
// placed in the unique degree-0 summand at every level.
SimplicialAffineMap affine_denormalize_map(const AffineComplex& v, const AffineComplex& w,
                                           const AffineMap& phi, int N);

struct AffineNormalization {
    AffineComplex complex;
    Normalization lin; // bases and projections of the underlying normalization
};

// Affine normalization: the degree-0 affine space is untouched, higher
// degrees are the normalized chains of the difference spaces.
AffineNormalization affine_normalize(const SimplicialAffineSpace& s);

AffineMap affine_normalize_map(const AffineNormalization& ns, const AffineNormalization& nt,
                               const SimplicialAffineMap& f);

// Tensor complex V (x) W with summands V_i (x) W_j, i ascending per level;
// boundary d (x) 1 + (-1)^i 1 (x) d.
ChainComplexNN chain_tensor(const ChainComplexNN& v, const ChainComplexNN& w);

struct PairBlock {
    int i, j;
    int offset;
    int dim;
};
std::vector<PairBlock> pair_layout(const ChainComplexNN& v, const ChainComplexNN& w, int n);

// Monoidal product: underlying complex V (+) W (+) (V (x) W), blocks in that
// order per level.
AffineComplex affine_tensor(const AffineComplex& a, const AffineComplex& b);

// Morphism tensor: u -> f(u)+b on the first block, v -> g(v)+d on the second,
// x(x)y -> f(x)(x)g(y) on the third.
AffineMap affine_tensor_map(const AffineMap& f, const AffineComplex& src_a, const AffineComplex& tgt_a,
                            const AffineMap& g, const AffineComplex& src_b, const AffineComplex& tgt_b);

// Coordinate labels per level; tensor labels concatenate with '*', which
// makes nested products associate on the nose at the label level.
struct LabeledComplex {
    AffineComplex obj;
    std::vector<std::vector<std::string>> labels; // labels[n][coordinate]
};

LabeledComplex label_atoms(const AffineComplex& a, const std::string& name);
LabeledComplex affine_tensor(const LabeledComplex& a, const LabeledComplex& b);

// The permutation matching equal labels levelwise; associators and unitors
// of the monoidal structure are exactly these. Throws if the label multisets
// disagree or labels repeat.
AffineMap label_matcher(const LabeledComplex& src, const LabeledComplex& tgt);

} // namespace simpkit
