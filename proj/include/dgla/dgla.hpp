#pragma once
// Differential graded Lie algebras over Q: explicit bracket structure
// constants on a graded complex, the exhaustive axiom checker, and the
// endomorphism dgla of a complex.

#include "corecx/complex.hpp"

#include <map>
#include <utility>

namespace dgla {

using corecx::GradedComplex;
using corecx::Mat;
using corecx::Rational;

// brackets[{i, j}] has shape dim(i+j) x dim(i)*dim(j); column p*dim(j) + q
// holds [e_p, e_q] for basis elements of degrees i and j. Missing keys and
// keys whose target degree falls outside the window mean zero.
struct Dgla {
    GradedComplex complex;
    std::map<std::pair<int, int>, Mat> brackets;

    int dim(int n) const { return complex.dim(n); }
    Mat bracket(int i, int j) const;
    std::vector<Rational> apply(int i, const std::vector<Rational>& x, int j,
                                const std::vector<Rational>& y) const;
    // ad_x as a matrix g^j -> g^{i+j} for homogeneous x of degree i.
    Mat ad(int i, const std::vector<Rational>& x, int j) const;
};

struct DglaCheck {
    bool ok = true;
    std::string detail;
};

// Exhaustive over basis pairs and triples inside the degree window:
// shapes, graded antisymmetry, Leibniz for d, graded Jacobi. detail names
// the first failing axiom with its basis witness.
DglaCheck check_dgla(const Dgla& g);

// Runs check_dgla and throws std::invalid_argument on failure; for
// hand-built inputs. The library's own constructions (end_dgla, tensors)
// build directly and are certified by tests.
Dgla make_dgla(GradedComplex complex, std::map<std::pair<int, int>, Mat> brackets);

Dgla abelian_dgla(GradedComplex v);

// End(V): the hom complex of V with itself, differential
// D(f) = d f - (-1)^{|f|} f d, bracket the graded commutator. Coordinates
// follow corecx::HomComplex's block layout.
Dgla end_dgla(const GradedComplex& v);

} // namespace dgla
