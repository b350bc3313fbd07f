#pragma once
// Finite-dimensional local (possibly differential graded) Artinian algebras
// over Q: explicit graded bases with constructor-certified axioms, the
// maximal-ideal filtration, quotient rings, and small-extension towers.

#include "corecx/complex.hpp"
#include "corecx/matrix.hpp"

#include <string>
#include <vector>

namespace coeff {

using corecx::Mat;
using corecx::Rational;

// Basis element 0 is the unit; the remaining elements span the maximal
// ideal, so the residue ring is k. Degrees are cochain degrees <= 0 with
// degrees[0] = 0. mult packs the structure constants as a dim x dim^2
// matrix whose column i*dim + j holds the coordinates of e_i * e_j, so
// product(x, y) = mult * kron(x, y). d is the degree +1 differential.
struct ArtinAlgebra {
    std::vector<std::string> names;
    std::vector<int> degrees;
    Mat mult;
    Mat d;
    std::vector<int> maximal_ideal;

    int dim() const { return int(degrees.size()); }
    std::vector<Rational> unit() const;
    std::vector<Rational> basis_vector(int i) const;
    std::vector<Rational> product(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const;
    Mat left_mult(const std::vector<Rational>& x) const;
    // Coordinate columns of the maximal-ideal basis, dim x r.
    Mat ideal_inclusion() const;
    // All generators in degree 0 and d = 0: an ordinary local Artin ring.
    bool is_classical() const;

    bool operator==(const ArtinAlgebra&) const = default;
};

struct ArtinCheck {
    bool ok = true;
    std::string detail;
};

// Exhaustive over basis pairs and triples: shapes, unit laws, grading of
// mult and d, graded commutativity, associativity, d^2 = 0, Leibniz,
// locality (products and differentials of ideal elements stay in the
// ideal), and nilpotency of the maximal ideal within dim steps. detail
// names the first failing axiom and witness.
ArtinCheck check_artin(const ArtinAlgebra& a);

// Runs check_artin and throws std::invalid_argument with the witness on
// failure; every ring in the library is built through this gate.
ArtinAlgebra make_artin(std::vector<std::string> names, std::vector<int> degrees,
                        Mat mult, Mat d, std::vector<int> maximal_ideal);

// k[eps]/(eps^2), generator in degree 0.
ArtinAlgebra dual_numbers();

// k + k.t with t^2 = 0, t in cochain degree -n, d = 0. n = 0 gives the
// dual numbers.
ArtinAlgebra square_zero_shift(int n);

// k + (t, dt) with deg t = -n, deg dt = -n+1, d(t) = dt, m^2 = 0: the
// acyclic path-object coefficient at level n (n >= 1).
ArtinAlgebra cone_coefficient(int n);

// k[t]/(t^s), all in degree 0, s >= 2.
ArtinAlgebra truncated_polynomial(int s);

// The powers m >= m^2 >= ... as column bases; powers[i] spans m^{i+1} and
// the last entry is the first zero power, so powers.size() is the
// nilpotency index. Throws if the chain fails to reach zero in dim steps.
struct IdealFiltration {
    std::vector<Mat> powers;
    int nilpotency_index() const { return int(powers.size()); }
};

IdealFiltration ideal_filtration(const ArtinAlgebra& a);

// The maximal ideal with its differential as a graded complex (basis
// grouped by degree, original order within a degree).
corecx::GradedComplex ideal_complex(const ArtinAlgebra& a);

// matrix columns = images of source basis vectors in target coordinates.
struct ArtinMorphism {
    Mat matrix;
    bool operator==(const ArtinMorphism&) const = default;
};

struct MorphismCheck {
    bool ok = true;
    std::string detail;
};

// Unital, degree 0, chain map, multiplicative, carries the maximal ideal
// into the maximal ideal.
MorphismCheck check_artin_morphism(const ArtinAlgebra& src, const ArtinAlgebra& tgt,
                                   const ArtinMorphism& f);

struct QuotientRing {
    ArtinAlgebra ring;
    ArtinMorphism projection;
    // Linear section picking the complement basis; projection * section = id.
    Mat section;
};

// Quotient by a d-stable graded ideal inside m, given by spanning columns.
// The complement basis is chosen among coordinate vectors, so quotient
// basis elements keep their names. Throws if the columns do not span a
// d-stable graded ideal.
QuotientRing quotient_ring(const ArtinAlgebra& a, const Mat& ideal);

// One rung of the adic ladder: source ->> quotient with kernel a single
// graded piece of m^stratum / m^{stratum+1}, killed by m in the source.
struct SmallExtensionStep {
    ArtinAlgebra source;
    ArtinAlgebra quotient;
    ArtinMorphism projection;
    Mat kernel;
    int kernel_degree = 0;
    int stratum = 0;
};

// The full ladder from A/m = k up to A, refining each m^i/m^{i+1} into its
// graded pieces (lowest degree first). steps[0].quotient is k and
// steps.back().source is A itself.
std::vector<SmallExtensionStep> small_extension_tower(const ArtinAlgebra& a);

// The certified surjection cone_coefficient(n) ->> square_zero_shift(n)
// killing the top generator dt; its kernel is the unique d-stable line in
// the cone's maximal ideal.
ArtinMorphism cone_to_shift_projection(int n);

} // namespace coeff
