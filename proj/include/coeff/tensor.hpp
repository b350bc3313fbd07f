#pragma once
// g (x) m_A: the nilpotent dgla a dgla acquires from Artinian coefficients,
// with the explicit summand layout the MC machinery addresses.

#include "coeff/artin.hpp"
#include "dgla/dgla.hpp"

namespace coeff {

// One summand g^{g_degree} (x) e_{a_index} inside total degree
// g_degree + degrees[a_index]. Within a total degree, summands are ordered
// by a_index ascending (the ring's maximal-ideal basis order).
struct TensorSummand {
    int a_index = 0;
    int g_degree = 0;
    int offset = 0;
    int dim = 0;
};

struct TensorDgla {
    dgla::Dgla g;
    std::map<int, std::vector<TensorSummand>> layout;

    const std::vector<TensorSummand>& summands(int total_degree) const;
    // Coordinate of e_r (x) e_{a_index}; throws if the summand is absent.
    int index(int total_degree, int a_index, int r) const;
    // x in g^{total_degree - deg(e_{a_index})} placed into the summand.
    std::vector<Rational> embed(int total_degree, int a_index,
                                const std::vector<Rational>& x) const;
    // The summand component of a full degree vector.
    std::vector<Rational> component(int total_degree, int a_index,
                                    const std::vector<Rational>& v) const;
};

// Total grading |x (x) a| = |x| + |a|, differential d (x) 1 + 1 (x) d_A
// with d(x (x) a) = dx (x) a + (-1)^{|x|} x (x) da, bracket
// [x (x) a, y (x) b] = (-1)^{|a||y|} [x,y] (x) ab. Nilpotent because the
// ring coefficients live in m.
TensorDgla tensor_nilpotent(const dgla::Dgla& g, const ArtinAlgebra& a);

} // namespace coeff
