#pragma once
// Decreasing filtrations of a graded complex by d-stable graded subspaces.

#include "corecx/complex.hpp"

namespace corecx {

class Filtration {
  public:
    // steps[p][deg] = columns spanning F^p in that degree. Outside [p_lo,
    // p_hi] the filtration is implicitly full (below) or zero (above).
    Filtration(GradedComplex complex, int p_lo, std::map<int, std::map<int, Mat>> steps);

    const GradedComplex& complex() const { return complex_; }
    int p_lo() const { return p_lo_; }
    int p_hi() const { return p_hi_; }
    // Basis of F^p in the given degree; identity below p_lo, empty above p_hi.
    Mat basis(int p, int deg) const;

  private:
    GradedComplex complex_;
    int p_lo_, p_hi_;
    std::map<int, std::map<int, Mat>> steps_;
};

struct FiltrationCheck {
    enum class Fail { none, rank_deficient, nesting, d_stability };
    bool ok = true;
    Fail kind = Fail::none;
    int p = 0, degree = 0;
    std::vector<Rational> witness; // offending vector in ambient coordinates
};

FiltrationCheck filtration_check(const Filtration& f);

// Two-step convenience: F^{p} = V for p <= 0, F^{1} = 0.
Filtration trivial_filtration(const GradedComplex& v);

} // namespace corecx
