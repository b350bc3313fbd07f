#pragma once
// Bounded cochain complexes of finite-dimensional Q-vector spaces, maps
// between them, cohomology as explicit subquotients, and the Hom complex
// with its block bookkeeping. Cochain grading throughout.

#include "corecx/matrix.hpp"

#include <map>
#include <string>

namespace corecx {

class GradedComplex {
  public:
    // Empty complex.
    GradedComplex() : lo_(0), hi_(-1) {}
    // dims[k] is the dimension in degree lo+k; d maps degree n to n+1 and
    // must square to zero (checked).
    GradedComplex(int lo, std::vector<int> dims, std::map<int, Mat> d);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int dim(int n) const {
        return (n < lo_ || n > hi_) ? 0 : dims_[size_t(n - lo_)];
    }
    int total_dim() const;
    // Differential V^n -> V^{n+1}; correctly shaped zero outside the window.
    const Mat& d(int n) const;

    bool operator==(const GradedComplex& o) const;
    bool operator!=(const GradedComplex& o) const { return !(*this == o); }

    int euler_characteristic() const;

  private:
    int lo_, hi_;
    std::vector<int> dims_;
    std::vector<Mat> d_; // d_[k]: degree lo+k -> lo+k+1
    mutable std::map<int, Mat> zero_cache_;
};

GradedComplex shift(const GradedComplex& v, int n);

// Presents a quotient Z/B of subspaces of a coordinate space U: `reps` maps
// isomorphically onto the quotient, `projection` computes coordinates of a
// class, `sub` spans ker(projection) (B extended by a complement of Z in U,
// so rank(projection) + sub.cols() = ambient_dim).
struct SubquotientSpace {
    int ambient_dim = 0;
    Mat cycles;     // basis of Z
    Mat boundaries; // basis of B, inside Z
    Mat sub;        // basis of ker(projection) = B + complement of Z
    Mat reps;       // class representatives, inside Z
    Mat projection; // dim() x ambient_dim; projection*reps = I, projection*sub = 0

    int dim() const { return reps.cols(); }
    bool is_cycle(const std::vector<Rational>& v) const { return in_span(cycles, v); }
    std::vector<Rational> class_of(const std::vector<Rational>& v) const { return projection * v; }
};

// Subquotient presentation of Z/B for given subspaces B <= Z <= Q^ambient.
SubquotientSpace subquotient(int ambient_dim, const Mat& cycles, const Mat& boundaries);

// ker d_n / im d_{n-1}.
SubquotientSpace cohomology(const GradedComplex& v, int n);
int cohomology_dim(const GradedComplex& v, int n);

class ComplexMap {
  public:
    // blocks[n]: V^n -> W^{n+degree}; missing degrees are zero.
    ComplexMap(GradedComplex source, GradedComplex target, int degree, std::map<int, Mat> blocks);
    static ComplexMap identity(const GradedComplex& v);
    static ComplexMap zero(const GradedComplex& source, const GradedComplex& target, int degree);

    const GradedComplex& source() const { return source_; }
    const GradedComplex& target() const { return target_; }
    int degree() const { return degree_; }
    const Mat& block(int n) const;
    bool is_chain_map() const { return is_chain_map_; }

    ComplexMap operator+(const ComplexMap& o) const;
    ComplexMap operator-(const ComplexMap& o) const;
    ComplexMap operator*(const Rational& c) const;
    // Composition this after o.
    ComplexMap compose(const ComplexMap& o) const;

    bool operator==(const ComplexMap& o) const;

  private:
    GradedComplex source_, target_;
    int degree_;
    std::map<int, Mat> blocks_;
    bool is_chain_map_;
    mutable std::map<int, Mat> zero_cache_;
};

// Induced map on cohomology of a degree-t chain map: H^n(V) -> H^{n+t}(W),
// in the coordinates of the two subquotients.
Mat induced_on_cohomology(const ComplexMap& f, int n);

// Hom^n(V, W) = prod_i Hom(V^i, W^{i+n}) with differential
// D(f) = d_W f - (-1)^{|f|} f d_V, packaged as a GradedComplex plus the
// block layout. Blocks are vectorized row by row, source degrees ascending.
class HomComplex {
  public:
    HomComplex(GradedComplex v, GradedComplex w);

    const GradedComplex& total() const { return total_; }
    const GradedComplex& v() const { return v_; }
    const GradedComplex& w() const { return w_; }

    struct Block {
        int src_deg;
        int offset;
        int rows, cols; // dim W^{src+n} x dim V^{src}
    };
    const std::vector<Block>& blocks(int n) const;

    std::vector<Rational> flatten(const ComplexMap& f) const;
    ComplexMap unflatten(int n, const std::vector<Rational>& coords) const;
    // Blockwise composition of flattened elements, degrees n1 and n2.
    std::vector<Rational> compose(int n1, const std::vector<Rational>& f,
                                  int n2, const std::vector<Rational>& g) const;

  private:
    GradedComplex v_, w_;
    GradedComplex total_;
    std::map<int, std::vector<Block>> layout_;
    std::vector<Block> empty_;
};

HomComplex hom_complex(const GradedComplex& v, const GradedComplex& w);

} // namespace corecx
