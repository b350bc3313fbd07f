#pragma once
// Dense matrices over Q and the elimination-based kit the rest of the
// library leans on: kernels, solves, span arithmetic, basis extension.
// Desk scale by design; everything is exact, nothing is clever.

#include "corecx/rational.hpp"

#include <cassert>
#include <initializer_list>
#include <optional>
#include <vector>

namespace corecx {

class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rational(0)) {
        assert(rows >= 0 && cols >= 0);
    }
    Mat(std::initializer_list<std::initializer_list<Rational>> rows);

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    // Single column from a vector.
    static Mat column(const std::vector<Rational>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[size_t(i) * cols_ + j];
    }
    const Rational& at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[size_t(i) * cols_ + j];
    }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Rational& c) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;

    Mat transpose() const;
    Mat col_slice(int j0, int ncols) const;
    Mat col(int j) const { return col_slice(j, 1); }
    std::vector<Rational> col_vec(int j) const;
    Mat submatrix(int i0, int j0, int nrows, int ncols) const;

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);

// Row-reduce in place; returns pivot column indices (echelon, leading 1s,
// zeros above and below pivots).
std::vector<int> rref(Mat& m);

int rank(const Mat& m);

// Columns form a basis of ker m. Empty (n x 0) matrix when injective.
Mat kernel_basis(const Mat& m);

// Particular solution of m x = b, if any.
std::optional<std::vector<Rational>> solve(const Mat& m, const std::vector<Rational>& b);

// Columnwise solve m X = B.
std::optional<Mat> solve_matrix(const Mat& m, const Mat& B);

std::optional<Mat> inverse(const Mat& m);

// Basis of the column space (a column-reduced spanning set, not a subset of
// the input columns).
Mat column_space_basis(const Mat& m);

bool in_span(const Mat& basis, const std::vector<Rational>& v);
// All columns of vs inside col(basis)?
bool span_contains(const Mat& basis, const Mat& vs);
bool spans_equal(const Mat& a, const Mat& b);

// Coordinates of v in the given (full-column-rank) basis.
std::optional<std::vector<Rational>> coords_in_basis(const Mat& basis, const std::vector<Rational>& v);

Mat span_sum_basis(const Mat& a, const Mat& b);
Mat span_intersection(const Mat& a, const Mat& b);

// Columns of `extra` that extend col(sub) to col(sub) + col(extra),
// greedily and deterministically.
Mat extend_basis(const Mat& sub, const Mat& extra);

std::vector<Rational> zero_vec(int n);
bool is_zero_vec(const std::vector<Rational>& v);
std::vector<Rational> add_vec(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> sub_vec(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> scale_vec(const Rational& c, const std::vector<Rational>& v);

} // namespace corecx
