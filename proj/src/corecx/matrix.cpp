#include "corecx/matrix.hpp"

#include <algorithm>

namespace corecx {

Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(mpz_class(s), 1);
            r.canonicalize();
            return r;
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rat_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational rat_binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        assert(int(r.size()) == cols_);
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::column(const std::vector<Rational>& v) {
    Mat m(int(v.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = v[i];
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

Mat Mat::operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Mat Mat::operator*(const Rational& c) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

std::vector<Rational> Mat::operator*(const std::vector<Rational>& v) const {
    assert(int(v.size()) == cols_);
    std::vector<Rational> r(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::col_slice(int j0, int ncols) const {
    assert(j0 >= 0 && j0 + ncols <= cols_);
    Mat r(rows_, ncols);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(i, j0 + j);
    return r;
}

std::vector<Rational> Mat::col_vec(int j) const {
    std::vector<Rational> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Mat Mat::submatrix(int i0, int j0, int nrows, int ncols) const {
    assert(i0 >= 0 && i0 + nrows <= rows_ && j0 >= 0 && j0 + ncols <= cols_);
    Mat r(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.cols() == 0 && a.rows() == 0) return b;
    if (b.cols() == 0 && b.rows() == 0) return a;
    assert(a.rows() == b.rows());
    Mat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() == 0 && a.rows() == 0) return b;
    if (b.cols() == 0 && b.rows() == 0) return a;
    assert(a.cols() == b.cols());
    Mat r(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = 1 / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const Mat& m) {
    Mat c = m;
    return int(rref(c).size());
}

Mat kernel_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    int nullity = m.cols() - int(pivots.size());
    Mat ker(m.cols(), nullity);
    int k = 0;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ker.at(free, k) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) ker.at(pivots[pi], k) = -r.at(int(pi), free);
        ++k;
    }
    return ker;
}

std::optional<std::vector<Rational>> solve(const Mat& m, const std::vector<Rational>& b) {
    assert(int(b.size()) == m.rows());
    Mat aug = hstack(m, Mat::column(b));
    if (m.rows() == 0) return std::vector<Rational>(m.cols(), Rational(0));
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(int(pi), m.cols());
    return x;
}

std::optional<Mat> solve_matrix(const Mat& m, const Mat& B) {
    assert(B.rows() == m.rows());
    Mat aug = hstack(m, B);
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p >= m.cols()) return std::nullopt;
    Mat X(m.cols(), B.cols());
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (int j = 0; j < B.cols(); ++j) X.at(pivots[pi], j) = aug.at(int(pi), m.cols() + j);
    return X;
}

std::optional<Mat> inverse(const Mat& m) {
    assert(m.rows() == m.cols());
    Mat aug = hstack(m, Mat::identity(m.rows()));
    std::vector<int> pivots = rref(aug);
    if (int(pivots.size()) != m.rows() || (!pivots.empty() && pivots.back() >= m.cols()))
        return std::nullopt;
    return aug.submatrix(0, m.cols(), m.rows(), m.cols());
}

Mat column_space_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref(r);
    Mat basis(m.rows(), int(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < m.rows(); ++i) basis.at(i, int(k)) = m.at(i, pivots[k]);
    return basis;
}

bool in_span(const Mat& basis, const std::vector<Rational>& v) {
    return solve(basis, v).has_value();
}

bool span_contains(const Mat& basis, const Mat& vs) {
    return solve_matrix(basis, vs).has_value();
}

bool spans_equal(const Mat& a, const Mat& b) {
    assert(a.rows() == b.rows());
    return span_contains(a, b) && span_contains(b, a);
}

std::optional<std::vector<Rational>> coords_in_basis(const Mat& basis, const std::vector<Rational>& v) {
    return solve(basis, v);
}

Mat span_sum_basis(const Mat& a, const Mat& b) {
    return column_space_basis(hstack(a, b));
}

Mat span_intersection(const Mat& a, const Mat& b) {
    // col(a) meets col(b): solve a x = b y, read off a x.
    if (a.cols() == 0 || b.cols() == 0) return Mat(a.rows(), 0);
    Mat ker = kernel_basis(hstack(a, -b));
    Mat xpart = ker.submatrix(0, 0, a.cols(), ker.cols());
    return column_space_basis(a * xpart);
}

Mat extend_basis(const Mat& sub, const Mat& extra) {
    assert(sub.rows() == extra.rows());
    Mat cur = sub;
    Mat added(sub.rows(), 0);
    int r = rank(cur);
    for (int j = 0; j < extra.cols(); ++j) {
        Mat cand = hstack(cur, extra.col(j));
        int r2 = rank(cand);
        if (r2 > r) {
            cur = cand;
            added = hstack(added, extra.col(j));
            r = r2;
        }
    }
    return added;
}

std::vector<Rational> zero_vec(int n) { return std::vector<Rational>(n, Rational(0)); }

bool is_zero_vec(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::vector<Rational> add_vec(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    assert(a.size() == b.size());
    std::vector<Rational> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::vector<Rational> sub_vec(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    assert(a.size() == b.size());
    std::vector<Rational> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::vector<Rational> scale_vec(const Rational& c, const std::vector<Rational>& v) {
    std::vector<Rational> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

} // namespace corecx
