#include "corecx/complex.hpp"

#include <stdexcept>

namespace corecx {

GradedComplex::GradedComplex(int lo, std::vector<int> dims, std::map<int, Mat> d)
    : lo_(lo), hi_(lo + int(dims.size()) - 1), dims_(std::move(dims)) {
    for (int n : dims_)
        if (n < 0) throw std::invalid_argument("negative dimension");
    d_.reserve(dims_.size());
    for (int n = lo_; n <= hi_; ++n) {
        auto it = d.find(n);
        Mat m = (it != d.end()) ? it->second : Mat(dim(n + 1), dim(n));
        if (m.rows() != dim(n + 1) || m.cols() != dim(n))
            throw std::invalid_argument("differential shape mismatch in degree " + std::to_string(n));
        d_.push_back(std::move(m));
    }
    for (auto& [n, m] : d)
        if ((n < lo_ || n > hi_) && !m.is_zero())
            throw std::invalid_argument("nonzero differential outside degree window");
    for (int n = lo_; n + 1 <= hi_; ++n)
        if (!(this->d(n + 1) * this->d(n)).is_zero())
            throw std::invalid_argument("d^2 != 0 at degree " + std::to_string(n));
}

int GradedComplex::total_dim() const {
    int t = 0;
    for (int k : dims_) t += k;
    return t;
}

const Mat& GradedComplex::d(int n) const {
    if (n >= lo_ && n <= hi_) return d_[size_t(n - lo_)];
    auto it = zero_cache_.find(n);
    if (it == zero_cache_.end())
        it = zero_cache_.emplace(n, Mat(dim(n + 1), dim(n))).first;
    return it->second;
}

bool GradedComplex::operator==(const GradedComplex& o) const {
    int a = std::min(lo_, o.lo_), b = std::max(hi_, o.hi_);
    for (int n = a; n <= b; ++n) {
        if (dim(n) != o.dim(n)) return false;
        if (d(n) != o.d(n)) return false;
    }
    return true;
}

int GradedComplex::euler_characteristic() const {
    int chi = 0;
    for (int n = lo_; n <= hi_; ++n) chi += (n % 2 == 0 ? 1 : -1) * dim(n);
    return chi;
}

GradedComplex shift(const GradedComplex& v, int n) {
    std::vector<int> dims;
    std::map<int, Mat> d;
    int lo = v.lo() - n, hi = v.hi() - n;
    for (int j = lo; j <= hi; ++j) {
        dims.push_back(v.dim(j + n));
        d[j] = v.d(j + n);
    }
    return GradedComplex(lo, std::move(dims), std::move(d));
}

SubquotientSpace subquotient(int ambient_dim, const Mat& cycles, const Mat& boundaries) {
    SubquotientSpace s;
    s.ambient_dim = ambient_dim;
    s.cycles = column_space_basis(cycles);
    s.boundaries = column_space_basis(boundaries);
    if (!span_contains(s.cycles, s.boundaries))
        throw std::invalid_argument("boundaries not contained in cycles");
    s.reps = extend_basis(s.boundaries, s.cycles);
    Mat complement = extend_basis(s.cycles, Mat::identity(ambient_dim));
    s.sub = hstack(s.boundaries, complement);
    // Invert the full change of basis [sub | reps] and keep the reps rows.
    Mat full = hstack(s.sub, s.reps);
    auto inv = inverse(full);
    if (!inv) throw std::logic_error("subquotient basis assembly failed");
    s.projection = inv->submatrix(s.sub.cols(), 0, s.reps.cols(), ambient_dim);
    return s;
}

SubquotientSpace cohomology(const GradedComplex& v, int n) {
    return subquotient(v.dim(n), kernel_basis(v.d(n)), column_space_basis(v.d(n - 1)));
}

int cohomology_dim(const GradedComplex& v, int n) {
    return v.dim(n) - rank(v.d(n)) - rank(v.d(n - 1));
}

ComplexMap::ComplexMap(GradedComplex source, GradedComplex target, int degree, std::map<int, Mat> blocks)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
    for (int n = source_.lo(); n <= source_.hi(); ++n) {
        auto it = blocks.find(n);
        Mat m = (it != blocks.end()) ? it->second : Mat(target_.dim(n + degree_), source_.dim(n));
        if (m.rows() != target_.dim(n + degree_) || m.cols() != source_.dim(n))
            throw std::invalid_argument("map block shape mismatch in degree " + std::to_string(n));
        blocks_[n] = std::move(m);
    }
    for (auto& [n, m] : blocks)
        if ((n < source_.lo() || n > source_.hi()) && !m.is_zero())
            throw std::invalid_argument("nonzero map block outside source window");
    // Chain map iff D(f) = d_W f - (-1)^{deg} f d_V vanishes.
    Rational sign = (degree_ % 2 == 0) ? 1 : -1;
    is_chain_map_ = true;
    for (int n = source_.lo() - 1; n <= source_.hi(); ++n) {
        Mat lhs = target_.d(n + degree_) * block(n);
        Mat rhs = block(n + 1) * source_.d(n);
        if (lhs - rhs * sign != Mat(lhs.rows(), lhs.cols())) {
            is_chain_map_ = false;
            break;
        }
    }
}

ComplexMap ComplexMap::identity(const GradedComplex& v) {
    std::map<int, Mat> blocks;
    for (int n = v.lo(); n <= v.hi(); ++n) blocks[n] = Mat::identity(v.dim(n));
    return ComplexMap(v, v, 0, std::move(blocks));
}

ComplexMap ComplexMap::zero(const GradedComplex& source, const GradedComplex& target, int degree) {
    return ComplexMap(source, target, degree, {});
}

const Mat& ComplexMap::block(int n) const {
    auto it = blocks_.find(n);
    if (it != blocks_.end()) return it->second;
    auto z = zero_cache_.find(n);
    if (z == zero_cache_.end())
        z = zero_cache_.emplace(n, Mat(target_.dim(n + degree_), source_.dim(n))).first;
    return z->second;
}

ComplexMap ComplexMap::operator+(const ComplexMap& o) const {
    assert(degree_ == o.degree_ && source_ == o.source_ && target_ == o.target_);
    std::map<int, Mat> blocks;
    for (int n = source_.lo(); n <= source_.hi(); ++n) blocks[n] = block(n) + o.block(n);
    return ComplexMap(source_, target_, degree_, std::move(blocks));
}

ComplexMap ComplexMap::operator-(const ComplexMap& o) const {
    return *this + (o * Rational(-1));
}

ComplexMap ComplexMap::operator*(const Rational& c) const {
    std::map<int, Mat> blocks;
    for (int n = source_.lo(); n <= source_.hi(); ++n) blocks[n] = block(n) * c;
    return ComplexMap(source_, target_, degree_, std::move(blocks));
}

ComplexMap ComplexMap::compose(const ComplexMap& o) const {
    assert(source_ == o.target_);
    std::map<int, Mat> blocks;
    for (int n = o.source_.lo(); n <= o.source_.hi(); ++n)
        blocks[n] = block(n + o.degree_) * o.block(n);
    return ComplexMap(o.source_, target_, degree_ + o.degree_, std::move(blocks));
}

bool ComplexMap::operator==(const ComplexMap& o) const {
    if (degree_ != o.degree_ || source_ != o.source_ || target_ != o.target_) return false;
    for (int n = source_.lo(); n <= source_.hi(); ++n)
        if (block(n) != o.block(n)) return false;
    return true;
}

Mat induced_on_cohomology(const ComplexMap& f, int n) {
    assert(f.is_chain_map());
    SubquotientSpace hv = cohomology(f.source(), n);
    SubquotientSpace hw = cohomology(f.target(), n + f.degree());
    return hw.projection * (f.block(n) * hv.reps);
}

HomComplex::HomComplex(GradedComplex v, GradedComplex w) : v_(std::move(v)), w_(std::move(w)) {
    int lo = w_.lo() - v_.hi(), hi = w_.hi() - v_.lo();
    if (lo > hi) { total_ = GradedComplex(); return; }
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) {
        std::vector<Block> layout;
        int off = 0;
        for (int i = v_.lo(); i <= v_.hi(); ++i) {
            int r = w_.dim(i + n), c = v_.dim(i);
            if (r == 0 || c == 0) continue;
            layout.push_back({i, off, r, c});
            off += r * c;
        }
        dims.push_back(off);
        layout_[n] = std::move(layout);
    }
    // D(f)_i = d_W f_i - (-1)^n f_{i+1} d_V^i, as one matrix per degree.
    std::map<int, Mat> D;
    for (int n = lo; n <= hi; ++n) {
        Mat m(n + 1 >= lo && n + 1 <= hi ? dims[size_t(n + 1 - lo)] : 0, dims[size_t(n - lo)]);
        Rational sign = (n % 2 == 0) ? 1 : -1;
        for (const Block& in : layout_[n]) {
            // left multiplication by d_W lands in the block with the same source degree
            for (const Block& out : layout_.count(n + 1) ? layout_[n + 1] : empty_) {
                if (out.src_deg == in.src_deg) {
                    Mat k = kron(w_.d(in.src_deg + n), Mat::identity(in.cols));
                    for (int r = 0; r < k.rows(); ++r)
                        for (int c = 0; c < k.cols(); ++c)
                            if (k.at(r, c) != 0) m.at(out.offset + r, in.offset + c) = k.at(r, c);
                }
                // right multiplication by d_V drops the source degree by one
                if (out.src_deg == in.src_deg - 1) {
                    Mat k = kron(Mat::identity(in.rows), v_.d(in.src_deg - 1).transpose()) * (-sign);
                    for (int r = 0; r < k.rows(); ++r)
                        for (int c = 0; c < k.cols(); ++c)
                            if (k.at(r, c) != 0) m.at(out.offset + r, in.offset + c) = k.at(r, c);
                }
            }
        }
        D[n] = std::move(m);
    }
    total_ = GradedComplex(lo, std::move(dims), std::move(D));
}

const std::vector<HomComplex::Block>& HomComplex::blocks(int n) const {
    auto it = layout_.find(n);
    return it == layout_.end() ? empty_ : it->second;
}

std::vector<Rational> HomComplex::flatten(const ComplexMap& f) const {
    assert(f.source() == v_ && f.target() == w_);
    int n = f.degree();
    std::vector<Rational> out(total_.dim(n), Rational(0));
    for (const Block& b : blocks(n)) {
        const Mat& m = f.block(b.src_deg);
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < b.cols; ++c) out[size_t(b.offset + r * b.cols + c)] = m.at(r, c);
    }
    return out;
}

ComplexMap HomComplex::unflatten(int n, const std::vector<Rational>& coords) const {
    assert(int(coords.size()) == total_.dim(n));
    std::map<int, Mat> blocks_map;
    for (const Block& b : blocks(n)) {
        Mat m(b.rows, b.cols);
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < b.cols; ++c) m.at(r, c) = coords[size_t(b.offset + r * b.cols + c)];
        blocks_map[b.src_deg] = std::move(m);
    }
    return ComplexMap(v_, w_, n, std::move(blocks_map));
}

std::vector<Rational> HomComplex::compose(int n1, const std::vector<Rational>& f,
                                          int n2, const std::vector<Rational>& g) const {
    assert(&v_ == &w_ || v_ == w_); // composition needs an endomorphism complex
    ComplexMap fm = unflatten(n1, f), gm = unflatten(n2, g);
    return flatten(fm.compose(gm));
}

HomComplex hom_complex(const GradedComplex& v, const GradedComplex& w) {
    return HomComplex(v, w);
}

} // namespace corecx
