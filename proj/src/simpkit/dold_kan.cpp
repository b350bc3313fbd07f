#include "simpkit/dold_kan.hpp"

#include <algorithm>
#include <stdexcept>

namespace simpkit {

bool is_chain_map_nn(const ChainComplexNN& v, const ChainComplexNN& w, const ChainMapNN& f) {
    if (int(f.blocks.size()) != v.levels() + 1) return false;
    for (int n = 0; n <= v.levels(); ++n)
        if (f.block(n).rows() != w.dim(n) || f.block(n).cols() != v.dim(n)) return false;
    for (int n = 1; n <= v.levels(); ++n) {
        Mat wd = (n <= w.levels()) ? w.d(n) : Mat(w.dim(n - 1), w.dim(n));
        if (f.block(n - 1) * v.d(n) != wd * f.block(n)) return false;
    }
    return true;
}

bool is_simplicial_map(const SimplicialVectorSpace& s, const SimplicialVectorSpace& t,
                       const SimplicialMap& f) {
    int N = std::min(s.N, t.N);
    if (int(f.level.size()) != N + 1) return false;
    for (int n = 0; n <= N; ++n)
        if (f.level[size_t(n)].rows() != t.dim(n) || f.level[size_t(n)].cols() != s.dim(n)) return false;
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            if (f.level[size_t(n) - 1] * s.d_face(n, i) != t.d_face(n, i) * f.level[size_t(n)])
                return false;
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            if (f.level[size_t(n) + 1] * s.d_degen(n, j) != t.d_degen(n, j) * f.level[size_t(n)])
                return false;
    return true;
}

ChainComplexNN pad_levels(const ChainComplexNN& v, int N) {
    if (N < v.levels()) throw std::invalid_argument("pad_levels cannot drop levels");
    std::vector<int> dims(size_t(N) + 1, 0);
    std::vector<Mat> delta(size_t(N) + 1);
    for (int n = 0; n <= v.levels(); ++n) dims[size_t(n)] = v.dim(n);
    for (int n = 1; n <= N; ++n)
        delta[size_t(n)] = (n <= v.levels()) ? v.d(n) : Mat(v.dim(n - 1), 0);
    return make_chain_complex(std::move(dims), std::move(delta));
}

std::vector<std::vector<int>> surjections(int n, int p) {
    std::vector<std::vector<int>> out;
    if (p < 0 || p > n) return out;
    // choose the p steps j with eta(j+1) = eta(j)+1 among the n steps
    std::vector<int> jumps(size_t(p), 0);
    for (int k = 0; k < p; ++k) jumps[size_t(k)] = k;
    while (true) {
        std::vector<int> eta(size_t(n) + 1, 0);
        for (int j = 0, v = 0, k = 0; j < n; ++j) {
            if (k < p && jumps[size_t(k)] == j) {
                ++v;
                ++k;
            }
            eta[size_t(j) + 1] = v;
        }
        out.push_back(std::move(eta));
        // next lexicographic p-combination of {0..n-1}
        int k = p - 1;
        while (k >= 0 && jumps[size_t(k)] == n - p + k) --k;
        if (k < 0) break;
        ++jumps[size_t(k)];
        for (int l = k + 1; l < p; ++l) jumps[size_t(l)] = jumps[size_t(l) - 1] + 1;
    }
    return out;
}

DkLayout dk_layout(const ChainComplexNN& v, int n) {
    DkLayout lay;
    for (int p = 0; p <= n; ++p)
        for (auto& eta : surjections(n, p)) {
            lay.summands.push_back({p, eta, lay.total, v.dim(p)});
            lay.total += v.dim(p);
        }
    return lay;
}

Mat dk_operator(const ChainComplexNN& v, const std::vector<int>& alpha, int n) {
    int m = int(alpha.size()) - 1;
    if (m < 0) throw std::invalid_argument("operator needs a nonempty source");
    for (int j = 0; j < m; ++j)
        if (alpha[size_t(j)] > alpha[size_t(j) + 1]) throw std::invalid_argument("operator not monotone");
    if (alpha.front() < 0 || alpha.back() > n) throw std::invalid_argument("operator out of range");
    DkLayout src = dk_layout(v, n);
    DkLayout tgt = dk_layout(v, m);
    Mat op(tgt.total, src.total);
    for (const auto& s : src.summands) {
        if (s.dim == 0) continue; // every component out of this summand has no columns
        // epi part of eta(alpha): ranks of values; monic part: the values hit
        std::vector<int> w(size_t(m) + 1);
        for (int j = 0; j <= m; ++j) w[size_t(j)] = s.eta[size_t(alpha[size_t(j)])];
        std::vector<int> distinct;
        for (int x : w)
            if (distinct.empty() || distinct.back() != x) distinct.push_back(x);
        int q = int(distinct.size()) - 1;
        std::vector<int> epi(size_t(m) + 1);
        for (int j = 0, r = 0; j <= m; ++j) {
            if (j > 0 && w[size_t(j)] != w[size_t(j) - 1]) ++r;
            epi[size_t(j)] = r;
        }
        bool monic_is_id = (q == s.p);
        bool monic_misses_top = (q == s.p - 1);
        for (int k = 0; k <= q; ++k)
            if (distinct[size_t(k)] != k) monic_is_id = monic_misses_top = false;
        if (!monic_is_id && !monic_misses_top) continue;
        const DkSummand* t = nullptr;
        for (const auto& cand : tgt.summands)
            if (cand.p == q && cand.eta == epi) {
                t = &cand;
                break;
            }
        if (!t) throw std::logic_error("epi part of a surjection composite not found");
        if (monic_is_id) {
            for (int r = 0; r < s.dim; ++r) op.at(t->offset + r, s.offset + r) = 1;
        } else {
            const Mat& d = v.d(s.p); // dim V_{p-1} x dim V_p
            for (int r = 0; r < d.rows(); ++r)
                for (int c = 0; c < d.cols(); ++c) op.at(t->offset + r, s.offset + c) = d.at(r, c);
        }
    }
    return op;
}

namespace {

std::vector<int> coface_values(int n, int i) {
    // [n-1] -> [n] skipping i
    std::vector<int> a;
    for (int v = 0; v <= n; ++v)
        if (v != i) a.push_back(v);
    return a;
}

std::vector<int> codegeneracy_values(int n, int j) {
    // [n+1] -> [n] hitting j twice
    std::vector<int> a;
    for (int v = 0; v <= n; ++v) {
        a.push_back(v);
        if (v == j) a.push_back(v);
    }
    return a;
}

} // namespace

SimplicialVectorSpace denormalize(const ChainComplexNN& v, int N) {
    if (N < 0) throw std::invalid_argument("truncation level must be nonnegative");
    SimplicialVectorSpace s;
    s.N = N;
    s.dims.resize(size_t(N) + 1);
    s.face.resize(size_t(N) + 1);
    s.degen.resize(size_t(N) + 1);
    for (int n = 0; n <= N; ++n) s.dims[size_t(n)] = dk_layout(v, n).total;
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i) s.face[size_t(n)].push_back(dk_operator(v, coface_values(n, i), n));
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            s.degen[size_t(n)].push_back(dk_operator(v, codegeneracy_values(n, j), n));
    return s;
}

SimplicialMap denormalize_map(const ChainComplexNN& v, const ChainComplexNN& w,
                              const ChainMapNN& f, int N) {
    SimplicialMap out;
    for (int n = 0; n <= N; ++n) {
        DkLayout lv = dk_layout(v, n);
        DkLayout lw = dk_layout(w, n);
        if (lv.summands.size() != lw.summands.size())
            throw std::logic_error("denormalization layouts disagree");
        Mat m(lw.total, lv.total);
        for (size_t k = 0; k < lv.summands.size(); ++k) {
            const auto& sv = lv.summands[k];
            const auto& sw = lw.summands[k];
            if (sv.p > f.levels() || sv.dim == 0 || sw.dim == 0) continue;
            const Mat& blk = f.block(sv.p);
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c) m.at(sw.offset + r, sv.offset + c) = blk.at(r, c);
        }
        out.level.push_back(std::move(m));
    }
    return out;
}

ChainMapNN normalize_map(const Normalization& nv, const Normalization& nw,
                         const SimplicialMap& f) {
    ChainMapNN out;
    size_t levels = std::min(nv.basis.size(), std::min(nw.basis.size(), f.level.size()));
    for (size_t n = 0; n < levels; ++n)
        out.blocks.push_back(nw.projection[n] * f.level[n] * nv.basis[n]);
    return out;
}

} // namespace simpkit
