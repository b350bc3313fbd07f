#include "simpkit/affine.hpp"

#include <map>
#include <stdexcept>

namespace simpkit {

using corecx::add_vec;
using corecx::zero_vec;

namespace {

void paste(Mat& dst, const Mat& blk, int r0, int c0) {
    for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c) dst.at(r0 + r, c0 + c) = blk.at(r, c);
}

struct AffinePair {
    Mat m;
    std::vector<Rational> t;
};

// p2 after p1
AffinePair pair_compose(const AffinePair& p2, const AffinePair& p1) {
    return {p2.m * p1.m, add_vec(p2.m * p1.t, p2.t)};
}

bool pair_eq(const AffinePair& a, const AffinePair& b) { return a.m == b.m && a.t == b.t; }

} // namespace

AffineComplex unit_affine() {
    AffineComplex u;
    u.v = make_chain_complex({0}, {Mat()});
    return u;
}

AffineMap affine_compose(const AffineMap& g, const AffineMap& f) {
    AffineMap out;
    size_t levels = std::min(g.f.blocks.size(), f.f.blocks.size());
    for (size_t n = 0; n < levels; ++n) out.f.blocks.push_back(g.f.blocks[n] * f.f.blocks[n]);
    out.b = add_vec(g.f.block(0) * f.b, g.b);
    return out;
}

bool is_affine_chain_map(const AffineComplex& src, const AffineComplex& tgt, const AffineMap& phi) {
    if (int(phi.b.size()) != tgt.v.dim(0)) return false;
    return is_chain_map_nn(src.v, tgt.v, phi.f);
}

SimplicialCheck check_affine_simplicial(const SimplicialAffineSpace& s) {
    SimplicialCheck lin = check_simplicial(s.lin);
    if (!lin.ok) return lin;
    auto fail = [](std::string d) { return SimplicialCheck{false, std::move(d)}; };
    int N = s.lin.N;
    if (int(s.face_tr.size()) != N + 1 || int(s.degen_tr.size()) != N + 1)
        return fail("translation table size mismatch");
    for (int n = 1; n <= N; ++n) {
        if (int(s.face_tr[size_t(n)].size()) != n + 1)
            return fail("face translation count at level " + std::to_string(n));
        for (int i = 0; i <= n; ++i)
            if (int(s.face_tr[size_t(n)][size_t(i)].size()) != s.lin.dim(n - 1))
                return fail("face translation shape at level " + std::to_string(n));
    }
    for (int n = 0; n < N; ++n) {
        if (int(s.degen_tr[size_t(n)].size()) != n + 1)
            return fail("degeneracy translation count at level " + std::to_string(n));
        for (int j = 0; j <= n; ++j)
            if (int(s.degen_tr[size_t(n)][size_t(j)].size()) != s.lin.dim(n + 1))
                return fail("degeneracy translation shape at level " + std::to_string(n));
    }
    auto face = [&](int n, int i) {
        return AffinePair{s.lin.d_face(n, i), s.face_tr[size_t(n)][size_t(i)]};
    };
    auto degen = [&](int n, int j) {
        return AffinePair{s.lin.d_degen(n, j), s.degen_tr[size_t(n)][size_t(j)]};
    };
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!pair_eq(pair_compose(face(n - 1, i), face(n, j)),
                             pair_compose(face(n - 1, j - 1), face(n, i))))
                    return fail("affine face-face identity at level " + std::to_string(n));
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (!pair_eq(pair_compose(degen(n + 1, i), degen(n, j)),
                             pair_compose(degen(n + 1, j + 1), degen(n, i))))
                    return fail("affine degeneracy-degeneracy identity at level " + std::to_string(n));
    for (int n = 0; n + 1 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                AffinePair lhs = pair_compose(face(n + 1, i), degen(n, j));
                AffinePair rhs;
                if (i == j || i == j + 1)
                    rhs = {Mat::identity(s.lin.dim(n)), zero_vec(s.lin.dim(n))};
                else if (i < j)
                    rhs = pair_compose(degen(n - 1, j - 1), face(n, i));
                else
                    rhs = pair_compose(degen(n - 1, j), face(n, i - 1));
                if (!pair_eq(lhs, rhs))
                    return fail("affine face-degeneracy identity at level " + std::to_string(n));
            }
    return {};
}

bool is_simplicial_affine_map(const SimplicialAffineSpace& s, const SimplicialAffineSpace& t,
                              const SimplicialAffineMap& f) {
    int N = std::min(s.lin.N, t.lin.N);
    if (int(f.lin.size()) != N + 1 || int(f.tr.size()) != N + 1) return false;
    SimplicialMap linmap{f.lin};
    if (!is_simplicial_map(s.lin, t.lin, linmap)) return false;
    for (int n = 0; n <= N; ++n)
        if (int(f.tr[size_t(n)].size()) != t.lin.dim(n)) return false;
    auto level = [&](int n) { return AffinePair{f.lin[size_t(n)], f.tr[size_t(n)]}; };
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i) {
            AffinePair sface{s.lin.d_face(n, i), s.face_tr[size_t(n)][size_t(i)]};
            AffinePair tface{t.lin.d_face(n, i), t.face_tr[size_t(n)][size_t(i)]};
            if (!pair_eq(pair_compose(level(n - 1), sface), pair_compose(tface, level(n))))
                return false;
        }
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j) {
            AffinePair sdeg{s.lin.d_degen(n, j), s.degen_tr[size_t(n)][size_t(j)]};
            AffinePair tdeg{t.lin.d_degen(n, j), t.degen_tr[size_t(n)][size_t(j)]};
            if (!pair_eq(pair_compose(level(n + 1), sdeg), pair_compose(tdeg, level(n))))
                return false;
        }
    return true;
}

SimplicialAffineSpace affine_denormalize(const AffineComplex& a, int N) {
    SimplicialAffineSpace s;
    s.lin = denormalize(a.v, N);
    s.face_tr.resize(size_t(N) + 1);
    s.degen_tr.resize(size_t(N) + 1);
    for (int n = 1; n <= N; ++n)
        s.face_tr[size_t(n)].assign(size_t(n) + 1, zero_vec(s.lin.dim(n - 1)));
    for (int n = 0; n < N; ++n)
        s.degen_tr[size_t(n)].assign(size_t(n) + 1, zero_vec(s.lin.dim(n + 1)));
    return s;
}

SimplicialAffineMap affine_denormalize_map(const AffineComplex& v, const AffineComplex& w,
                                           const AffineMap& phi, int N) {
    SimplicialAffineMap out;
    out.lin = denormalize_map(v.v, w.v, phi.f, N).level;
    for (int n = 0; n <= N; ++n) {
        // the degree-0 summand sits first in the layout at every level
        std::vector<Rational> t = zero_vec(dk_layout(w.v, n).total);
        for (int k = 0; k < w.v.dim(0); ++k) t[size_t(k)] = phi.b[size_t(k)];
        out.tr.push_back(std::move(t));
    }
    return out;
}

AffineNormalization affine_normalize(const SimplicialAffineSpace& s) {
    SimplicialCheck chk = check_affine_simplicial(s);
    if (!chk.ok) throw std::invalid_argument("affine simplicial identities fail: " + chk.detail);
    AffineNormalization out;
    out.lin = normalize(s.lin);
    out.complex = AffineComplex{out.lin.complex, true};
    return out;
}

AffineMap affine_normalize_map(const AffineNormalization& ns, const AffineNormalization& nt,
                               const SimplicialAffineMap& f) {
    AffineMap out;
    out.f = normalize_map(ns.lin, nt.lin, SimplicialMap{f.lin});
    out.b = nt.lin.projection[0] * f.tr[0];
    return out;
}

std::vector<PairBlock> pair_layout(const ChainComplexNN& v, const ChainComplexNN& w, int n) {
    std::vector<PairBlock> lay;
    int off = 0;
    for (int i = 0; i <= n; ++i) {
        int d = v.dim(i) * w.dim(n - i);
        lay.push_back({i, n - i, off, d});
        off += d;
    }
    return lay;
}

ChainComplexNN chain_tensor(const ChainComplexNN& v, const ChainComplexNN& w) {
    int L = v.levels() + w.levels();
    std::vector<int> dims(size_t(L) + 1, 0);
    std::vector<Mat> delta(size_t(L) + 1);
    for (int n = 0; n <= L; ++n) {
        auto lay = pair_layout(v, w, n);
        dims[size_t(n)] = lay.empty() ? 0 : lay.back().offset + lay.back().dim;
    }
    for (int n = 1; n <= L; ++n) {
        auto src = pair_layout(v, w, n);
        auto tgt = pair_layout(v, w, n - 1);
        Mat m(dims[size_t(n) - 1], dims[size_t(n)]);
        for (const auto& s : src) {
            if (s.dim == 0) continue;
            if (s.i >= 1 && v.dim(s.i - 1) > 0)
                paste(m, kron(v.d(s.i), Mat::identity(w.dim(s.j))), tgt[size_t(s.i) - 1].offset,
                      s.offset);
            if (s.j >= 1 && w.dim(s.j - 1) > 0) {
                Rational sign = (s.i % 2 == 0) ? 1 : -1;
                paste(m, kron(Mat::identity(v.dim(s.i)), w.d(s.j)) * sign, tgt[size_t(s.i)].offset,
                      s.offset);
            }
        }
        delta[size_t(n)] = std::move(m);
    }
    return make_chain_complex(std::move(dims), std::move(delta));
}

AffineComplex affine_tensor(const AffineComplex& a, const AffineComplex& b) {
    ChainComplexNN t = chain_tensor(a.v, b.v);
    int L = t.levels();
    std::vector<int> dims(size_t(L) + 1);
    std::vector<Mat> delta(size_t(L) + 1);
    for (int n = 0; n <= L; ++n) dims[size_t(n)] = a.v.dim(n) + b.v.dim(n) + t.dim(n);
    for (int n = 1; n <= L; ++n) {
        Mat m(dims[size_t(n) - 1], dims[size_t(n)]);
        if (n <= a.v.levels()) paste(m, a.v.d(n), 0, 0);
        if (n <= b.v.levels()) paste(m, b.v.d(n), a.v.dim(n - 1), a.v.dim(n));
        paste(m, t.d(n), a.v.dim(n - 1) + b.v.dim(n - 1), a.v.dim(n) + b.v.dim(n));
        delta[size_t(n)] = std::move(m);
    }
    AffineComplex out;
    out.v = make_chain_complex(std::move(dims), std::move(delta));
    return out;
}

AffineMap affine_tensor_map(const AffineMap& f, const AffineComplex& src_a, const AffineComplex& tgt_a,
                            const AffineMap& g, const AffineComplex& src_b, const AffineComplex& tgt_b) {
    AffineComplex src = affine_tensor(src_a, src_b);
    AffineComplex tgt = affine_tensor(tgt_a, tgt_b);
    AffineMap out;
    for (int n = 0; n <= src.v.levels(); ++n) {
        Mat m(tgt.v.dim(n), src.v.dim(n));
        if (n <= std::min(src_a.v.levels(), tgt_a.v.levels())) paste(m, f.f.block(n), 0, 0);
        if (n <= std::min(src_b.v.levels(), tgt_b.v.levels()))
            paste(m, g.f.block(n), tgt_a.v.dim(n), src_a.v.dim(n));
        auto slay = pair_layout(src_a.v, src_b.v, n);
        auto tlay = pair_layout(tgt_a.v, tgt_b.v, n);
        for (int i = 0; i <= n; ++i) {
            const auto& sb = slay[size_t(i)];
            const auto& tb = tlay[size_t(i)];
            if (sb.dim == 0 || tb.dim == 0) continue;
            paste(m, kron(f.f.block(i), g.f.block(n - i)), tgt_a.v.dim(n) + tgt_b.v.dim(n) + tb.offset,
                  src_a.v.dim(n) + src_b.v.dim(n) + sb.offset);
        }
        out.f.blocks.push_back(std::move(m));
    }
    out.b = zero_vec(tgt.v.dim(0));
    for (int k = 0; k < tgt_a.v.dim(0); ++k) out.b[size_t(k)] = f.b[size_t(k)];
    for (int k = 0; k < tgt_b.v.dim(0); ++k) out.b[size_t(tgt_a.v.dim(0)) + k] = g.b[size_t(k)];
    return out;
}

LabeledComplex label_atoms(const AffineComplex& a, const std::string& name) {
    LabeledComplex out;
    out.obj = a;
    for (int n = 0; n <= a.v.levels(); ++n) {
        std::vector<std::string> lv;
        for (int k = 0; k < a.v.dim(n); ++k)
            lv.push_back(name + "." + std::to_string(n) + "." + std::to_string(k));
        out.labels.push_back(std::move(lv));
    }
    return out;
}

LabeledComplex affine_tensor(const LabeledComplex& a, const LabeledComplex& b) {
    LabeledComplex out;
    out.obj = affine_tensor(a.obj, b.obj);
    auto at = [](const LabeledComplex& x, int n) -> std::vector<std::string> {
        if (n >= 0 && n < int(x.labels.size())) return x.labels[size_t(n)];
        return {};
    };
    for (int n = 0; n <= out.obj.v.levels(); ++n) {
        std::vector<std::string> lv;
        for (const auto& l : at(a, n)) lv.push_back(l);
        for (const auto& l : at(b, n)) lv.push_back(l);
        for (int i = 0; i <= n; ++i)
            for (const auto& la : at(a, i))
                for (const auto& lb : at(b, n - i)) lv.push_back(la + "*" + lb);
        if (int(lv.size()) != out.obj.v.dim(n)) throw std::logic_error("label bookkeeping out of step");
        out.labels.push_back(std::move(lv));
    }
    return out;
}

AffineMap label_matcher(const LabeledComplex& src, const LabeledComplex& tgt) {
    if (src.labels.size() != tgt.labels.size())
        throw std::invalid_argument("label matcher needs equal level counts");
    AffineMap out;
    for (size_t n = 0; n < src.labels.size(); ++n) {
        std::map<std::string, int> where;
        for (size_t k = 0; k < tgt.labels[n].size(); ++k)
            if (!where.emplace(tgt.labels[n][k], int(k)).second)
                throw std::invalid_argument("duplicate label " + tgt.labels[n][k]);
        if (src.labels[n].size() != tgt.labels[n].size())
            throw std::invalid_argument("label multisets disagree at level " + std::to_string(n));
        Mat m(int(tgt.labels[n].size()), int(src.labels[n].size()));
        for (size_t k = 0; k < src.labels[n].size(); ++k) {
            auto it = where.find(src.labels[n][k]);
            if (it == where.end())
                throw std::invalid_argument("unmatched label " + src.labels[n][k]);
            m.at(it->second, int(k)) = 1;
        }
        out.f.blocks.push_back(std::move(m));
    }
    out.b = zero_vec(tgt.obj.v.dim(0));
    return out;
}

} // namespace simpkit
