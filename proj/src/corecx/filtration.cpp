#include "corecx/filtration.hpp"

#include <stdexcept>

namespace corecx {

Filtration::Filtration(GradedComplex complex, int p_lo, std::map<int, std::map<int, Mat>> steps)
    : complex_(std::move(complex)), p_lo_(p_lo), p_hi_(p_lo + int(steps.size()) - 1), steps_(std::move(steps)) {
    int p = p_lo_;
    for (auto& [key, per_deg] : steps_) {
        if (key != p++) throw std::invalid_argument("filtration steps must be consecutive");
        for (auto& [deg, m] : per_deg)
            if (m.rows() != complex_.dim(deg))
                throw std::invalid_argument("filtration basis has wrong ambient dimension");
    }
}

Mat Filtration::basis(int p, int deg) const {
    if (p <= p_lo_ - 1) return Mat::identity(complex_.dim(deg));
    if (p > p_hi_) return Mat(complex_.dim(deg), 0);
    auto& per_deg = steps_.at(p);
    auto it = per_deg.find(deg);
    if (it == per_deg.end()) return Mat(complex_.dim(deg), 0);
    return it->second;
}

FiltrationCheck filtration_check(const Filtration& f) {
    FiltrationCheck r;
    const GradedComplex& v = f.complex();
    for (int p = f.p_lo(); p <= f.p_hi(); ++p) {
        for (int deg = v.lo(); deg <= v.hi(); ++deg) {
            Mat b = f.basis(p, deg);
            if (rank(b) != b.cols()) {
                r = {false, FiltrationCheck::Fail::rank_deficient, p, deg, {}};
                return r;
            }
            Mat prev = f.basis(p - 1, deg);
            for (int j = 0; j < b.cols(); ++j) {
                if (!in_span(prev, b.col_vec(j))) {
                    r = {false, FiltrationCheck::Fail::nesting, p, deg, b.col_vec(j)};
                    return r;
                }
            }
            Mat next_basis = f.basis(p, deg + 1);
            for (int j = 0; j < b.cols(); ++j) {
                std::vector<Rational> img = v.d(deg) * b.col_vec(j);
                if (!in_span(next_basis, img)) {
                    r = {false, FiltrationCheck::Fail::d_stability, p, deg, b.col_vec(j)};
                    return r;
                }
            }
        }
    }
    return r;
}

Filtration trivial_filtration(const GradedComplex& v) {
    std::map<int, std::map<int, Mat>> steps;
    steps[1] = {};
    return Filtration(v, 1, std::move(steps));
}

} // namespace corecx
