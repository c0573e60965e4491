#include "noisecube/cube.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace noisecube {

NoiseParam::NoiseParam(double eps_) : eps(eps_) {
    if (!(eps_ >= 0.0 && eps_ <= 0.5)) {
        throw std::domain_error("NoiseParam: eps must lie in [0, 1/2], got " +
                                std::to_string(eps_));
    }
    rho = 1.0 - 2.0 * eps_;
    lambda = rho * rho;
}

namespace {
void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension) {
        throw std::invalid_argument("CubeFunction: dimension must lie in [1, " +
                                    std::to_string(kMaxDimension) + "], got " +
                                    std::to_string(n));
    }
}
}  // namespace

CubeFunction::CubeFunction(int n) : n_(n) {
    check_dimension(n);
    values_.assign(std::size_t{1} << n, 0.0);
}

CubeFunction::CubeFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
    check_dimension(n);
    if (values_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument(
            "CubeFunction: expected 2^n values, got " +
            std::to_string(values_.size()));
    }
}

CubeFunction CubeFunction::constant(int n, double c) {
    CubeFunction f(n);
    for (auto& v : f.values_) v = c;
    return f;
}

CubeFunction CubeFunction::dictator(int n, int coord) {
    check_dimension(n);
    if (coord < 0 || coord >= n) {
        throw std::invalid_argument("dictator: coordinate out of range");
    }
    CubeFunction f(n);
    for (std::size_t x = 0; x < f.size(); ++x) {
        f.values_[x] = ((x >> coord) & 1u) == 0 ? 1.0 : 0.0;
    }
    return f;
}

CubeFunction CubeFunction::walsh(int n, mask_t s) {
    check_dimension(n);
    CubeFunction f(n);
    for (std::size_t x = 0; x < f.size(); ++x) {
        f.values_[x] = (popcount(static_cast<mask_t>(x) & s) & 1) ? -1.0 : 1.0;
    }
    return f;
}

double CubeFunction::mean() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s / static_cast<double>(values_.size());
}

double CubeFunction::mean_square() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return s / static_cast<double>(values_.size());
}

bool CubeFunction::is_boolean() const {
    for (double v : values_) {
        if (v != 0.0 && v != 1.0) return false;
    }
    return true;
}

CubeFunction CubeFunction::complement_indicator() const {
    CubeFunction g(n_);
    for (std::size_t x = 0; x < size(); ++x) g.values_[x] = 1.0 - values_[x];
    return g;
}

CubeFunction& CubeFunction::operator*=(double c) {
    for (auto& v : values_) v *= c;
    return *this;
}

}  // namespace noisecube
