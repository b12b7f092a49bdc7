// SPDX-License-Identifier: Apache-2.0
#include "onesided/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "onesided/errors.hpp"

namespace onesided {

namespace {

double to_reference(Interval d, double x) {
    return (2.0 * x - d.lo - d.hi) / (d.hi - d.lo);
}

bool same_domain(Interval a, Interval b) { return a.lo == b.lo && a.hi == b.hi; }

}  // namespace

double clenshaw(std::span<const double> coeffs, double s) {
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 1;) {
        const double b0 = coeffs[j] + 2.0 * s * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return coeffs.empty() ? 0.0 : coeffs[0] + s * b1 - b2;
}

std::vector<double> chebyshev_points(int count, Interval domain) {
    std::vector<double> pts(static_cast<std::size_t>(count));
    const double mid = 0.5 * (domain.lo + domain.hi);
    const double half = 0.5 * domain.width();
    for (int j = 0; j < count; ++j) {
        // j-th point counted from the left end
        const double theta = std::numbers::pi * (count - j - 0.5) / count;
        pts[static_cast<std::size_t>(j)] = mid + half * std::cos(theta);
    }
    return pts;
}

Polynomial::Polynomial(std::vector<double> coeffs, Interval domain)
    : coeffs_(std::move(coeffs)), domain_(domain) {
    if (coeffs_.empty()) throw ArgumentError("polynomial needs at least one coefficient");
    if (!(domain_.lo < domain_.hi)) throw ArgumentError("polynomial domain must satisfy lo < hi");
}

Polynomial Polynomial::constant(double c, Interval domain) { return Polynomial({c}, domain); }

Polynomial Polynomial::from_monomial(std::span<const double> monomial, Interval domain) {
    if (monomial.empty()) throw ArgumentError("empty monomial coefficient list");
    // Horner's scheme carried out in Chebyshev arithmetic:
    // x = mid + half*s and s*T_j = (T_{j+1} + T_{|j-1|}) / 2.
    const double mid = 0.5 * (domain.lo + domain.hi);
    const double half = 0.5 * (domain.hi - domain.lo);
    const std::size_t n = monomial.size();
    std::vector<double> acc(n, 0.0);
    std::vector<double> times_s(n, 0.0);
    acc[0] = monomial[n - 1];
    std::size_t used = 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        std::fill(times_s.begin(), times_s.end(), 0.0);
        for (std::size_t j = 0; j < used; ++j) {
            if (j == 0) {
                times_s[1] += acc[0];
            } else {
                times_s[j + 1] += 0.5 * acc[j];
                times_s[j - 1] += 0.5 * acc[j];
            }
        }
        ++used;
        for (std::size_t j = 0; j < used; ++j) acc[j] = mid * acc[j] + half * times_s[j];
        acc[0] += monomial[i];
    }
    return Polynomial(std::move(acc), domain);
}

Polynomial Polynomial::interpolate(const std::function<double(double)>& f, int degree,
                                   Interval domain) {
    if (degree < 0) throw ArgumentError("interpolation degree must be non-negative");
    const int count = degree + 1;
    const auto pts = chebyshev_points(count, domain);
    std::vector<double> values(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) values[j] = f(pts[j]);

    std::vector<double> coeffs(static_cast<std::size_t>(count), 0.0);
    for (int m = 0; m < count; ++m) {
        double sum = 0.0;
        for (int j = 0; j < count; ++j) {
            // pts[j] corresponds to theta = pi (count - j - 1/2) / count
            const double theta = std::numbers::pi * (count - j - 0.5) / count;
            sum += values[static_cast<std::size_t>(j)] * std::cos(m * theta);
        }
        coeffs[static_cast<std::size_t>(m)] = (m == 0 ? 1.0 : 2.0) * sum / count;
    }
    return Polynomial(std::move(coeffs), domain);
}

double Polynomial::operator()(double x) const {
    const double tol = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::max({1.0, std::abs(domain_.lo), std::abs(domain_.hi)});
    if (!domain_.contains(x, tol)) {
        std::ostringstream msg;
        msg << "polynomial evaluated at x=" << x << " outside [" << domain_.lo << ", "
            << domain_.hi << "]";
        throw DomainError(msg.str());
    }
    return clenshaw(coeffs_, std::clamp(to_reference(domain_, x), -1.0, 1.0));
}

double Polynomial::eval_unchecked(double x) const {
    return clenshaw(coeffs_, to_reference(domain_, x));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (!same_domain(domain_, other.domain_))
        throw ArgumentError("cannot add polynomials on different domains");
    std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] += coeffs_[j];
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[j] += other.coeffs_[j];
    return Polynomial(std::move(c), domain_);
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(double scale) const {
    std::vector<double> c = coeffs_;
    for (double& v : c) v *= scale;
    return Polynomial(std::move(c), domain_);
}

Polynomial Polynomial::operator+(double shift) const {
    std::vector<double> c = coeffs_;
    c[0] += shift;
    return Polynomial(std::move(c), domain_);
}

double Polynomial::integral() const {
    double sum = 0.0;
    for (std::size_t j = 0; j < coeffs_.size(); j += 2) {
        const double jj = static_cast<double>(j);
        sum += coeffs_[j] * 2.0 / (1.0 - jj * jj);
    }
    return 0.5 * domain_.width() * sum;
}

}  // namespace onesided
