// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace onesided {

struct Interval {
    double lo = -1.0;
    double hi = 1.0;

    [[nodiscard]] double width() const { return hi - lo; }
    [[nodiscard]] bool contains(double x, double tol = 0.0) const {
        return x >= lo - tol && x <= hi + tol;
    }
};

enum class BasisKind { chebyshev };

/// Algebraic polynomial stored as Chebyshev coefficients c_j of T_j(s), where
/// s in [-1, 1] is the affine image of x in the domain [lo, hi].
/// Immutable once built; evaluation uses the Clenshaw recurrence.
class Polynomial {
public:
    Polynomial(std::vector<double> coeffs, Interval domain = {});

    static Polynomial constant(double c, Interval domain = {});

    /// Exact change of basis from power-series coefficients m_i of x^i
    /// (x in the original domain, not the mapped variable).
    static Polynomial from_monomial(std::span<const double> monomial, Interval domain = {});

    /// Interpolant at the degree+1 Chebyshev points of the first kind.
    /// Reproduces any polynomial of degree <= `degree` up to rounding.
    static Polynomial interpolate(const std::function<double(double)>& f, int degree,
                                  Interval domain = {});

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const double> coeffs() const { return coeffs_; }
    [[nodiscard]] Interval domain() const { return domain_; }
    [[nodiscard]] BasisKind basis() const { return BasisKind::chebyshev; }

    /// Throws DomainError when x lies outside the domain (beyond a few ulps).
    [[nodiscard]] double operator()(double x) const;

    /// Maps x into [-1, 1] without checking; used on hot paths whose callers
    /// already guarantee the argument range.
    [[nodiscard]] double eval_unchecked(double x) const;

    [[nodiscard]] Polynomial operator+(const Polynomial& other) const;
    [[nodiscard]] Polynomial operator-(const Polynomial& other) const;
    [[nodiscard]] Polynomial operator*(double scale) const;
    [[nodiscard]] Polynomial operator+(double shift) const;
    [[nodiscard]] Polynomial operator-() const { return *this * -1.0; }

    /// Exact integral over the whole domain.
    [[nodiscard]] double integral() const;

private:
    std::vector<double> coeffs_;
    Interval domain_;
};

inline Polynomial operator-(double c, const Polynomial& p) { return (-p) + c; }

/// Clenshaw evaluation of sum_j c_j T_j(s), s in [-1, 1].
[[nodiscard]] double clenshaw(std::span<const double> coeffs, double s);

/// Chebyshev points of the first kind on [lo, hi], ascending.
[[nodiscard]] std::vector<double> chebyshev_points(int count, Interval domain);

/// eval_poly: checked evaluation of a polynomial at x.
[[nodiscard]] inline double eval_poly(const Polynomial& poly, double x) { return poly(x); }

}  // namespace onesided
