#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include "ctknot/polynomial.hpp"

namespace ctknot::testing {

/// Random ambient polynomial of total degree <= max_degree with small
/// Gaussian-rational coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, unsigned max_degree, int max_terms = 6,
                              bool holomorphic = false) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<unsigned> exp(0, max_degree);
    Polynomial p;
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial mono;
        unsigned budget = exp(rng);
        unsigned* slots[4] = {&mono.j, &mono.k, &mono.m, &mono.l};
        std::uniform_int_distribution<int> slot(0, holomorphic ? 1 : 3);
        while (budget-- > 0) {
            int s = slot(rng);
            if (holomorphic && s == 1) s = 2;
            ++*slots[s];
        }
        const GaussianRational c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        p.add_term(c, mono);
    }
    return p;
}

/// Point of the Heisenberg group with |z| <= 1.5 and |u| <= 2.
inline PointC2 random_h_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::complex<double> z = std::polar(1.5 * std::sqrt(unit(rng)), 2 * std::numbers::pi * unit(rng));
    return {z, {-2.0 + 4.0 * unit(rng), std::norm(z)}};
}

inline PointC2 random_c2_point(std::mt19937_64& rng, double radius = 1.0) {
    std::uniform_real_distribution<double> c(-radius, radius);
    return {{c(rng), c(rng)}, {c(rng), c(rng)}};
}

using ComplexFn = std::function<std::complex<double>(const PointC2&)>;

/// Central-difference Wirtinger derivatives d/dzb and d/dwb of a numeric function.
inline std::complex<double> d_zb(const ComplexFn& f, const PointC2& x, double h = 1e-5) {
    const std::complex<double> i(0, 1);
    const auto fx = (f({x.z + h, x.w}) - f({x.z - h, x.w})) / (2 * h);
    const auto fy = (f({x.z + i * h, x.w}) - f({x.z - i * h, x.w})) / (2 * h);
    return 0.5 * (fx + i * fy);
}

inline std::complex<double> d_wb(const ComplexFn& f, const PointC2& x, double h = 1e-5) {
    const std::complex<double> i(0, 1);
    const auto fx = (f({x.z, x.w + h}) - f({x.z, x.w - h})) / (2 * h);
    const auto fy = (f({x.z, x.w + i * h}) - f({x.z, x.w - i * h})) / (2 * h);
    return 0.5 * (fx + i * fy);
}

inline Polynomial P(const char* text) { return parse_poly(text); }

}  // namespace ctknot::testing
