#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "ctknot/polynomial.hpp"

namespace ctknot {

/// First-order derivation  coeff_zb * d/dzb + coeff_wb * d/dwb.
struct CROperator {
    enum class Name { Heisenberg, Sphere, Custom };

    Polynomial coeff_zb;
    Polynomial coeff_wb;
    Name name = Name::Custom;

    /// i d/dzb + 2z d/dwb
    static CROperator heisenberg();
    /// w d/dzb - z d/dwb
    static CROperator sphere();
};

const char* to_string(CROperator::Name name);

/// Tangential CR operator of {rho = 0}: (d rho/d wb) d/dzb - (d rho/d zb) d/dwb.
/// Throws NotReal unless conjugate(rho) == rho.
CROperator cr_from_rho(const Polynomial& rho);

Polynomial apply_cr(const CROperator& op, const Polynomial& f);

/// Right inverse of the Heisenberg operator on polynomials. For a monomial
/// z^j zb^k w^m wb^l the w^m factor passes through the operator untouched;
/// the rest is solved by recursion on the wb-exponent:
///
///   S(j,k,0) = z^j zb^(k+1) / (i(k+1))
///   S(j,k,l) = z^j zb^(k+1) wb^l / (i(k+1)) - 2l/(i(k+1)) * S(j+1, k+1, l-1)
///
/// Chains revisit shifted exponents, so solutions are memoized by (j,k,l).
/// The memo is guarded; one solver may be shared between threads.
class HeisenbergSolver {
public:
    Polynomial solve(const Polynomial& p);
    std::size_t memo_size() const;

private:
    using Key = std::tuple<unsigned, unsigned, unsigned>;

    Polynomial solve_monomial(unsigned j, unsigned k, unsigned l);

    mutable std::mutex mutex_;
    std::map<Key, Polynomial> memo_;
};

Polynomial solve_heisenberg(const Polynomial& p);

/// Solves sphere-operator(f) = h for holomorphic h without constant term by
/// splitting h = z h1 + w h2 (z-division preferred) and returning zb h2 - wb h1.
Polynomial solve_sphere_holomorphic(const Polynomial& h);

/// w^(q-1) zb - z^(p-1) wb, whose sphere CR image is z^p + w^q.
Polynomial torus_knot_source(int p, int q);

}  // namespace ctknot
