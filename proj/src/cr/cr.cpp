#include "ctknot/cr.hpp"

#include "ctknot/error.hpp"

namespace ctknot {

CROperator CROperator::heisenberg() {
    return {Polynomial::constant(GaussianRational::i()),
            Polynomial::variable(Var::z) * GaussianRational(2), Name::Heisenberg};
}

CROperator CROperator::sphere() {
    return {Polynomial::variable(Var::w), -Polynomial::variable(Var::z), Name::Sphere};
}

const char* to_string(CROperator::Name name) {
    switch (name) {
        case CROperator::Name::Heisenberg: return "heisenberg";
        case CROperator::Name::Sphere: return "sphere";
        case CROperator::Name::Custom: return "custom";
    }
    return "custom";
}

CROperator cr_from_rho(const Polynomial& rho) {
    if (rho.form() != Form::Ambient) {
        throw Error(ErrorKind::WrongForm, "defining function must be in ambient form");
    }
    if (!(conjugate(rho) == rho)) {
        throw Error(ErrorKind::NotReal, "defining function is not real-valued: " + rho.to_string());
    }
    CROperator op{wirtinger(rho, Var::wb), -wirtinger(rho, Var::zb), CROperator::Name::Custom};
    const CROperator h = CROperator::heisenberg();
    const CROperator s = CROperator::sphere();
    if (op.coeff_zb == h.coeff_zb && op.coeff_wb == h.coeff_wb) {
        op.name = CROperator::Name::Heisenberg;
    } else if (op.coeff_zb == s.coeff_zb && op.coeff_wb == s.coeff_wb) {
        op.name = CROperator::Name::Sphere;
    }
    return op;
}

Polynomial apply_cr(const CROperator& op, const Polynomial& f) {
    return op.coeff_zb * wirtinger(f, Var::zb) + op.coeff_wb * wirtinger(f, Var::wb);
}

Polynomial HeisenbergSolver::solve_monomial(unsigned j, unsigned k, unsigned l) {
    const Key key{j, k, l};
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    // 1/(i(k+1)) = -i/(k+1)
    const GaussianRational inv(0, Rational(-1, static_cast<long>(k) + 1));
    Polynomial result = Polynomial::term(inv, Monomial{j, k + 1, 0, l});
    if (l > 0) {
        const GaussianRational cross = inv * GaussianRational(2 * static_cast<long>(l));
        result -= solve_monomial(j + 1, k + 1, l - 1) * cross;
    }
    std::lock_guard lock(mutex_);
    return memo_.try_emplace(key, std::move(result)).first->second;
}

Polynomial HeisenbergSolver::solve(const Polynomial& p) {
    if (p.form() != Form::Ambient) {
        throw Error(ErrorKind::WrongForm, "solve_heisenberg requires ambient form");
    }
    Polynomial f(Form::Ambient);
    for (const auto& [mono, c] : p.terms()) {
        const Polynomial base = solve_monomial(mono.j, mono.k, mono.l);
        for (const auto& [bm, bc] : base.terms()) {
            f.add_term(c * bc, Monomial{bm.j, bm.k, bm.m + mono.m, bm.l});
        }
    }
    return f;
}

std::size_t HeisenbergSolver::memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

Polynomial solve_heisenberg(const Polynomial& p) {
    HeisenbergSolver solver;
    return solver.solve(p);
}

Polynomial solve_sphere_holomorphic(const Polynomial& h) {
    if (h.form() != Form::Ambient) {
        throw Error(ErrorKind::WrongForm, "solve_sphere_holomorphic requires ambient form");
    }
    if (!h.is_holomorphic()) {
        throw Error(ErrorKind::NotHolomorphic, "input contains zb or wb: " + h.to_string());
    }
    if (!h.constant_term().is_zero()) {
        throw Error(ErrorKind::NotInRange,
                    "holomorphic input with a constant term is not in the operator range");
    }
    Polynomial h1(Form::Ambient);
    Polynomial h2(Form::Ambient);
    for (const auto& [mono, c] : h.terms()) {
        if (mono.j >= 1) {
            h1.add_term(c, Monomial{mono.j - 1, 0, mono.m, 0});
        } else {
            h2.add_term(c, Monomial{0, 0, mono.m - 1, 0});
        }
    }
    return Polynomial::variable(Var::zb) * h2 - Polynomial::variable(Var::wb) * h1;
}

Polynomial torus_knot_source(int p, int q) {
    if (p < 1 || q < 1) {
        throw Error(ErrorKind::InvalidArgument, "torus knot exponents must be positive");
    }
    Polynomial f(Form::Ambient);
    f.add_term(GaussianRational(1), Monomial{0, 1, static_cast<unsigned>(q - 1), 0});
    f.add_term(GaussianRational(-1), Monomial{static_cast<unsigned>(p - 1), 0, 0, 1});
    return f;
}

}  // namespace ctknot
