#pragma once

#include "halg/duals.hpp"
#include "halg/hopf.hpp"

namespace halg {

enum class ComoduleSide { Left, Right };

// Finite-dimensional comodule. A right comodule is a right A-module with m ↦ m(0) ⊗_A m(1) in M ⊗_A ▷U,
// a left comodule a left A-module with n ↦ n(-1) ⊗_A n(0) in U◁ ⊗_A N.
struct Comodule {
    ComoduleSide side = ComoduleSide::Right;
    std::string name = "M";
    std::vector<std::string> names;
    std::vector<Matrix> action;  // given A-action per basis of A: m·a (right) or a·n (left)
    std::vector<Vec> coaction;   // right: plain M ⊗ U (m * n + u); left: plain U ⊗ N (u * dim + m)
    std::size_t dim() const { return names.size(); }
};

// a·m = m(0)ε(m(1) t(a)) for right comodules, n·a = ε(n(-1) s(a))n(0) for left ones.
std::vector<Matrix> induced_action(const LeftBialgebroid& b, const Comodule& m);
CarrierPtr comodule_carrier(const LeftBialgebroid& b, const Comodule& m);
// M ⊗_A ▷U or U◁ ⊗_A N.
TensorSpacePtr coaction_space(const LeftBialgebroid& b, const Comodule& m);

// COMOD_COUNIT, COMOD_COASSOC, COMOD_LINEAR (for the given action), COMOD_TAKEUCHI, COMOD_INDUCED_LINEAR.
Report check_comodule(const LeftBialgebroid& b, const Comodule& m);

// U with Δ; A with a ↦ 1 ⊗ t(a) (right) resp. s(a) ⊗ 1 (left).
Comodule regular_comodule(const LeftBialgebroid& b, ComoduleSide side);
Comodule unit_comodule(const LeftBialgebroid& b, ComoduleSide side);

// λ(m) = m(1)- ⊗ m(0)ε(m(1)+).
Comodule functor_F(const LeftBialgebroid& b, const Comodule& m, const TranslationData& ltd);
// ρ(n) = ε(n(-1)[+])n(0) ⊗ n(-1)[-].
Comodule functor_G(const LeftBialgebroid& b, const Comodule& n, const TranslationData& rtd);

// M ⊗_A M' on quotient coordinates, codiagonal coaction (m ⊗ m') ↦ (m(0) ⊗ m'(0)) ⊗ m'(1)m(1) for right comodules,
// n(-1)n'(-1) ⊗ (n(0) ⊗ n'(0)) for left ones.
Comodule tensor_comodules(const LeftBialgebroid& b, const Comodule& m, const Comodule& m2);
// Same side, carrier and action, equal coactions in the balanced space.
Report compare_comodules(const LeftBialgebroid& b, const Comodule& x, const Comodule& y, const std::string& id);
// F_TENSOR, F_UNIT for right comodules (G_TENSOR, G_UNIT for left ones).
Report check_monoidality(const LeftBialgebroid& b, const Comodule& m, const Comodule& m2, const TranslationData& td);
// GF_ID and FG_ID on one comodule of each side.
Report check_quasi_inverse(const LeftBialgebroid& b, const Comodule& right, const Comodule& left, const TranslationData& ltd,
                           const TranslationData& rtd);

// Right module over a dual: action[j] is the matrix of m ↦ m·f_j.
struct DualModule {
    DualSide over = DualSide::Left;
    std::vector<std::string> names;
    std::vector<Matrix> action;
    std::size_t dim() const { return names.size(); }
    Matrix act(const Vec& f) const;
};

// m·ψ = m(0)ψ(m(1)) for right comodules over U_*, n·φ = φ(n(-1))n(0) for left comodules over U^*.
DualModule comodule_to_dual_module(const LeftBialgebroid& b, const Comodule& m, const DualBialgebroid& d);
// DMOD_ASSOC, DMOD_UNIT.
Report check_dual_module(const DualBialgebroid& d, const DualModule& m);
// m ↦ Σ m e^i ⊗ e_i with the dual basis of ▷U (needs U_* generators).
Comodule dual_module_to_comodule(const LeftBialgebroid& b, const DualModule& m, const DualBialgebroid& d);
// m ⤙ φ = m e^i ε(e_i+ s(φ(e_i-))) on a right U_*-module.
DualModule derived_ustar_action(const LeftBialgebroid& b, const DualModule& m, const DualBialgebroid& left, const DualBialgebroid& right,
                                const TranslationData& ltd);
// m·f = m·g(f) for a linear map g into the acting dual, giving a module over `over`.
DualModule restrict_along(const DualModule& m, const Matrix& g, DualSide over);
// U_* over itself by right multiplication.
DualModule regular_dual_module(const DualBialgebroid& d);
// Matrix-for-matrix equality of two actions.
Report compare_dual_modules(const DualModule& x, const DualModule& y, const std::string& id);
// EQUIVARIANCE: (ψ'ψ'') ⤙ φ = ψ'(ψ'' ⤙ φ) on the regular U_*-module.
Report check_equivariance(const DualBialgebroid& left, const DualModule& derived);

}  // namespace halg
