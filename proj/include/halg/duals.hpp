#pragma once

#include "halg/bialgebroid.hpp"

#include <memory>
#include <optional>

namespace halg {

// Left dual U_* = Hom_A(▷U, A) or right dual U^* = Hom_{A^op}(U◁, A).
enum class DualSide { Left, Right };

// Functionals are stored flat: f[u * dim(A) + c] is coordinate c of f(b_u).
struct DualBialgebroid {
    DualSide side = DualSide::Left;
    std::vector<Vec> functionals;  // basis, reduced echelon
    RightBialgebroid R;            // algebra on coordinates, s^r, t^r, Δ^r (when present), ∂
    bool has_coproduct = false;
    // For truncated (filtered) U the coproduct is only determined on pairs of admissible degree.
    bool degreewise = false;
    std::string note;  // why the coproduct is missing, if it is
    // Generators e_j in U with u = Σ s(e^j(u)) e_j (left) or Σ t(e^j(u)) e_j (right), e^j = functionals[j].
    std::vector<Vec> generators;

    std::size_t dim() const { return functionals.size(); }
    std::size_t na() const { return R.na(); }
    // Coordinates of a flat functional; nullopt if it is not in the dual.
    std::optional<Vec> coords(const Vec& flat) const;
    Vec coords_or_throw(const Vec& flat) const;
    Vec flat(const Vec& coords) const;
    // f(u) for f given by coordinates.
    Vec eval(const Vec& coords, const Vec& u) const;
    Vec eval_basis(std::size_t j, std::size_t u) const;

    std::shared_ptr<const LinearSolver> solver;
};

DualBialgebroid build_dual(const LeftBialgebroid& b, DualSide side);
// Flat evaluation of a functional f: U -> A on u.
Vec eval_flat(const Vec& f, const Vec& u, std::size_t na);
// Left pairing for U_*, right pairing for U^*.
Pairing evaluation_pairing(const LeftBialgebroid& b, const DualBialgebroid& d);
// <X, u ⊗ v> for X in D ⊗ D (plain): ψ''(u s(ψ'(v))) for U_*, φ'(u t(φ''(v))) for U^*. Equals f(uv) when X = Δ(f).
Vec pair_tensor(const LeftBialgebroid& b, const DualBialgebroid& d, const Vec& x, const Vec& u, const Vec& v);
// PAIR_*, NONDEGENERATE, AUGMENTATION, COPROD_TRANSPOSE, RIGHT_* (when the coproduct is global), DOUBLE_DUAL.
Report check_dual(const LeftBialgebroid& b, const DualBialgebroid& d);

// f: B1 -> B2 on total algebras with base map g: A1 -> A2. Ids MAP_ALG, MAP_SOURCE, MAP_TARGET, MAP_COPROD, MAP_COUNIT.
Report check_bialgebroid_map(const LeftBialgebroid& b1, const LeftBialgebroid& b2, const Matrix& f, const Matrix& g);

// u ↦ (f ↦ f(u)) into the dual of the mirrored dual, as a map of left bialgebroids.
Report check_double_dual(const LeftBialgebroid& b, const DualBialgebroid& d);

}  // namespace halg
