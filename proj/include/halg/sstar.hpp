#pragma once

#include "halg/duals.hpp"
#include "halg/hopf.hpp"

namespace halg {

// S*: U^* -> U_* (RightToLeft) or S_*: U_* -> U^* (LeftToRight), as a matrix between dual coordinates.
struct LinkingMorphism {
    enum class Direction { RightToLeft, LeftToRight };
    Direction direction = Direction::RightToLeft;
    Matrix linear;
    Vec operator()(const Vec& x) const { return linear.apply(x); }
};

// S*(φ)(u) = ε(u+ t(φ(u-))); `right` is U^*, `left` is U_*.
LinkingMorphism compute_sstar(const LeftBialgebroid& b, const TranslationData& ltd, const DualBialgebroid& right, const DualBialgebroid& left);
// S_*(ψ)(u) = ε(u[+] s(ψ(u[-]))).
LinkingMorphism compute_sstardown(const LeftBialgebroid& b, const TranslationData& rtd, const DualBialgebroid& left, const DualBialgebroid& right);

// Exotic left U-action on a dual: (uφ)(m) = u+(φ(u- m)) on U^*, (uψ)(m) = u[+](ψ(u[-] m)) on U_*.
// Returns the matrix of u acting on dual coordinates.
Matrix dual_exotic_action(const LeftBialgebroid& b, const TranslationData& td, const DualBialgebroid& d, const Vec& u);

// S*(φ) as (1·φ)(1) through the exotic action, and through the dual basis: Σ e^i(u) ε(e_i+ s(φ(e_i-))).
// SSTAR_ROUTES (resp. SSTARDOWN_ROUTES).
Report check_sstar_routes(const LeftBialgebroid& b, const TranslationData& td, const DualBialgebroid& from, const DualBialgebroid& to,
                          const LinkingMorphism& f);

// MORPH_SOURCE, MORPH_TARGET, MORPH_COUNIT (a); MORPH_MULT (b); MORPH_COPROD (c, when both coproducts exist;
// degree-wise up to max_degree on filtered U); MORPH_ULINEAR.
Report check_theorem_morphism(const LeftBialgebroid& b, const TranslationData& td, const DualBialgebroid& from, const DualBialgebroid& to,
                              const LinkingMorphism& f, int max_degree = -1);
// Only the coproduct square, pairs (u, v) with deg u + deg v <= n (MORPH_COPROD).
Report check_coproduct_square(const LeftBialgebroid& b, const DualBialgebroid& from, const DualBialgebroid& to, const LinkingMorphism& f,
                              int n = -1);

// INV_DOWN_UP: S_* S* = id on U^*; INV_UP_DOWN: S* S_* = id on U_*.
Report check_theorem_inverse(const LinkingMorphism& sstar, const LinkingMorphism& sdown);

// A = k: matrix(S*) = transpose(S) in the δ-basis (SSTAR_TRANSPOSE).
Report check_sstar_transpose(const LeftBialgebroid& b, const Matrix& S, const LinkingMorphism& sstar, const DualBialgebroid& right,
                             const DualBialgebroid& left);

// (H^r)^op_coop as a left bialgebroid over A: (H^op, S s, S t, Δ_r flipped, ν^{-1} ∂).
LeftBialgebroid op_coop_right(const FullHopfAlgebroid& h);
// ᵗS(φ) = φ ∘ S between the duals of K = (H^r)^op_coop and of H^ℓ.
Matrix transpose_antipode(const FullHopfAlgebroid& h, const DualBialgebroid& from_k, const DualBialgebroid& to_h);
// K_LEFT_BIALGEBROID, S_TO_K (S: H^ℓ -> K is a bialgebroid map), TS_TOP, TS_BOTTOM (ᵗS lands in the duals), SQUARE.
Report transpose_antipode_square(const FullHopfAlgebroid& h);

// ᵗS(φ)(X) - S*(φ)(X) = ∂(φ(1)X) for every basis functional φ of U^* and X in xs: SSTAR_TS_DIFFERENCE.
// `witness` receives the first nonzero difference, if any.
struct DifferenceWitness {
    bool found = false;
    std::string functional, element;
    Vec value;
};
Report antipode_vs_sstar_difference(const FullHopfAlgebroid& h, const std::vector<std::size_t>& xs, DifferenceWitness* witness = nullptr);

// Cocommutative case: throws NotCocommutative unless s = t and Δ is cocommutative.
// COCOMM_SAME_DUAL, COCOMM_SSTAR_EQ, COCOMM_INVOLUTIVE, COCOMM_PRODUCT, COCOMM_COUNIT, COCOMM_COOPPOSITE,
// and for unfiltered U the full Hopf checks of the dual with antipode 𝒮 (prefix DUAL_).
Report check_cocommutative_full_hopf(const LeftBialgebroid& b, const DualBialgebroid& right, const DualBialgebroid& left,
                                     const LinkingMorphism& sstar, const LinkingMorphism& sdown);

// Per-degree S*_n on J_n = (U_n)^* for n = 0..cap, built on the truncations of the envelope, with S*_n = S_*_n, 𝒮_n^2 = id
// (TRUNC_SSTAR_EQ_n, TRUNC_INVOLUTIVE_n) and agreement with the restriction of S*_cap (TRUNC_STABLE_n), plus the coproduct
// square at degree n_diagram on the cap instance (TRUNC_DIAGRAM).
struct TruncatedSstar {
    std::vector<Matrix> sstar;  // index n
    Report report;
};
TruncatedSstar truncated_sstar(const std::function<LeftBialgebroid(int)>& at_cap, int cap, int n_diagram);

// Mixed distributive law χ(ψ ⊗ φ) = φ(1) ⊗ ψ S*(φ(2)) from U_* ◀⊗^A▷ U^* to U^* ◀⊗_A▶ U_*.
struct MixedDistributiveLaw {
    Matrix chi;  // plain (U^* ⊗ U_*) x plain (U_* ⊗ U^*), canonical representatives
    TensorSpacePtr domain, codomain;
    std::vector<Vec> sstar_columns;
};
MixedDistributiveLaw mixed_distributive_law(const DualBialgebroid& left, const DualBialgebroid& right, const LinkingMorphism& sstar);
// ENTW_WELLDEF, ENTW_MULT, ENTW_UNIT, ENTW_COMULT, ENTW_COUNIT.
Report check_entwining(const DualBialgebroid& left, const DualBialgebroid& right, const MixedDistributiveLaw& chi);

}  // namespace halg
