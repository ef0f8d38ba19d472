#pragma once

#include "halg/aering.hpp"

#include <functional>

namespace halg {

// Left bialgebroid (U, A, s, t, Δ, ε). delta[u] is a plain representative of Δ(b_u)
// in U ⊗ U (index i*n+j); eps is dim(A) x dim(U).
struct LeftBialgebroid {
    AeRing R;
    std::vector<Vec> delta;
    Matrix eps;
    std::string name = "U";

    const FiniteAlgebra& U() const { return R.U(); }
    const FiniteAlgebra& A() const { return R.A(); }
    std::size_t n() const { return R.n(); }
    std::size_t na() const { return R.na(); }
    CarrierPtr carrier() const { return R.carrier(); }

    // U◁ ⊗_A ▷U, the home of Δ.
    TensorSpacePtr T_A() const;
    // U▶ ⊗_{A^op} ◁U, the home of u+ ⊗ u-.
    TensorSpacePtr T_Aop() const;
    // U◀ ⊗^A ▷U, the home of u[+] ⊗ u[-].
    TensorSpacePtr T_upA() const;
    std::vector<std::size_t> dims2() const { return {n(), n()}; }

    Vec Delta(const Vec& u) const;
    Vec epsilon(const Vec& u) const { return eps.apply(u); }
    // u(a) = ε(u ◀ a) = ε(u s(a))
    Vec base_action(const Vec& u, const Vec& a) const;
    // Factorwise product of two plain tensors in U ⊗ U.
    Vec tensor_mul(const Vec& x, const Vec& y) const;
    // Admissible pair of basis elements for products (always true when unfiltered).
    bool admissible(std::size_t i, std::size_t j) const { return U().admissible(i, j); }
    bool filtered() const { return U().filtered(); }
    int degree(std::size_t i) const { return U().degree(i); }
};

// Every axiom under its own id: ring axioms (see check_aering), DELTA_BIMOD, COASSOC, COUNIT_L, COUNIT_R,
// TAKEUCHI, DELTA_MULT, DELTA_UNIT, EPS_BIMOD, EPS_MULT_S, EPS_MULT_T, EPS_UNIT.
Report check_left_bialgebroid(const LeftBialgebroid& b);
// Factorwise product makes U ×_A U a unital algebra: TAKEUCHI_SUBALG on sampled Takeuchi elements.
Report check_takeuchi_subalgebra(const LeftBialgebroid& b);
// (uv)(a) = u(v(a)) and 1(a) = a: BASE_MODULE; ε(u s(a)) = ε(u t(a)): BASE_ACTION_ST.
Report check_action_on_base(const LeftBialgebroid& b);

// Right bialgebroid (V, A, s^r, t^r, Δ_r, ∂), actions by the same formulas as for left ones.
// Its axioms are, by definition here, those of the left bialgebroid (V^op, A, t^r, s^r, Δ_r, ∂).
struct RightBialgebroid {
    AeRing R;
    std::vector<Vec> delta;
    Matrix partial;
    std::string name = "V";

    const FiniteAlgebra& V() const { return R.U(); }
    const FiniteAlgebra& A() const { return R.A(); }
    std::size_t n() const { return R.n(); }
    std::size_t na() const { return R.na(); }
    CarrierPtr carrier() const { return R.carrier(); }
    // V◀ ⊗_A ▶V
    TensorSpacePtr T_A() const;
    Vec Delta(const Vec& v) const;
};

LeftBialgebroid mirror_to_left(const RightBialgebroid& v);
RightBialgebroid mirror_to_right(const LeftBialgebroid& u);
Report check_right_bialgebroid(const RightBialgebroid& v);

// Opposite: the right bialgebroid (U^op, A, t, s, Δ, ε).
RightBialgebroid opposite_bialgebroid(const LeftBialgebroid& b);
// Coopposite: the left bialgebroid (U, A^op, t, s, Δ^coop, ε).
LeftBialgebroid coopposite_bialgebroid(const LeftBialgebroid& b);

// Bilinear form U x W -> A with W carrying the four actions of a right bialgebroid.
enum class PairingKind { Left, Right };
struct Pairing {
    const LeftBialgebroid* u = nullptr;
    CarrierPtr w;
    // form[i][j] = <b_i, w_j> in A
    std::vector<std::vector<Vec>> form;
    PairingKind kind = PairingKind::Left;
};
// Ids PAIR_L1..PAIR_L5 or PAIR_R1..PAIR_R5 in the order of the defining list.
Report check_pairing(const Pairing& p);
std::size_t pairing_rank(const Pairing& p);

// Flip of a plain two-leg tensor.
Vec flip2(const Vec& x, std::size_t n1, std::size_t n2);

}  // namespace halg
