#pragma once

#include "halg/bialgebroid.hpp"

#include <utility>

namespace halg {

enum class Side { Left, Right };

// u ↦ u+ ⊗_{A^op} u- (left) or u ↦ u[+] ⊗^A u[-] (right), canonical plain representatives.
struct TranslationData {
    Side kind = Side::Left;
    std::vector<Vec> table;
    TensorSpacePtr space;
    Vec operator()(const Vec& u) const;
};

// α_ℓ(u ⊗ v) = u(1) ⊗ u(2)v and α_r(u ⊗ v) = u(1)v ⊗ u(2) on plain representatives.
Vec galois_left(const LeftBialgebroid& b, const Vec& x);
Vec galois_right(const LeftBialgebroid& b, const Vec& x);

// Exact inverse of the Hopf-Galois map on the balanced tensors (degree by degree up to the cap
// for filtered instances). Throws NotInvertible with the rank defect.
TranslationData invert_galois(const LeftBialgebroid& b, Side kind);

// α(translation(u)) = u ⊗ 1 resp. 1 ⊗ u: GALOIS_L / GALOIS_R.
Report check_translation_roundtrip(const LeftBialgebroid& b, const TranslationData& td);

// SCH1..SCH9 (left data), TCH1..TCH9 (right data), MIX1..MIX3 (both); missing data are reported as skipped.
Report verify_translation_identities(const LeftBialgebroid& b, const TranslationData* left, const TranslationData* right);

// Left and right bialgebroid on the same algebra tied by an invertible antipode; the right structure is
// transported from the left one through S, with base B identified with A.
struct FullHopfAlgebroid {
    LeftBialgebroid left;
    RightBialgebroid right;
    Matrix S, S_inv;
    Matrix partial;  // right counit ∂: H -> A
    Matrix nu;       // ν = ∂ s
    Matrix mu;       // μ = ε s^r
};

FullHopfAlgebroid make_full_hopf(const LeftBialgebroid& b, const Matrix& S, const Matrix& partial);
// RIGHT_* (axioms of H^r), S_ANTIMULT, S_SOURCE, S_TARGET, PARTIAL_S (∂S = νε), EPS_S (εS = μ∂), NU_ISO, MU_ISO.
Report check_full_hopf(const FullHopfAlgebroid& h);
// ν and μ as algebra maps A -> A^op; throws NotIso with the failing witness.
std::pair<AlgebraMap, AlgebraMap> nu_mu_isomorphisms(const FullHopfAlgebroid& h);
// h+ ⊗ h- = h^(1) ⊗ S(h^(2)) and h[+] ⊗ h[-] = h^(2) ⊗ S^{-1}(h^(1)).
std::pair<TranslationData, TranslationData> translation_from_antipode(const FullHopfAlgebroid& h);
// Table-for-table equality in the translation space: id on every basis element.
Report compare_translation(const LeftBialgebroid& b, const TranslationData& x, const TranslationData& y, const std::string& id);

}  // namespace halg
