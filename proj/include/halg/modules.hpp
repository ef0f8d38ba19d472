#pragma once

#include "halg/hopf.hpp"

namespace halg {

enum class ModuleSide { Left, Right };

// Finite-dimensional U-module; action[u] is the matrix of m ↦ b_u·m (left) or m ↦ m·b_u (right).
// Its A^e-structure: a▷m◁b = s(a)t(b)m on left modules, a▶m◀b = m·s(b)t(a) on right ones.
struct UModule {
    ModuleSide side = ModuleSide::Left;
    std::string name = "M";
    std::vector<std::string> names;
    std::vector<Matrix> action;
    std::size_t dim() const { return names.size(); }
    Matrix act(const Vec& u) const;
};

// UMOD_ASSOC on admissible basis pairs, UMOD_UNIT.
Report check_umodule(const LeftBialgebroid& b, const UModule& m);
// Carrier with ▷ ◁ (left) or ▶ ◀ (right).
CarrierPtr module_carrier(const LeftBialgebroid& b, const UModule& m);

UModule regular_module(const LeftBialgebroid& b, ModuleSide side);
// A with u·a = ε(u s(a)).
UModule base_module(const LeftBialgebroid& b);
// A with a·h = ∂(t^r(a)h), the right module of a full Hopf algebroid.
UModule counit_module(const FullHopfAlgebroid& h);

enum class ExoticKind { GIAND1, LING1, SUP1, GIAND2, LING2, SUP2 };
const char* exotic_name(ExoticKind k);
ExoticKind exotic_kind(const std::string& name);

// The module together with its presentation: Hom spaces as flattened matrices F[i * dim X + j] (coefficient of y_i in f(x_j)),
// tensor products on quotient coordinates of `space`.
struct ExoticModule {
    ExoticKind kind;
    UModule module;
    std::vector<Vec> basis;  // Hom kinds: basis of the Hom space
    TensorSpacePtr space;    // SUP kinds
    // Coordinates of a flattened Hom element, nullopt when it is not in the space.
    std::optional<Vec> coords(const Vec& flat) const;
    std::shared_ptr<const LinearSolver> solver;
};

// GIAND: x = M, y = M' left modules; LING: x = N, y = N' right modules; SUP: x = N right, y = M left.
// 1-kinds need left, 2-kinds right translation data (MissingTranslationData otherwise).
ExoticModule exotic_structure(const LeftBialgebroid& b, ExoticKind kind, const UModule& x, const UModule& y, const TranslationData* td);

// Hom_{A^op}(X, Y) or Hom_A(X, Y) for a list of intertwining conditions x_a ↦ y_a.
std::vector<Vec> hom_space(std::size_t dx, std::size_t dy, const std::vector<std::pair<Matrix, Matrix>>& conditions);

// Dualising module check on samples. Throws HypothesisFailed("projective" | "i" | "ii") with a witness.
// Passing items: PROJECTIVE, HYP_I, HYP_II_<N>, EVAL_ULINEAR_<N>, UNIT_ISO_<M>, UNIT_ULINEAR_<M>, each verified on samples only.
// Regular modules, the base module and P itself are always added to the samples.
Report check_dualising_module(const LeftBialgebroid& b, const UModule& p, const TranslationData& ltd, const TranslationData& rtd,
                              const std::vector<UModule>& left_samples = {}, const std::vector<UModule>& right_samples = {});

}  // namespace halg
