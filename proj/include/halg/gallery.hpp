#pragma once

#include "halg/bialgebroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace halg {

// A left bialgebroid together with the optional data of a full Hopf algebroid.
struct Instance {
    std::string name;
    unsigned long characteristic = 0;
    LeftBialgebroid B;
    std::optional<Matrix> antipode;  // S, dim(U) x dim(U)
    std::optional<Matrix> partial;   // right counit, dim(A) x dim(U)
};

// Anchor of the Lie-Rinehart algebra (k[x]/(x^2), A·D): D(x) = c0 + c1 x. c0 may be nonzero only in characteristic 2.
struct Anchor {
    Scalar c0 = 0;
    Scalar c1 = 1;
};

// Names: EX-HOPF, EX-SW, EX-GPD, EX-AE, EX-LR(N), EX-LR2(N).
// EX-LR uses the Euler anchor D(x) = x over Q; EX-LR2 uses D(x) = 1 over F_2.
// The caller must hold a FieldScope for the instance's characteristic while using it.
Instance build_gallery_instance(const std::string& name);
std::vector<std::string> gallery_names();
unsigned long gallery_characteristic(const std::string& name);

Instance make_hopf_c2();
Instance make_sweedler();
Instance make_pair_groupoid();
Instance make_enveloping_dual_numbers();
// Envelope of (k[x]/(x^2), A·D) truncated at PBW degree cap, with right counit ∂(D) = 0.
Instance make_lie_rinehart(int cap, const Anchor& anchor, const std::string& name);

// PBW index of x^a D^b in the truncated envelope.
inline std::size_t lr_index(int a, int b) { return static_cast<std::size_t>(2 * b + a); }

}  // namespace halg
