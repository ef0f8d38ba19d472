#pragma once

#include "halg/algebra.hpp"
#include "halg/report.hpp"
#include "halg/tensor.hpp"

namespace halg {

// An algebra U with commuting source s: A -> U and target t: A^op -> U.
// Actions on U: a▷u = s(a)u, u◁a = t(a)u, a▶u = u t(a), u◀a = u s(a).
class AeRing {
public:
    AeRing() = default;
    AeRing(FiniteAlgebra a, FiniteAlgebra u, Matrix s, Matrix t, std::string name = "U");

    const FiniteAlgebra& A() const { return a_; }
    const FiniteAlgebra& U() const { return u_; }
    const Matrix& s() const { return s_; }
    const Matrix& t() const { return t_; }
    Vec src(const Vec& a) const { return s_.apply(a); }
    Vec tgt(const Vec& a) const { return t_.apply(a); }
    Vec src(std::size_t a) const { return s_.column(a); }
    Vec tgt(std::size_t a) const { return t_.column(a); }
    std::size_t n() const { return u_.dim(); }
    std::size_t na() const { return a_.dim(); }
    const std::string& name() const { return name_; }

    // U with its four A-actions.
    CarrierPtr carrier() const { return carrier_; }
    Vec act(Act which, std::size_t a, const Vec& u) const;

private:
    FiniteAlgebra a_, u_;
    Matrix s_, t_;
    std::string name_;
    CarrierPtr carrier_;
};

// ALG_ASSOC, ALG_UNIT on U, BASE_ASSOC, BASE_UNIT on A, SOURCE_HOM, TARGET_ANTIHOM, ST_COMMUTE.
Report check_aering(const AeRing& r);

// A as a carrier: ▷ and ▶ are left multiplication, ◁ and ◀ are right multiplication.
CarrierPtr base_carrier(const FiniteAlgebra& a, const std::string& name = "A");

}  // namespace halg
