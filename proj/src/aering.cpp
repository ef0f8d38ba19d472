#include "halg/aering.hpp"

namespace halg {

AeRing::AeRing(FiniteAlgebra a, FiniteAlgebra u, Matrix s, Matrix t, std::string name)
    : a_(std::move(a)), u_(std::move(u)), s_(std::move(s)), t_(std::move(t)), name_(std::move(name)) {
    if (s_.rows() != u_.dim() || s_.cols() != a_.dim() || t_.rows() != u_.dim() || t_.cols() != a_.dim())
        throw DimensionMismatch("source/target matrices must be dim(U) x dim(A)");
    auto c = std::make_shared<Carrier>();
    c->name = name_;
    c->dim = u_.dim();
    if (u_.filtered()) c->degree = u_.degrees();
    std::vector<Matrix> lact, ract, blact, bract;
    for (std::size_t i = 0; i < a_.dim(); ++i) {
        lact.push_back(u_.left_mult(src(i)));
        ract.push_back(u_.left_mult(tgt(i)));
        blact.push_back(u_.right_mult(tgt(i)));
        bract.push_back(u_.right_mult(src(i)));
    }
    c->set(Act::Lact, std::move(lact));
    c->set(Act::Ract, std::move(ract));
    c->set(Act::BLact, std::move(blact));
    c->set(Act::BRact, std::move(bract));
    carrier_ = c;
}

Vec AeRing::act(Act which, std::size_t a, const Vec& u) const { return carrier_->act(which).at(a).apply(u); }

Report check_aering(const AeRing& r) {
    Report rep;
    rep.merge(check_algebra_axioms(r.U(), "ALG"));
    rep.merge(check_algebra_axioms(r.A(), "BASE"));
    rep.merge(check_algebra_map(AlgebraMap{&r.A(), &r.U(), r.s()}, "SOURCE_HOM"));
    rep.merge(check_algebra_map(AlgebraMap{&r.A(), &r.U(), r.t()}, "TARGET_ANTIHOM", true));
    Tally comm("ST_COMMUTE");
    for (std::size_t a = 0; a < r.na(); ++a)
        for (std::size_t b = 0; b < r.na(); ++b)
            comm.guard([&] {
                Vec st = r.U().mul(r.src(a), r.tgt(b));
                Vec ts = r.U().mul(r.tgt(b), r.src(a));
                comm.expect(st == ts, [&] { return "s(" + r.A().name(a) + ")t(" + r.A().name(b) + ") != t(" + r.A().name(b) + ")s(" + r.A().name(a) + ")"; });
            });
    rep.add(comm);
    return rep;
}

CarrierPtr base_carrier(const FiniteAlgebra& a, const std::string& name) {
    auto c = std::make_shared<Carrier>();
    c->name = name;
    c->dim = a.dim();
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        l.push_back(a.left_mult(a.basis(i)));
        r.push_back(a.right_mult(a.basis(i)));
    }
    c->set(Act::Lact, l);
    c->set(Act::BLact, l);
    c->set(Act::Ract, r);
    c->set(Act::BRact, r);
    return c;
}

}  // namespace halg
