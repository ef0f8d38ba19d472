#include "halg/scalar.hpp"

#include <stdexcept>

namespace halg {

namespace {
thread_local unsigned long g_char = 0;

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
}  // namespace

unsigned long characteristic() { return g_char; }

FieldScope::FieldScope(unsigned long p) : saved_(g_char) {
    if (p != 0 && !is_prime(p)) throw std::invalid_argument("field characteristic must be 0 or a prime, got " + std::to_string(p));
    g_char = p;
}

FieldScope::~FieldScope() { g_char = saved_; }

void Scalar::normalize() {
    if (g_char == 0) return;
    if (mpz_cmp_ui(q_.get_den_mpz_t(), 1) == 0 && mpz_sgn(q_.get_num_mpz_t()) >= 0 &&
        mpz_cmp_ui(q_.get_num_mpz_t(), g_char) < 0)
        return;
    mpz_class p(g_char);
    mpz_class num = q_.get_num();
    mpz_class den = q_.get_den();
    num %= p;
    if (num < 0) num += p;
    den %= p;
    if (den == 0) throw std::domain_error("rational " + q_.get_str() + " has no image in F_" + std::to_string(g_char));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    q_ = mpq_class(r);
}

Scalar Scalar::parse(const std::string& text) {
    mpq_class q;
    std::string t = text;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(q);
}

std::string Scalar::str() const { return q_.get_str(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    r.normalize();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
    r.normalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_mul(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    mpq_div(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    normalize();
    return *this;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
    normalize();
}

}  // namespace halg
