#pragma once

#include <gmpxx.h>

#include <string>

namespace halg {

// Characteristic of the active field: 0 for the rationals, a prime p for F_p.
// The setting is per thread so independent computations can run side by side.
unsigned long characteristic();

class FieldScope {
public:
    explicit FieldScope(unsigned long p);
    ~FieldScope();
    FieldScope(const FieldScope&) = delete;
    FieldScope& operator=(const FieldScope&) = delete;

private:
    unsigned long saved_;
};

// Exact field element. Over F_p the stored rational is always the canonical residue in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : q_(v) { normalize(); }
    Scalar(long v) : q_(v) { normalize(); }
    Scalar(const mpq_class& q) : q_(q) { normalize(); }

    // Accepts "p", "-p", "p/q".
    static Scalar parse(const std::string& text);

    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    bool is_one() const { return mpq_cmp_si(q_.get_mpq_t(), 1, 1) == 0; }
    const mpq_class& value() const { return q_; }
    std::string str() const;

    Scalar inverse() const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    // this += a * b without temporaries
    void add_mul(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void normalize();
    mpq_class q_;
};

}  // namespace halg
