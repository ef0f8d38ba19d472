#pragma once

#include "halg/linalg.hpp"
#include "halg/report.hpp"

#include <string>
#include <vector>

namespace halg {

// Unital associative algebra by structure constants: table[i*n+j] = b_i b_j.
// A filtered algebra carries a degree per basis element and a cap; products
// of basis elements are only recorded when the degrees add up to at most the cap.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;
    FiniteAlgebra(std::vector<std::string> names, Vec unit, std::vector<Vec> table);

    static FiniteAlgebra ground_field();

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::size_t index_of(const std::string& name) const;
    const Vec& unit() const { return unit_; }

    void set_filtration(std::vector<int> degree, int cap);
    bool filtered() const { return cap_ >= 0; }
    int cap() const { return cap_; }
    int degree(std::size_t i) const { return filtered() ? degree_[i] : 0; }
    const std::vector<int>& degrees() const { return degree_; }
    // Highest degree in the support, -1 for zero.
    int degree_of(const Vec& v) const;
    bool admissible(std::size_t i, std::size_t j) const { return !filtered() || degree_[i] + degree_[j] <= cap_; }

    const Vec& product(std::size_t i, std::size_t j) const;
    Vec mul(const Vec& x, const Vec& y) const;
    Vec basis(std::size_t i) const { return basis_vec(dim(), i); }
    Matrix left_mult(const Vec& x) const;
    Matrix right_mult(const Vec& x) const;

    void set_product(std::size_t i, std::size_t j, Vec v);
    std::string format(const Vec& v) const;

private:
    std::vector<std::string> names_;
    Vec unit_;
    std::vector<Vec> table_;
    std::vector<int> degree_;
    int cap_ = -1;
};

FiniteAlgebra opposite(const FiniteAlgebra& a);
// A ⊗ B with factorwise product; basis index i*dim(B)+j.
FiniteAlgebra tensor_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);
FiniteAlgebra enveloping(const FiniteAlgebra& a);

// ALG_ASSOC and ALG_UNIT over every admissible basis triple/pair.
Report check_algebra_axioms(const FiniteAlgebra& a, const std::string& prefix = "ALG");

// A linear map between algebras given by the images of basis elements (columns).
// anti = true checks f(xy) = f(y)f(x).
struct AlgebraMap {
    const FiniteAlgebra* source = nullptr;
    const FiniteAlgebra* target = nullptr;
    Matrix linear;
    Vec operator()(const Vec& x) const { return linear.apply(x); }
};
Report check_algebra_map(const AlgebraMap& f, const std::string& id, bool anti = false);
bool is_bijective(const AlgebraMap& f);

// (A,A)-bimodule: left[a] and right[a] are the operators x -> a.x and x -> x.a for basis a.
struct Bimodule {
    std::size_t dim = 0;
    std::vector<Matrix> left, right;
};
Report check_bimodule(const FiniteAlgebra& a, const Bimodule& m, const std::string& prefix = "BIMOD");
Bimodule regular_bimodule(const FiniteAlgebra& a);

}  // namespace halg
