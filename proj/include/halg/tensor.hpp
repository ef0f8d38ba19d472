#pragma once

#include "halg/linalg.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace halg {

// The four A-actions on an A^e-ring or module, written ▷ ◁ ▶ ◀.
enum class Act { Lact = 0, Ract = 1, BLact = 2, BRact = 3 };
const char* act_symbol(Act a);

// A vector space with up to four A-actions, given per basis element of A.
struct Carrier {
    std::string name;
    std::size_t dim = 0;
    std::array<std::vector<Matrix>, 4> acts;
    std::vector<int> degree;  // empty when unfiltered

    bool has(Act a) const { return !acts[static_cast<int>(a)].empty(); }
    const std::vector<Matrix>& act(Act a) const;
    void set(Act a, std::vector<Matrix> m) { acts[static_cast<int>(a)] = std::move(m); }
    int deg(std::size_t i) const { return degree.empty() ? 0 : degree[i]; }
};
using CarrierPtr = std::shared_ptr<const Carrier>;

// Identifies act_i on leg_i with act_j on leg_j.
struct Balancing {
    std::size_t leg_i;
    Act act_i;
    std::size_t leg_j;
    Act act_j;
};

// Plain tensor helpers on mixed-radix coordinates (first leg slowest).
std::size_t plain_dim(const std::vector<std::size_t>& dims);
Vec pure_tensor(const std::vector<Vec>& factors);
// Replaces leg `leg` through a linear map given by images of its basis, each in a product of out_dims.
Vec apply_leg(const Vec& x, const std::vector<std::size_t>& dims, std::size_t leg, const std::vector<Vec>& images,
              const std::vector<std::size_t>& out_dims);
Vec apply_leg(const Vec& x, const std::vector<std::size_t>& dims, std::size_t leg, const Matrix& m);
// Contracts legs i and j (i != j) through table(bi, bj) with values in a product of out_dims.
// The result legs sit where min(i, j) was; a missing table value with nonzero coefficient throws DegreeCapExceeded.
using ContractTable = std::function<std::optional<Vec>(std::size_t, std::size_t)>;
Vec contract(const Vec& x, const std::vector<std::size_t>& dims, std::size_t i, std::size_t j, const ContractTable& table,
             const std::vector<std::size_t>& out_dims);
// New leg k is old leg perm[k].
Vec permute_legs(const Vec& x, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);
std::string format_tensor(const Vec& x, const std::vector<std::vector<std::string>>& names);
std::vector<std::size_t> permuted_dims(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);

// Iterated balanced tensor product: the plain tensor modulo all balancing relations.
class TensorSpace {
public:
    TensorSpace(std::vector<CarrierPtr> legs, std::vector<Balancing> balancings);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t ambient() const { return q_.ambient(); }
    std::size_t dim() const { return q_.dim(); }
    const std::vector<CarrierPtr>& legs() const { return legs_; }
    const std::vector<Balancing>& balancings() const { return bal_; }
    const QuotientSpace& quotient() const { return q_; }
    int total_degree(std::size_t plain_index) const;
    int degree_of(const Vec& x) const;

    Vec reduce(const Vec& x) const { return q_.reduce(x); }
    bool equal(const Vec& a, const Vec& b) const { return q_.equal(a, b); }
    bool is_zero(const Vec& x) const { return q_.is_zero(x); }
    Vec project(const Vec& x) const { return q_.project(x); }
    Vec section(const Vec& c) const { return q_.section(c); }
    Vec pure(const std::vector<Vec>& f) const { return pure_tensor(f); }
    // Acts on one leg by the given action of the basis element a of A.
    Vec act(const Vec& x, std::size_t leg, Act a, std::size_t basis_a) const;
    std::string describe() const;

private:
    std::vector<CarrierPtr> legs_;
    std::vector<Balancing> bal_;
    std::vector<std::size_t> dims_;
    QuotientSpace q_;
};
using TensorSpacePtr = std::shared_ptr<const TensorSpace>;

// Cached construction; identical legs and balancings share one space.
TensorSpacePtr tensor_space(const std::vector<CarrierPtr>& legs, const std::vector<Balancing>& balancings);

// Subspace of a balanced tensor cut out by exchange conditions: for all basis a,
// (act on one leg) x = (act on another leg) x, compared in the quotient.
struct Exchange {
    std::size_t leg_i;
    Act act_i;
    std::size_t leg_j;
    Act act_j;
};
bool satisfies_exchange(const TensorSpace& t, const Vec& x, const std::vector<Exchange>& rules, std::string* witness = nullptr);
// Representatives (quotient coordinates) of the exchange subspace.
Subspace takeuchi_subspace(const TensorSpace& t, const std::vector<Exchange>& rules);

}  // namespace halg
