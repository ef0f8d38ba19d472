#include "halg/tensor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace halg {

const char* act_symbol(Act a) {
    switch (a) {
        case Act::Lact: return "▷";
        case Act::Ract: return "◁";
        case Act::BLact: return "▶";
        case Act::BRact: return "◀";
    }
    return "?";
}

const std::vector<Matrix>& Carrier::act(Act a) const {
    if (!has(a)) throw ActionSideMismatch(name + " carries no " + act_symbol(a) + " action");
    return acts[static_cast<int>(a)];
}

std::size_t plain_dim(const std::vector<std::size_t>& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

Vec pure_tensor(const std::vector<Vec>& factors) {
    Vec r{Scalar(1)};
    for (const Vec& f : factors) r = kron(r, f);
    return r;
}

namespace {

// Splits a plain index as (outer, leg coordinate, inner) around one leg.
struct Split {
    std::size_t outer, mid, inner;
};

Split split_at(const std::vector<std::size_t>& dims, std::size_t leg) {
    Split s{1, dims.at(leg), 1};
    for (std::size_t k = 0; k < leg; ++k) s.outer *= dims[k];
    for (std::size_t k = leg + 1; k < dims.size(); ++k) s.inner *= dims[k];
    return s;
}

}  // namespace

Vec apply_leg(const Vec& x, const std::vector<std::size_t>& dims, std::size_t leg, const std::vector<Vec>& images,
              const std::vector<std::size_t>& out_dims) {
    if (x.size() != plain_dim(dims)) throw DimensionMismatch("apply_leg: vector does not match leg dims");
    Split s = split_at(dims, leg);
    if (images.size() != s.mid) throw DimensionMismatch("apply_leg: need one image per basis element");
    std::size_t m = plain_dim(out_dims);
    Vec r(s.outer * m * s.inner);
    for (std::size_t o = 0; o < s.outer; ++o)
        for (std::size_t b = 0; b < s.mid; ++b)
            for (std::size_t in = 0; in < s.inner; ++in) {
                const Scalar& c = x[(o * s.mid + b) * s.inner + in];
                if (c.is_zero()) continue;
                const Vec& img = images[b];
                for (std::size_t k = 0; k < m; ++k)
                    if (!img[k].is_zero()) r[(o * m + k) * s.inner + in].add_mul(c, img[k]);
            }
    return r;
}

Vec apply_leg(const Vec& x, const std::vector<std::size_t>& dims, std::size_t leg, const Matrix& mat) {
    std::vector<Vec> images;
    for (std::size_t j = 0; j < mat.cols(); ++j) images.push_back(mat.column(j));
    return apply_leg(x, dims, leg, images, {mat.rows()});
}

Vec contract(const Vec& x, const std::vector<std::size_t>& dims, std::size_t i, std::size_t j, const ContractTable& table,
             const std::vector<std::size_t>& out_dims) {
    if (i == j) throw DimensionMismatch("contract: legs must differ");
    if (x.size() != plain_dim(dims)) throw DimensionMismatch("contract: vector does not match leg dims");
    std::size_t lo = std::min(i, j);
    std::vector<std::size_t> rest;  // result leg dims
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (k == lo) rest.insert(rest.end(), out_dims.begin(), out_dims.end());
        else if (k != i && k != j) rest.push_back(dims[k]);
    }
    std::size_t m = plain_dim(out_dims);
    Vec r(plain_dim(rest));
    std::vector<std::size_t> idx(dims.size());
    std::map<std::pair<std::size_t, std::size_t>, std::optional<Vec>> memo;
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p].is_zero()) continue;
        std::size_t q = p;
        for (std::size_t k = dims.size(); k-- > 0;) {
            idx[k] = q % dims[k];
            q /= dims[k];
        }
        auto key = std::make_pair(idx[i], idx[j]);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, table(idx[i], idx[j])).first;
        if (!it->second) throw DegreeCapExceeded("contraction hits an undefined product (" + std::to_string(idx[i]) + ", " + std::to_string(idx[j]) + ")");
        const Vec& val = *it->second;
        // assemble the target index with the out block at position lo
        std::size_t before = 0, after = 0, after_size = 1;
        for (std::size_t k = 0; k < lo; ++k)
            if (k != i && k != j) before = before * dims[k] + idx[k];
        for (std::size_t k = lo + 1; k < dims.size(); ++k)
            if (k != i && k != j) {
                after = after * dims[k] + idx[k];
                after_size *= dims[k];
            }
        for (std::size_t t = 0; t < m; ++t)
            if (!val[t].is_zero()) r[(before * m + t) * after_size + after].add_mul(x[p], val[t]);
    }
    return r;
}

std::string format_tensor(const Vec& x, const std::vector<std::vector<std::string>>& names) {
    std::vector<std::size_t> dims;
    for (const auto& n : names) dims.push_back(n.size());
    std::ostringstream os;
    bool first = true;
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p].is_zero()) continue;
        std::vector<std::size_t> idx(dims.size());
        std::size_t q = p;
        for (std::size_t k = dims.size(); k-- > 0;) {
            idx[k] = q % dims[k];
            q /= dims[k];
        }
        std::string c = x[p].str();
        bool neg = c[0] == '-';
        if (neg) c.erase(0, 1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        if (c != "1") os << c << " ";
        for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "(x)" : "") << names[k][idx[k]];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::size_t> permuted_dims(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> out;
    for (std::size_t k : perm) out.push_back(dims.at(k));
    return out;
}

Vec permute_legs(const Vec& x, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
    if (perm.size() != dims.size()) throw DimensionMismatch("permute_legs: permutation length");
    std::vector<std::size_t> nd = permuted_dims(dims, perm);
    Vec r(x.size());
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p].is_zero()) continue;
        std::size_t q = p;
        for (std::size_t k = dims.size(); k-- > 0;) {
            idx[k] = q % dims[k];
            q /= dims[k];
        }
        std::size_t t = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) t = t * nd[k] + idx[perm[k]];
        r[t] = x[p];
    }
    return r;
}

namespace {

std::vector<std::size_t> leg_dims(const std::vector<CarrierPtr>& legs) {
    std::vector<std::size_t> d;
    for (const auto& l : legs) d.push_back(l->dim);
    return d;
}

int total_degree_of(const std::vector<CarrierPtr>& legs, const std::vector<std::size_t>& dims, std::size_t p) {
    int deg = 0;
    for (std::size_t k = dims.size(); k-- > 0;) {
        deg += legs[k]->deg(p % dims[k]);
        p /= dims[k];
    }
    return deg;
}

// Column order for pivoting: highest total degree first, so canonical representatives
// have the smallest possible degree.
std::vector<std::size_t> degree_order(const std::vector<CarrierPtr>& legs, const std::vector<std::size_t>& dims) {
    std::size_t n = plain_dim(dims);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    bool filtered = std::any_of(legs.begin(), legs.end(), [](const CarrierPtr& c) { return !c->degree.empty(); });
    if (!filtered) return order;
    std::vector<int> deg(n);
    for (std::size_t p = 0; p < n; ++p) deg[p] = total_degree_of(legs, dims, p);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    return order;
}

Subspace balancing_relations(const std::vector<CarrierPtr>& legs, const std::vector<Balancing>& bal) {
    std::vector<std::size_t> dims = leg_dims(legs);
    std::size_t n = plain_dim(dims);
    Subspace rel(n, degree_order(legs, dims));
    std::vector<std::size_t> idx(dims.size());
    for (const Balancing& b : bal) {
        const auto& mi = legs.at(b.leg_i)->act(b.act_i);
        const auto& mj = legs.at(b.leg_j)->act(b.act_j);
        if (mi.size() != mj.size()) throw ActionSideMismatch("balanced actions come from different base algebras");
        Split si = split_at(dims, b.leg_i), sj = split_at(dims, b.leg_j);
        for (std::size_t a = 0; a < mi.size(); ++a) {
            const Matrix& A = mi[a];
            const Matrix& B = mj[a];
            for (std::size_t p = 0; p < n; ++p) {
                std::vector<std::pair<std::size_t, Scalar>> v;
                std::size_t oi = p / (si.mid * si.inner), ci = (p / si.inner) % si.mid, ii = p % si.inner;
                for (std::size_t r = 0; r < si.mid; ++r)
                    if (!A.at(r, ci).is_zero()) v.emplace_back((oi * si.mid + r) * si.inner + ii, A.at(r, ci));
                std::size_t oj = p / (sj.mid * sj.inner), cj = (p / sj.inner) % sj.mid, ij = p % sj.inner;
                for (std::size_t r = 0; r < sj.mid; ++r)
                    if (!B.at(r, cj).is_zero()) v.emplace_back((oj * sj.mid + r) * sj.inner + ij, -B.at(r, cj));
                if (!v.empty()) rel.add_sparse(v);
            }
        }
    }
    return rel;
}

}  // namespace

TensorSpace::TensorSpace(std::vector<CarrierPtr> legs, std::vector<Balancing> balancings)
    : legs_(std::move(legs)), bal_(std::move(balancings)), dims_(leg_dims(legs_)), q_(balancing_relations(legs_, bal_)) {}

int TensorSpace::total_degree(std::size_t p) const { return total_degree_of(legs_, dims_, p); }

int TensorSpace::degree_of(const Vec& x) const {
    int d = -1;
    for (std::size_t p = 0; p < x.size(); ++p)
        if (!x[p].is_zero()) d = std::max(d, total_degree(p));
    return d;
}

Vec TensorSpace::act(const Vec& x, std::size_t leg, Act a, std::size_t basis_a) const {
    return apply_leg(x, dims_, leg, legs_.at(leg)->act(a).at(basis_a));
}

std::string TensorSpace::describe() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < legs_.size(); ++k) os << (k ? " (x) " : "") << legs_[k]->name;
    for (const auto& b : bal_) os << " [" << b.leg_i << act_symbol(b.act_i) << "~" << b.leg_j << act_symbol(b.act_j) << "]";
    return os.str();
}

TensorSpacePtr tensor_space(const std::vector<CarrierPtr>& legs, const std::vector<Balancing>& balancings) {
    using Key = std::pair<std::vector<const Carrier*>, std::vector<std::tuple<std::size_t, int, std::size_t, int>>>;
    static std::mutex mu;
    static std::map<Key, TensorSpacePtr> cache;
    Key key;
    for (const auto& l : legs) key.first.push_back(l.get());
    for (const auto& b : balancings)
        key.second.emplace_back(b.leg_i, static_cast<int>(b.act_i), b.leg_j, static_cast<int>(b.act_j));
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    // the cached space owns its carriers, so their addresses stay unique while cached
    auto space = std::make_shared<const TensorSpace>(legs, balancings);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, space).first->second;
}

bool satisfies_exchange(const TensorSpace& t, const Vec& x, const std::vector<Exchange>& rules, std::string* witness) {
    for (const Exchange& e : rules) {
        std::size_t na = t.legs().at(e.leg_i)->act(e.act_i).size();
        for (std::size_t a = 0; a < na; ++a) {
            Vec d = t.act(x, e.leg_i, e.act_i, a) - t.act(x, e.leg_j, e.act_j, a);
            if (!t.is_zero(d)) {
                if (witness)
                    *witness = "exchange " + std::to_string(e.leg_i) + act_symbol(e.act_i) + " vs " + std::to_string(e.leg_j) +
                               act_symbol(e.act_j) + " fails for base element " + std::to_string(a);
                return false;
            }
        }
    }
    return true;
}

Subspace takeuchi_subspace(const TensorSpace& t, const std::vector<Exchange>& rules) {
    std::size_t q = t.dim();
    std::vector<Vec> rows;  // stacked map Q -> ⊕ Q
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < q; ++c) {
        Vec x = t.section(basis_vec(q, c));
        Vec stacked;
        for (const Exchange& e : rules) {
            std::size_t na = t.legs().at(e.leg_i)->act(e.act_i).size();
            for (std::size_t a = 0; a < na; ++a) {
                Vec d = t.project(t.act(x, e.leg_i, e.act_i, a) - t.act(x, e.leg_j, e.act_j, a));
                stacked.insert(stacked.end(), d.begin(), d.end());
            }
        }
        cols.push_back(std::move(stacked));
    }
    if (cols.empty() || cols[0].empty()) return Subspace::whole(q);
    return kernel(Matrix::from_columns(cols[0].size(), cols));
}

}  // namespace halg
