#ifndef FNF_JETS_HPP
#define FNF_JETS_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "fnf/field.hpp"

namespace fnf {

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bivariate polynomial truncated at total degree N. Sparse table keyed by
// (i, j) = exponents of (x, y); zero coefficients are never stored.
class Jet2 {
public:
    using Key = std::pair<int, int>;

    explicit Jet2(int order = 1) : order_(order) {
        if (order < 1) throw ValidationError("truncation order must be positive");
    }

    int order() const { return order_; }
    const std::map<Key, FieldElement>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    FieldElement coeff(int i, int j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? FieldElement::zero() : it->second;
    }

    void set_coeff(int i, int j, FieldElement v) {
        if (i < 0 || j < 0) throw ValidationError("negative exponent");
        if (i + j > order_) return;  // truncated away
        if (v.is_zero())
            c_.erase({i, j});
        else
            c_[{i, j}] = std::move(v);
    }

    void add_coeff(int i, int j, const FieldElement& v) {
        if (i + j > order_ || v.is_zero()) return;
        auto [it, inserted] = c_.try_emplace({i, j}, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    // lowest total degree with a nonzero coefficient; order_+1 when zero
    int vanishing_order() const {
        int v = order_ + 1;
        for (auto& [k, _] : c_) v = std::min(v, k.first + k.second);
        return v;
    }

    Jet2 truncated(int new_order) const {
        Jet2 r(new_order);
        for (auto& [k, v] : c_)
            if (k.first + k.second <= new_order) r.c_[k] = v;
        return r;
    }

    Jet2 homogeneous_part(int d) const {
        Jet2 r(order_);
        for (auto& [k, v] : c_)
            if (k.first + k.second == d) r.c_[k] = v;
        return r;
    }

    Jet2 operator+(const Jet2& o) const {
        Jet2 r = truncated(std::min(order_, o.order_));
        for (auto& [k, v] : o.c_)
            if (k.first + k.second <= r.order_) r.add_coeff(k.first, k.second, v);
        return r;
    }
    Jet2 operator-(const Jet2& o) const { return *this + o.scaled(FieldElement(-1)); }

    Jet2 scaled(const FieldElement& s) const {
        Jet2 r(order_);
        if (s.is_zero()) return r;
        for (auto& [k, v] : c_) {
            FieldElement w = v * s;
            if (!w.is_zero()) r.c_[k] = std::move(w);
        }
        return r;
    }

    Jet2 operator*(const Jet2& o) const {
        int n = std::min(order_, o.order_);
        Jet2 r(n);
        for (auto& [ka, va] : c_) {
            int da = ka.first + ka.second;
            if (da > n) continue;
            for (auto& [kb, vb] : o.c_) {
                if (da + kb.first + kb.second > n) continue;
                r.add_coeff(ka.first + kb.first, ka.second + kb.second, va * vb);
            }
        }
        return r;
    }

    Jet2 partial_x() const {
        Jet2 r(order_);
        for (auto& [k, v] : c_)
            if (k.first > 0) r.add_coeff(k.first - 1, k.second, v * FieldElement(k.first));
        return r;
    }
    Jet2 partial_y() const {
        Jet2 r(order_);
        for (auto& [k, v] : c_)
            if (k.second > 0) r.add_coeff(k.first, k.second - 1, v * FieldElement(k.second));
        return r;
    }

    // substitute (x, y) -> (u, v); u, v must have zero constant term
    Jet2 substitute(const Jet2& u, const Jet2& v) const;

    bool operator==(const Jet2& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const Jet2& o) const { return !(*this == o); }

    static Jet2 monomial(int order, int i, int j, FieldElement coeff = FieldElement(1)) {
        Jet2 r(order);
        r.set_coeff(i, j, std::move(coeff));
        return r;
    }

private:
    int order_;
    std::map<Key, FieldElement> c_;
};

// P dx + Q dy
struct OneFormJet {
    Jet2 P, Q;

    OneFormJet(Jet2 p, Jet2 q) : P(std::move(p)), Q(std::move(q)) {
        if (P.order() != Q.order()) throw ValidationError("P and Q truncation orders differ");
    }
    explicit OneFormJet(int order) : P(order), Q(order) {}

    int order() const { return P.order(); }
    int vanishing_order() const { return std::min(P.vanishing_order(), Q.vanishing_order()); }

    OneFormJet operator+(const OneFormJet& o) const { return OneFormJet(P + o.P, Q + o.Q); }
    OneFormJet operator-(const OneFormJet& o) const { return OneFormJet(P - o.P, Q - o.Q); }
    OneFormJet scaled(const FieldElement& s) const { return OneFormJet(P.scaled(s), Q.scaled(s)); }
    OneFormJet truncated(int n) const { return OneFormJet(P.truncated(n), Q.truncated(n)); }
    OneFormJet homogeneous_part(int d) const { return OneFormJet(P.homogeneous_part(d), Q.homogeneous_part(d)); }
    bool operator==(const OneFormJet& o) const { return P == o.P && Q == o.Q; }
    bool operator!=(const OneFormJet& o) const { return !(*this == o); }
};

// (x, y) -> (U, V); zero constant terms, invertible linear part
struct FormalMapJet {
    Jet2 U, V;

    FormalMapJet(Jet2 u, Jet2 v) : U(std::move(u)), V(std::move(v)) {
        if (U.order() != V.order()) throw ValidationError("U and V truncation orders differ");
        if (!U.coeff(0, 0).is_zero() || !V.coeff(0, 0).is_zero())
            throw ValidationError("formal map must fix the origin");
        if (linear_determinant().is_zero()) throw ValidationError("formal map has singular linear part");
    }

    int order() const { return U.order(); }

    FieldElement linear_determinant() const {
        return U.coeff(1, 0) * V.coeff(0, 1) - U.coeff(0, 1) * V.coeff(1, 0);
    }

    bool is_identity_tangent() const {
        return U.coeff(1, 0).is_one() && U.coeff(0, 1).is_zero() && V.coeff(1, 0).is_zero() &&
               V.coeff(0, 1).is_one();
    }

    static FormalMapJet identity(int order) {
        return FormalMapJet(Jet2::monomial(order, 1, 0), Jet2::monomial(order, 0, 1));
    }

    bool operator==(const FormalMapJet& o) const { return U == o.U && V == o.V; }
};

inline Jet2 Jet2::substitute(const Jet2& u, const Jet2& v) const {
    int n = std::min({order_, u.order(), v.order()});
    if (!u.coeff(0, 0).is_zero() || !v.coeff(0, 0).is_zero())
        throw ValidationError("substitution requires zero constant terms");
    // table of u^i * v^j for every (i, j) present, built incrementally
    std::map<Key, Jet2> pow;
    pow[{0, 0}] = Jet2::monomial(n, 0, 0);
    std::function<const Jet2&(int, int)> power = [&](int a, int b) -> const Jet2& {
        auto f = pow.find({a, b});
        if (f != pow.end()) return f->second;
        Jet2 r = b > 0 ? power(a, b - 1) * v : power(a - 1, 0) * u;
        return pow.emplace(Key{a, b}, std::move(r)).first->second;
    };
    Jet2 r(n);
    for (auto& [k, coeff] : c_) {
        if (k.first + k.second > n) continue;
        const Jet2& p = power(k.first, k.second);
        for (auto& [km, vm] : p.coefficients()) r.add_coeff(km.first, km.second, vm * coeff);
    }
    return r;
}

// jets of outer composed with inner, exact to the shared truncation order
inline FormalMapJet compose_map(const FormalMapJet& outer, const FormalMapJet& inner) {
    return FormalMapJet(outer.U.substitute(inner.U, inner.V), outer.V.substitute(inner.U, inner.V));
}

// phi^* eta: new P = (P o phi) dU/dx + (Q o phi) dV/dx, likewise for dy
inline OneFormJet pullback(const OneFormJet& eta, const FormalMapJet& phi) {
    if (eta.order() != phi.order()) throw ValidationError("pullback order mismatch");
    Jet2 p_comp = eta.P.substitute(phi.U, phi.V);
    Jet2 q_comp = eta.Q.substitute(phi.U, phi.V);
    Jet2 newP = p_comp * phi.U.partial_x() + q_comp * phi.V.partial_x();
    Jet2 newQ = p_comp * phi.U.partial_y() + q_comp * phi.V.partial_y();
    return OneFormJet(std::move(newP), std::move(newQ));
}

// (eta ^ dx)|_{x=0} recorded as the series +Q(0, y); index = power of y
inline std::vector<FieldElement> wedge_dx_restrict(const OneFormJet& eta) {
    std::vector<FieldElement> s(eta.order() + 1, FieldElement::zero());
    for (auto& [k, v] : eta.Q.coefficients())
        if (k.first == 0) s[k.second] = v;
    return s;
}

}  // namespace fnf

#endif  // FNF_JETS_HPP
