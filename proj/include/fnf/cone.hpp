#ifndef FNF_CONE_HPP
#define FNF_CONE_HPP

#include <array>
#include <optional>

#include "fnf/jets.hpp"

namespace fnf {

// Residues attached to the tangent-cone lines x=0, y=0, x=y, in this order.
struct ResidueTriple {
    FieldElement alpha1, alpha2, alpha3;

    FieldElement sum() const { return alpha1 + alpha2 + alpha3; }
    bool operator==(const ResidueTriple& o) const {
        return alpha1 == o.alpha1 && alpha2 == o.alpha2 && alpha3 == o.alpha3;
    }
};

struct GenericityReport {
    bool dicritic = false;
    bool cone_normalized = false;  // tangent cone is c * xy(x-y), c != 0
    std::optional<ResidueTriple> residues;
    bool generic = false;
};

inline void require_order_two(const OneFormJet& eta) {
    if (eta.vanishing_order() != 2)
        throw ValidationError("1-form does not have a degenerate singularity of order two (order = " +
                              std::to_string(eta.vanishing_order()) + ")");
}

// T = eta_0(R) = x*P2 + y*Q2, a homogeneous cubic
inline Jet2 tangent_cone(const OneFormJet& eta) {
    require_order_two(eta);
    Jet2 p2 = eta.P.homogeneous_part(2);
    Jet2 q2 = eta.Q.homogeneous_part(2);
    Jet2 t(eta.order() >= 3 ? eta.order() : 3);
    for (auto& [k, v] : p2.coefficients()) t.add_coeff(k.first + 1, k.second, v);
    for (auto& [k, v] : q2.coefficients()) t.add_coeff(k.first, k.second + 1, v);
    return t;
}

inline GenericityReport check_genericity(const OneFormJet& eta) {
    GenericityReport rep;
    Jet2 t = tangent_cone(eta);
    rep.dicritic = t.is_zero();
    FieldElement c = t.coeff(2, 1);
    rep.cone_normalized = !rep.dicritic && !c.is_zero() && t.coeff(1, 2) == -c &&
                          t.coeff(3, 0).is_zero() && t.coeff(0, 3).is_zero();
    if (rep.cone_normalized) {
        // after scaling the cone to exactly xy(x-y):
        //   alpha1 = P2(0,y)/(-y^2), alpha2 = Q2(x,0)/x^2, alpha3 = P2(y,y)/y^2
        Jet2 p2 = eta.P.homogeneous_part(2);
        Jet2 q2 = eta.Q.homogeneous_part(2);
        ResidueTriple r;
        r.alpha1 = -(p2.coeff(0, 2) / c);
        r.alpha2 = q2.coeff(2, 0) / c;
        r.alpha3 = (p2.coeff(2, 0) + p2.coeff(1, 1) + p2.coeff(0, 2)) / c;
        rep.residues = r;
        rep.generic = !r.alpha1.is_rational_constant() && !r.alpha2.is_rational_constant() &&
                      !r.alpha3.is_rational_constant();
    }
    return rep;
}

// pullback by the linear map (x, y) -> (m00 x + m01 y, m10 x + m11 y)
inline OneFormJet apply_linear_change(const OneFormJet& eta, const std::array<std::array<FieldElement, 2>, 2>& m) {
    FieldElement det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det.is_zero()) throw ValidationError("linear change of coordinates is singular");
    int n = eta.order();
    Jet2 u(n), v(n);
    u.set_coeff(1, 0, m[0][0]);
    u.set_coeff(0, 1, m[0][1]);
    v.set_coeff(1, 0, m[1][0]);
    v.set_coeff(0, 1, m[1][1]);
    return pullback(eta, FormalMapJet(std::move(u), std::move(v)));
}

// a*x + b*y
struct LinearForm {
    FieldElement a, b;
};

// omega_0 + sum_k b_k x^{k+2} (x dy - y dx) truncated at order N, where
// omega_0 = f1 f2 f3 sum_j lambda_j dfj/fj.
inline OneFormJet construct_example(const std::array<FieldElement, 3>& lambda,
                                    const std::array<LinearForm, 3>& f,
                                    const std::vector<FieldElement>& b, int N) {
    if (N < 4) throw ValidationError("truncation order must be at least 4");
    if (lambda[0] + lambda[1] + lambda[2] != FieldElement::one())
        throw ValidationError("residue parameters must sum to 1");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if ((f[i].a * f[j].b - f[i].b * f[j].a).is_zero())
                throw ValidationError("linear forms must be pairwise non-proportional");
    if (static_cast<int>(b.size()) > N - 2)
        throw ValidationError("b sequence longer than the truncation order allows (max N-2 entries)");

    std::array<Jet2, 3> fj{Jet2(N), Jet2(N), Jet2(N)};
    for (int j = 0; j < 3; ++j) {
        fj[j].set_coeff(1, 0, f[j].a);
        fj[j].set_coeff(0, 1, f[j].b);
    }
    OneFormJet eta(N);
    for (int j = 0; j < 3; ++j) {
        Jet2 prod = fj[(j + 1) % 3] * fj[(j + 2) % 3];
        prod = prod.scaled(lambda[j]);
        eta.P = eta.P + prod.scaled(f[j].a);
        eta.Q = eta.Q + prod.scaled(f[j].b);
    }
    for (size_t k = 0; k < b.size(); ++k) {
        eta.P.add_coeff(static_cast<int>(k) + 2, 1, -b[k]);
        eta.Q.add_coeff(static_cast<int>(k) + 3, 0, b[k]);
    }
    return eta;
}

// the standard example family: lines x, y, x-y with residues lambda
inline OneFormJet construct_standard_example(const std::array<FieldElement, 3>& lambda,
                                             const std::vector<FieldElement>& b, int N) {
    std::array<LinearForm, 3> f{LinearForm{FieldElement(1), FieldElement(0)},
                                LinearForm{FieldElement(0), FieldElement(1)},
                                LinearForm{FieldElement(1), FieldElement(-1)}};
    return construct_example(lambda, f, b, N);
}

}  // namespace fnf

#endif  // FNF_CONE_HPP
