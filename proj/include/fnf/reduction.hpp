#ifndef FNF_REDUCTION_HPP
#define FNF_REDUCTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fnf/invariants.hpp"
#include "fnf/linalg.hpp"

namespace fnf {

class ResonanceError : public std::runtime_error {
public:
    explicit ResonanceError(int k)
        : std::runtime_error("rectification stalls at degree " + std::to_string(k) +
                             ": the coefficient multiplying c_" + std::to_string(k) + " vanishes"),
          degree(k) {}
    int degree;
};

class ObstructionError : public std::runtime_error {
public:
    explicit ObstructionError(int m, const std::string& what_kind)
        : std::runtime_error("normal-form obstruction at degree " + std::to_string(m) + ": " + what_kind),
          degree(m) {}
    int degree;
};

class GenericityError : public std::runtime_error {
public:
    explicit GenericityError(const std::string& msg) : std::runtime_error(msg) {}
};

class DigestMismatchError : public std::runtime_error {
public:
    DigestMismatchError() : std::runtime_error("transcript digest does not match the supplied 1-form") {}
};

// phi_k = (x + c y^k, y)
struct RectificationStep {
    int k = 0;
    FieldElement c;
};

// H = (x + alpha, y + beta) followed by multiplication by (1 - delta);
// alpha, beta homogeneous of degree m-1, delta of degree m-2.
struct ReductionStep {
    int m = 0;
    Jet2 alpha, beta, delta;
    FieldElement b;

    ReductionStep(int m_, int order)
        : m(m_), alpha(order), beta(order), delta(order) {}
};

struct ReductionTranscript {
    std::uint64_t input_digest = 0;
    int order = 0;
    std::vector<RectificationStep> rectification;
    std::vector<ReductionStep> steps;
};

// ---- digests ---------------------------------------------------------------

inline std::string canonical_form_string(const OneFormJet& eta) {
    std::string s = "N=" + std::to_string(eta.order()) + ";P:";
    for (auto& [k, v] : eta.P.coefficients())
        s += std::to_string(k.first) + "," + std::to_string(k.second) + "=" + v.to_string() + ";";
    s += "Q:";
    for (auto& [k, v] : eta.Q.coefficients())
        s += std::to_string(k.first) + "," + std::to_string(k.second) + "=" + v.to_string() + ";";
    return s;
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t form_digest(const OneFormJet& eta) { return fnv1a(canonical_form_string(eta)); }

// ---- separatrix rectification ----------------------------------------------

inline FormalMapJet rectification_map(int order, int k, const FieldElement& c) {
    Jet2 u = Jet2::monomial(order, 1, 0);
    u.add_coeff(0, k, c);
    return FormalMapJet(std::move(u), Jet2::monomial(order, 0, 1));
}

// Kills Q(0,y) term by term. The y^{k+1} coefficient after phi_k is affine in
// c: A + c (k p02 + q11) with p02 = [y^2]P, q11 = [xy]Q of the quadratic part,
// so each step solves one scalar linear equation.
inline std::pair<OneFormJet, std::vector<RectificationStep>> rectify_separatrix(OneFormJet eta) {
    require_order_two(eta);
    GenericityReport rep = check_genericity(eta);
    if (!rep.cone_normalized)
        throw GenericityError("separatrix rectification requires the tangent cone c*xy(x-y)");
    const int N = eta.order();
    const FieldElement p02 = eta.P.coeff(0, 2);
    const FieldElement q11 = eta.Q.coeff(1, 1);
    std::vector<RectificationStep> steps;
    for (int k = 2; k <= N - 1; ++k) {
        FieldElement a = eta.Q.coeff(0, k + 1);
        if (a.is_zero()) continue;
        FieldElement pivot = p02 * FieldElement(k) + q11;
        if (pivot.is_zero()) throw ResonanceError(k);
        FieldElement c = -(a / pivot);
        eta = pullback(eta, rectification_map(N, k, c));
        if (!eta.Q.coeff(0, k + 1).is_zero())
            throw ObstructionError(k, "rectification step failed to cancel the target coefficient");
        steps.push_back({k, std::move(c)});
    }
    return {std::move(eta), std::move(steps)};
}

// ---- homological step ------------------------------------------------------

namespace detail {

// monomials of total degree d in grad-lex descending order: x^d, x^{d-1}y, ...
inline std::vector<Jet2::Key> homogeneous_basis(int d) {
    std::vector<Jet2::Key> mons;
    for (int i = d; i >= 0; --i) mons.push_back({i, d - i});
    return mons;
}

inline void append_equation_block(FMatrix& A, size_t col, size_t row_offset, const Jet2& contrib,
                                  const std::vector<Jet2::Key>& eq_mons, int m) {
    Jet2 part = contrib.homogeneous_part(m);
    for (size_t r = 0; r < eq_mons.size(); ++r) A[row_offset + r][col] += part.coeff(eq_mons[r].first, eq_mons[r].second);
}

}  // namespace detail

// The degree-m linear system in the unknowns (alpha, beta, delta, b), rows =
// degree-m coefficients of the dx equation then the dy equation, columns in
// the fixed unknown order. Depends only on the quadratic part.
inline FMatrix homological_matrix(int m, const OneFormJet& eta2) {
    const int order = eta2.order();
    const Jet2 P2 = eta2.P.homogeneous_part(2);
    const Jet2 Q2 = eta2.Q.homogeneous_part(2);
    const Jet2 dxP2 = P2.partial_x(), dyP2 = P2.partial_y();
    const Jet2 dxQ2 = Q2.partial_x(), dyQ2 = Q2.partial_y();

    auto amons = detail::homogeneous_basis(m - 1);
    auto dmons = detail::homogeneous_basis(m - 2);
    auto eqmons = detail::homogeneous_basis(m);
    const size_t rows = 2 * eqmons.size();
    const size_t cols = amons.size() * 2 + dmons.size() + 1;
    FMatrix A(rows, FVector(cols, FieldElement::zero()));

    size_t col = 0;
    for (auto& mk : amons) {  // alpha coefficients
        Jet2 mu = Jet2::monomial(order, mk.first, mk.second);
        detail::append_equation_block(A, col, 0, mu * dxP2 + P2 * mu.partial_x(), eqmons, m);
        detail::append_equation_block(A, col, eqmons.size(), mu * dxQ2 + P2 * mu.partial_y(), eqmons, m);
        ++col;
    }
    for (auto& mk : amons) {  // beta coefficients
        Jet2 mu = Jet2::monomial(order, mk.first, mk.second);
        detail::append_equation_block(A, col, 0, mu * dyP2 + Q2 * mu.partial_x(), eqmons, m);
        detail::append_equation_block(A, col, eqmons.size(), mu * dyQ2 + Q2 * mu.partial_y(), eqmons, m);
        ++col;
    }
    for (auto& mk : dmons) {  // delta coefficients
        Jet2 mu = Jet2::monomial(order, mk.first, mk.second);
        detail::append_equation_block(A, col, 0, (mu * P2).scaled(FieldElement(-1)), eqmons, m);
        detail::append_equation_block(A, col, eqmons.size(), (mu * Q2).scaled(FieldElement(-1)), eqmons, m);
        ++col;
    }
    // b column: the degree-m target is the correction b x^{k+2}(x dy - y dx)
    // with k+3 = m, i.e. coefficients -b x^{m-1} y (dx side) and +b x^m (dy
    // side); moved to the left-hand side these enter with opposite signs
    detail::append_equation_block(A, col, 0, Jet2::monomial(order, m - 1, 1), eqmons, m);
    detail::append_equation_block(A, col, eqmons.size(), Jet2::monomial(order, m, 0).scaled(FieldElement(-1)),
                                  eqmons, m);
    return A;
}

inline FVector homological_rhs(int m, const OneFormJet& eta_m) {
    auto eqmons = detail::homogeneous_basis(m);
    FVector rhs(2 * eqmons.size(), FieldElement::zero());
    Jet2 Pm = eta_m.P.homogeneous_part(m);
    Jet2 Qm = eta_m.Q.homogeneous_part(m);
    for (size_t r = 0; r < eqmons.size(); ++r) {
        rhs[r] = -Pm.coeff(eqmons[r].first, eqmons[r].second);
        rhs[eqmons.size() + r] = -Qm.coeff(eqmons[r].first, eqmons[r].second);
    }
    return rhs;
}

inline ReductionStep homological_solve(int m, const OneFormJet& eta2, const OneFormJet& eta_m) {
    if (m < 3) throw ValidationError("homological step needs degree m >= 3");
    FMatrix A = homological_matrix(m, eta2);
    FVector rhs = homological_rhs(m, eta_m);
    LinearSolveResult sol = solve_linear_system(A, rhs);
    if (!sol.consistent) throw ObstructionError(m, "homological system is inconsistent");
    const size_t b_index = sol.solution.size() - 1;
    for (auto& kvec : sol.kernel)
        if (!kvec[b_index].is_zero())
            throw ObstructionError(m, "b-component of the homological kernel is nonzero");

    const int order = eta2.order();
    ReductionStep step(m, order);
    auto amons = detail::homogeneous_basis(m - 1);
    auto dmons = detail::homogeneous_basis(m - 2);
    size_t col = 0;
    for (auto& mk : amons) step.alpha.set_coeff(mk.first, mk.second, sol.solution[col++]);
    for (auto& mk : amons) step.beta.set_coeff(mk.first, mk.second, sol.solution[col++]);
    for (auto& mk : dmons) step.delta.set_coeff(mk.first, mk.second, sol.solution[col++]);
    step.b = sol.solution[col];
    return step;
}

// eta <- (1 - delta) * H^* eta with H = (x + alpha, y + beta), exact to order N
inline OneFormJet apply_reduction_step(const OneFormJet& eta, const ReductionStep& step) {
    const int N = eta.order();
    Jet2 u = Jet2::monomial(N, 1, 0) + step.alpha;
    Jet2 v = Jet2::monomial(N, 0, 1) + step.beta;
    OneFormJet pulled = pullback(eta, FormalMapJet(std::move(u), std::move(v)));
    Jet2 unit = Jet2::monomial(N, 0, 0) - step.delta;
    return OneFormJet(unit * pulled.P, unit * pulled.Q);
}

// the degree-m piece of the normal form: b x^{m-3+2}(x dy - y dx)
inline OneFormJet normal_form_part(int order, int m, const FieldElement& b) {
    OneFormJet part(order);
    part.P.set_coeff(m - 1, 1, -b);
    part.Q.set_coeff(m, 0, b);
    return part;
}

// ---- full reduction driver -------------------------------------------------

inline std::pair<NormalForm, ReductionTranscript> reduce_to_normal_form(const OneFormJet& input) {
    const int N = input.order();
    if (N < 4) throw ValidationError("reduction requires truncation order N >= 4");
    require_order_two(input);
    GenericityReport rep = check_genericity(input);
    if (rep.dicritic) throw GenericityError("input is dicritic: tangent cone vanishes identically");
    if (!rep.cone_normalized)
        throw GenericityError("tangent cone is not a scalar multiple of xy(x-y); apply a linear change first");
    if (!rep.generic) throw GenericityError("residues are rational numbers; input is not generic");

    ReductionTranscript transcript;
    transcript.input_digest = form_digest(input);
    transcript.order = N;

    auto [eta, rect] = rectify_separatrix(input);
    transcript.rectification = std::move(rect);

    const OneFormJet eta2 = input.homogeneous_part(2);
    NormalForm nf;
    nf.residues = *rep.residues;
    nf.N = N;
    for (int m = 3; m <= N; ++m) {
        ReductionStep step = homological_solve(m, eta2, eta.homogeneous_part(m));
        eta = apply_reduction_step(eta, step);
        if (eta.homogeneous_part(m) != normal_form_part(N, m, step.b))
            throw ObstructionError(m, "degree-m residual is not in normal-form shape");
        nf.b.push_back(step.b);
        transcript.steps.push_back(std::move(step));
    }
    std::set<int> gens;
    auto absorb = [&gens](const FieldElement& e) {
        auto s = e.support();
        gens.insert(s.begin(), s.end());
    };
    absorb(nf.residues.alpha1);
    absorb(nf.residues.alpha2);
    absorb(nf.residues.alpha3);
    for (auto& bk : nf.b) absorb(bk);
    nf.field = make_descriptor(gens);
    return {std::move(nf), std::move(transcript)};
}

inline OneFormJet replay(const ReductionTranscript& transcript, OneFormJet eta) {
    if (form_digest(eta) != transcript.input_digest) throw DigestMismatchError();
    const int N = eta.order();
    for (auto& st : transcript.rectification) eta = pullback(eta, rectification_map(N, st.k, st.c));
    for (auto& st : transcript.steps) eta = apply_reduction_step(eta, st);
    return eta;
}

}  // namespace fnf

#endif  // FNF_REDUCTION_HPP
