#ifndef FNF_INVARIANTS_HPP
#define FNF_INVARIANTS_HPP

#include <vector>

#include "fnf/cone.hpp"

namespace fnf {

// eta_0 + x^2 b(x) (x dy - y dx) packaged by its invariants: the residue
// triple, the b-coefficients b_0..b_{N-3}, and the field of definition.
struct NormalForm {
    ResidueTriple residues;
    std::vector<FieldElement> b;  // index k holds b_k, k = 0..N-3
    FieldDescriptor field;
    int N = 0;
};

// generators actually occurring across residues and b, with their count
inline FieldDescriptor field_report(const NormalForm& nf) {
    std::set<int> s;
    auto absorb = [&s](const FieldElement& e) {
        auto sup = e.support();
        s.insert(sup.begin(), sup.end());
    };
    absorb(nf.residues.alpha1);
    absorb(nf.residues.alpha2);
    absorb(nf.residues.alpha3);
    for (auto& e : nf.b) absorb(e);
    return make_descriptor(s);
}

// b_k -> s^{k+1} b_k; residues unchanged
inline NormalForm homothety_action(const NormalForm& nf, const FieldElement& s) {
    if (s.is_zero()) throw ValidationError("homothety scale must be nonzero");
    NormalForm r = nf;
    FieldElement p = s;
    for (auto& bk : r.b) {
        bk *= p;
        p *= s;
    }
    r.field = field_report(r);
    return r;
}

// Equality up to the homothety x scalar group, decided over the algebraic
// closure: residues equal, zero patterns of b equal, and for every pair of
// nonzero indices j, k the cross ratios b_j^{k+1}/b_k^{j+1} agree.
inline bool invariant_equivalent(const NormalForm& a, const NormalForm& b) {
    if (a.N != b.N) throw ValidationError("normal forms have different truncation orders");
    if (!(a.residues == b.residues)) return false;
    size_t n = std::min(a.b.size(), b.b.size());
    if (a.b.size() != b.b.size()) return false;
    std::vector<size_t> nonzero;
    for (size_t k = 0; k < n; ++k) {
        if (a.b[k].is_zero() != b.b[k].is_zero()) return false;
        if (!a.b[k].is_zero()) nonzero.push_back(k);
    }
    for (size_t i = 0; i < nonzero.size(); ++i)
        for (size_t l = i + 1; l < nonzero.size(); ++l) {
            size_t j = nonzero[i], k = nonzero[l];
            FieldElement lhs = a.b[j].pow(static_cast<unsigned>(k + 1)) * b.b[k].pow(static_cast<unsigned>(j + 1));
            FieldElement rhs = b.b[j].pow(static_cast<unsigned>(k + 1)) * a.b[k].pow(static_cast<unsigned>(j + 1));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace fnf

#endif  // FNF_INVARIANTS_HPP
