#ifndef FNF_FIELD_HPP
#define FNF_FIELD_HPP

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fnf/polynomial.hpp"

namespace fnf {

// A transcendental generator t<index>, index starting at 1. Generators are
// algebraically independent over Q by construction.
struct Generator {
    std::string name;
    int index = 0;

    bool operator==(const Generator& o) const { return index == o.index; }
    bool operator<(const Generator& o) const { return index < o.index; }
};

inline Generator make_generator(int index) { return Generator{"t" + std::to_string(index), index}; }

struct FieldDescriptor {
    std::vector<Generator> generators;  // ordered by index
    int transcendence_degree = 0;
};

class DivisionByZeroError : public std::runtime_error {
public:
    DivisionByZeroError() : std::runtime_error("division by zero in field arithmetic") {}
};

// Exact element of Q(t1,...,tm). Canonical representative: integer-coefficient
// numerator and denominator with gcd(num, den) = 1, coprime integer contents,
// and positive leading coefficient of the denominator under grad-lex. The
// representative is unique, so structural equality is mathematical equality.
class FieldElement {
public:
    FieldElement() : num_(), den_(1) {}
    explicit FieldElement(long n) : num_(n), den_(1) {}
    FieldElement(long n, long d) : num_(n), den_(d) { canonicalize(); }
    FieldElement(const mpz_class& n, const mpz_class& d) : num_(n), den_(d) { canonicalize(); }
    FieldElement(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    static FieldElement zero() { return FieldElement(); }
    static FieldElement one() { return FieldElement(1); }
    static FieldElement generator(int index) {
        if (index < 1 || index > kMaxVars)
            throw std::out_of_range("generator index out of supported range [1, " +
                                    std::to_string(kMaxVars) + "]");
        return FieldElement(Poly::variable(index - 1), Poly(1));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    // true iff the canonical form lies in Q
    bool is_rational_constant() const { return num_.is_constant() && den_.is_constant(); }

    // generator indices occurring in the canonical representative
    std::set<int> support() const {
        std::set<int> s;
        for (int v : num_.variables()) s.insert(v + 1);
        for (int v : den_.variables()) s.insert(v + 1);
        return s;
    }

    FieldElement operator-() const {
        FieldElement r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    FieldElement operator+(const FieldElement& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (den_ == o.den_) return FieldElement(num_ + o.num_, den_);
        Poly g = poly_gcd(den_, o.den_);
        if (g.is_one()) return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
        Poly db = divide_exact(den_, g);
        Poly dd = divide_exact(o.den_, g);
        return FieldElement(num_ * dd + o.num_ * db, db * o.den_);
    }
    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

    FieldElement operator*(const FieldElement& o) const {
        if (is_zero() || o.is_zero()) return FieldElement();
        if (is_one()) return o;
        if (o.is_one()) return *this;
        Poly g1 = poly_gcd(num_, o.den_);
        Poly g2 = poly_gcd(o.num_, den_);
        Poly n = divide_exact(num_, g1) * divide_exact(o.num_, g2);
        Poly d = divide_exact(den_, g2) * divide_exact(o.den_, g1);
        FieldElement r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        r.normalize_units();
        return r;
    }

    FieldElement operator/(const FieldElement& o) const {
        if (o.is_zero()) throw DivisionByZeroError();
        FieldElement inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        if (inv.den_.leading().c < 0) {
            inv.den_ = -inv.den_;
            inv.num_ = -inv.num_;
        }
        return *this * inv;
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement pow(unsigned e) const {
        FieldElement r = one(), base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = (e >>= 1u) ? base * base : base;
        }
        return r;
    }

    bool operator==(const FieldElement& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // deterministic total order (used for stable output only)
    bool less_than(const FieldElement& o) const {
        if (num_ != o.num_) return num_.less_than(o.num_);
        return den_.less_than(o.den_);
    }

    // canonical text under the coefficient-expression grammar
    std::string to_string() const;

private:
    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZeroError();
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        normalize_units();
    }
    // assumes poly gcd(num, den) already trivial
    void normalize_units() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        mpz_class cn = num_.content(), cd = den_.content();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (g > 1) {
            num_ = num_.divide_exact_int(g);
            den_ = den_.divide_exact_int(g);
        }
        if (den_.leading().c < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    Poly num_, den_;
};

inline std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms()) {
        mpz_class c = t.c;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed = false;
        if (c != 1 || t.m.is_unit()) {
            out << c.get_str();
            printed = true;
        }
        for (int v = 0; v < kMaxVars; ++v) {
            if (!t.m.e[v]) continue;
            if (printed) out << "*";
            out << "t" << (v + 1);
            if (t.m.e[v] > 1) out << "^" << static_cast<int>(t.m.e[v]);
            printed = true;
        }
    }
    return out.str();
}

inline std::string FieldElement::to_string() const {
    if (den_.is_one()) return poly_to_string(num_);
    return "(" + poly_to_string(num_) + ")/(" + poly_to_string(den_) + ")";
}

inline FieldDescriptor make_descriptor(const std::set<int>& indices) {
    FieldDescriptor d;
    for (int i : indices) d.generators.push_back(make_generator(i));
    d.transcendence_degree = static_cast<int>(d.generators.size());
    return d;
}

}  // namespace fnf

#endif  // FNF_FIELD_HPP
