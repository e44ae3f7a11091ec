#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schurzeta/exponent.hpp"
#include "schurzeta/partition.hpp"
#include "schurzeta/scalar.hpp"

namespace schurzeta {

// Composition: finite sequence of positive integer parts (possibly empty).
using Composition = std::vector<int>;

int composition_weight(const Composition& c);
std::string composition_str(const Composition& c);

// Integer combination of monomial quasi-symmetric functions M_alpha.
class QSymElement {
public:
    QSymElement() = default;

    static QSymElement zero() { return {}; }
    static QSymElement unit() { return monomial({}); }
    static QSymElement monomial(Composition c, long long coeff = 1);

    const std::map<Composition, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(const Composition& c) const;
    void add(const Composition& c, long long coeff);

    QSymElement& operator+=(const QSymElement& o);
    QSymElement& operator-=(const QSymElement& o);
    QSymElement& operator*=(long long k);
    friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
    friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }

    // Largest part-sum among the terms (0 for the zero element).
    int max_weight() const;

    std::string str() const;

    friend bool operator==(const QSymElement&, const QSymElement&) = default;

private:
    std::map<Composition, long long> terms_;
};

// Quasi-shuffle product M_alpha * M_beta; terms of weight above weight_cap
// are dropped (pass a cap no smaller than the full weight for exactness).
QSymElement harmonic_product(const QSymElement& a, const QSymElement& b,
                             int weight_cap = 1 << 28);

// Deconcatenation coproduct.
using TensorElement = std::map<std::pair<Composition, Composition>, long long>;
TensorElement coproduct(const QSymElement& a);

// Antipode: S(M_alpha) = (-1)^len(alpha) * sum of M_beta over coarsenings
// beta of the reversal of alpha.
QSymElement antipode(const QSymElement& a);

// Quasi-symmetric expansion of the tableau generating function: sum over
// packed semistandard fillings P of M_{alpha(P)}, where alpha(P)_v is the
// exponent-sum over cells holding value v. Entries must resolve to positive
// integers.
QSymElement schur_qsym(const ExponentTableau& gamma, const Binding& b);

// Monomial expansion in finitely many commuting variables t_1..t_n.
using Monomial = std::vector<std::pair<int, int>>;  // sorted (variable, exponent)
std::map<Monomial, long long> expand(const QSymElement& a, int nvars);

// Substitution t_m = 1/m for m <= bound, 0 beyond: an algebra homomorphism
// onto exact rationals; M_alpha maps to the Euler-Zagier truncation.
Rational specialize_zeta(const QSymElement& a, int bound);

struct QsymCheck {
    bool ok = false;
    std::string detail;
};

// m(S (x) id)Delta = unit . counit on every composition of weight <= cap.
QsymCheck verify_hopf_axiom(int weight_cap);
// S(S(M_alpha)) = M_alpha on every composition of weight <= cap.
QsymCheck verify_antipode_involution(int weight_cap);

// S(S_theta(gamma)) = (-1)^cells * S_{theta#}(gamma#).
QsymCheck verify_antipode_transpose(const ExponentTableau& gamma, const Binding& b);

// The hook determinant expansion of S_lambda(gamma) under the quasi-shuffle
// product, plus its antipode image; gamma must be diagonal-constant.
QsymCheck verify_s_giambelli(const Partition& lambda, const ExponentTableau& gamma,
                             const Binding& b, int weight_cap);

// specialize_zeta(schur_qsym(t)) == eval_truncated(t) at every cut-off <= bound.
QsymCheck verify_specialization_square(const ExponentTableau& t, const Binding& b, int bound);

// All compositions of weight exactly n.
std::vector<Composition> compositions_of(int n);

}  // namespace schurzeta
