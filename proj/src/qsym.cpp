#include "schurzeta/qsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schurzeta/tableau.hpp"
#include "schurzeta/zeta.hpp"

namespace schurzeta {

int composition_weight(const Composition& c) {
    return std::accumulate(c.begin(), c.end(), 0);
}

std::string composition_str(const Composition& c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ')';
    return os.str();
}

QSymElement QSymElement::monomial(Composition c, long long coeff) {
    for (int p : c)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    QSymElement e;
    e.add(c, coeff);
    return e;
}

long long QSymElement::coeff(const Composition& c) const {
    const auto it = terms_.find(c);
    return it == terms_.end() ? 0 : it->second;
}

void QSymElement::add(const Composition& c, long long coeff) {
    if (coeff == 0) return;
    const auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

QSymElement& QSymElement::operator+=(const QSymElement& o) {
    for (const auto& [c, k] : o.terms_) add(c, k);
    return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& o) {
    for (const auto& [c, k] : o.terms_) add(c, -k);
    return *this;
}

QSymElement& QSymElement::operator*=(long long k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, v] : terms_) v *= k;
    return *this;
}

int QSymElement::max_weight() const {
    int w = 0;
    for (const auto& [c, k] : terms_) w = std::max(w, composition_weight(c));
    return w;
}

std::string QSymElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, k] : terms_) {
        if (first) {
            if (k < 0) os << '-';
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        const long long a = k < 0 ? -k : k;
        if (a != 1) os << a << '*';
        os << 'M' << composition_str(c);
        first = false;
    }
    return os.str();
}

namespace {

void quasi_shuffles(const Composition& a, std::size_t i, const Composition& b, std::size_t j,
                    Composition& prefix, QSymElement& out, long long coeff) {
    if (i == a.size() && j == b.size()) {
        out.add(prefix, coeff);
        return;
    }
    if (i < a.size()) {
        prefix.push_back(a[i]);
        quasi_shuffles(a, i + 1, b, j, prefix, out, coeff);
        prefix.pop_back();
    }
    if (j < b.size()) {
        prefix.push_back(b[j]);
        quasi_shuffles(a, i, b, j + 1, prefix, out, coeff);
        prefix.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        prefix.push_back(a[i] + b[j]);
        quasi_shuffles(a, i + 1, b, j + 1, prefix, out, coeff);
        prefix.pop_back();
    }
}

}  // namespace

QSymElement harmonic_product(const QSymElement& a, const QSymElement& b, int weight_cap) {
    QSymElement out;
    for (const auto& [ca, ka] : a.terms()) {
        const int wa = composition_weight(ca);
        for (const auto& [cb, kb] : b.terms()) {
            if (wa + composition_weight(cb) > weight_cap) continue;
            Composition prefix;
            quasi_shuffles(ca, 0, cb, 0, prefix, out, ka * kb);
        }
    }
    return out;
}

TensorElement coproduct(const QSymElement& a) {
    TensorElement out;
    for (const auto& [c, k] : a.terms()) {
        for (std::size_t cut = 0; cut <= c.size(); ++cut) {
            Composition left(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(cut));
            Composition right(c.begin() + static_cast<std::ptrdiff_t>(cut), c.end());
            auto key = std::make_pair(std::move(left), std::move(right));
            auto [it, inserted] = out.try_emplace(std::move(key), k);
            if (!inserted) {
                it->second += k;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

namespace {

// All ways of merging adjacent parts of c.
void coarsenings(const Composition& c, std::size_t i, Composition& acc,
                 std::vector<Composition>& out) {
    if (i == c.size()) {
        out.push_back(acc);
        return;
    }
    // start a new block
    acc.push_back(c[i]);
    coarsenings(c, i + 1, acc, out);
    acc.pop_back();
    // extend the previous block
    if (!acc.empty() && i > 0) {
        acc.back() += c[i];
        coarsenings(c, i + 1, acc, out);
        acc.back() -= c[i];
    }
}

std::vector<Composition> all_coarsenings(const Composition& c) {
    std::vector<Composition> out;
    if (c.empty()) {
        out.push_back({});
        return out;
    }
    Composition acc;
    coarsenings(c, 0, acc, out);
    return out;
}

}  // namespace

QSymElement antipode(const QSymElement& a) {
    QSymElement out;
    for (const auto& [c, k] : a.terms()) {
        Composition rev(c.rbegin(), c.rend());
        const long long sign = c.size() % 2 == 0 ? 1 : -1;
        for (const auto& beta : all_coarsenings(rev)) out.add(beta, sign * k);
    }
    return out;
}

QSymElement schur_qsym(const ExponentTableau& gamma, const Binding& b) {
    const auto resolved = gamma.resolve_all(b);
    std::vector<int> expo;
    expo.reserve(resolved.size());
    for (const auto& s : resolved) {
        if (!s.is_integer() || s.to_long() < 1)
            throw std::domain_error("quasi-symmetric expansion requires positive integer exponents");
        expo.push_back(static_cast<int>(s.to_long()));
    }
    QSymElement out;
    const int n = gamma.shape().cell_count();
    if (n == 0) return QSymElement::unit();
    SsytStream st(gamma.shape(), n);
    while (const auto* v = st.next()) {
        const int top = *std::max_element(v->begin(), v->end());
        Composition alpha(static_cast<std::size_t>(top), 0);
        for (std::size_t i = 0; i < v->size(); ++i)
            alpha[static_cast<std::size_t>((*v)[i] - 1)] += expo[i];
        // keep only packed fillings: every value 1..top appears
        if (std::find(alpha.begin(), alpha.end(), 0) != alpha.end()) continue;
        out.add(alpha, 1);
    }
    return out;
}

std::map<Monomial, long long> expand(const QSymElement& a, int nvars) {
    std::map<Monomial, long long> out;
    for (const auto& [c, k] : a.terms()) {
        const int l = static_cast<int>(c.size());
        if (l > nvars) continue;
        std::vector<int> idx(static_cast<std::size_t>(l));
        std::iota(idx.begin(), idx.end(), 1);
        // iterate over strictly increasing index tuples in 1..nvars
        while (true) {
            Monomial m;
            for (int t = 0; t < l; ++t)
                m.emplace_back(idx[static_cast<std::size_t>(t)], c[static_cast<std::size_t>(t)]);
            out[m] += k;
            if (out[m] == 0) out.erase(m);
            int t = l - 1;
            while (t >= 0 && idx[static_cast<std::size_t>(t)] == nvars - (l - 1 - t)) --t;
            if (t < 0) break;
            ++idx[static_cast<std::size_t>(t)];
            for (int u = t + 1; u < l; ++u)
                idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
        }
    }
    return out;
}

Rational specialize_zeta(const QSymElement& a, int bound) {
    Rational acc(0);
    for (const auto& [c, k] : a.terms()) {
        std::vector<Scalar> s;
        s.reserve(c.size());
        for (int p : c) s.emplace_back(p);
        acc += Rational(static_cast<long>(k)) * eval_ez(s, bound, EvalMode::Exact).value.rational();
    }
    return acc;
}

namespace {

void compositions_rec(int n, Composition& acc, std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = 1; p <= n; ++p) {
        acc.push_back(p);
        compositions_rec(n - p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    Composition acc;
    compositions_rec(n, acc, out);
    return out;
}

QsymCheck verify_hopf_axiom(int weight_cap) {
    for (int n = 0; n <= weight_cap; ++n) {
        for (const auto& alpha : compositions_of(n)) {
            const QSymElement m = QSymElement::monomial(alpha);
            QSymElement convolved;
            for (const auto& [pair, k] : coproduct(m)) {
                QSymElement left = antipode(QSymElement::monomial(pair.first, k));
                convolved += harmonic_product(left, QSymElement::monomial(pair.second));
            }
            const QSymElement expected = alpha.empty() ? QSymElement::unit() : QSymElement::zero();
            if (!(convolved == expected))
                return {false, "m(S x id)Delta failed at M" + composition_str(alpha) + ": got " +
                                   convolved.str()};
        }
    }
    return {true, "antipode convolution identity holds through weight " +
                      std::to_string(weight_cap)};
}

QsymCheck verify_antipode_involution(int weight_cap) {
    for (int n = 0; n <= weight_cap; ++n) {
        for (const auto& alpha : compositions_of(n)) {
            const QSymElement m = QSymElement::monomial(alpha);
            if (!(antipode(antipode(m)) == m))
                return {false, "S^2 != id at M" + composition_str(alpha)};
        }
    }
    return {true, "antipode is an involution through weight " + std::to_string(weight_cap)};
}

QsymCheck verify_antipode_transpose(const ExponentTableau& gamma, const Binding& b) {
    QSymElement lhs = antipode(schur_qsym(gamma, b));
    QSymElement rhs = schur_qsym(transpose_tableau(gamma), b);
    if (gamma.shape().cell_count() % 2 != 0) rhs *= -1;
    if (!(lhs == rhs))
        return {false, "antipode does not match the reflected sum: S(lhs) = " + lhs.str() +
                           " vs " + rhs.str()};
    return {true, "antipode matches the reflected sum"};
}

QsymCheck verify_s_giambelli(const Partition& lambda, const ExponentTableau& gamma,
                             const Binding& b, int weight_cap) {
    if (!(gamma.shape() == SkewDiagram::of_partition(lambda)))
        return {false, "exponent tableau shape does not match the partition"};
    if (!gamma.is_diagonal_constant())
        return {false, "hook expansion requires diagonal-constant exponents"};
    const FrobeniusForm f = frobenius(lambda);
    const int n = f.diagonal();

    const QSymElement lhs = schur_qsym(gamma, b);

    QSymElement det;
    for (const auto& sigma : all_permutations(n)) {
        QSymElement prod = QSymElement::unit();
        for (int i = 1; i <= n; ++i) {
            const int j = sigma[static_cast<std::size_t>(i - 1)];
            const SkewDiagram hook = SkewDiagram::of_partition(
                hook_shape(f.arms[static_cast<std::size_t>(i - 1)],
                           f.legs[static_cast<std::size_t>(j - 1)]));
            const ExponentTableau entry = ExponentTableau::filled(
                hook, [&](Cell c) { return gamma.diagonal_expr(c.content()); });
            prod = harmonic_product(prod, schur_qsym(entry, b), weight_cap);
        }
        prod *= permutation_sign(sigma);
        det += prod;
    }

    if (!(lhs == det)) {
        QSymElement diff = lhs;
        diff -= det;
        return {false, "hook determinant differs from the direct expansion by " + diff.str()};
    }
    return {true, "hook determinant matches the direct expansion"};
}

QsymCheck verify_specialization_square(const ExponentTableau& t, const Binding& b, int bound) {
    const QSymElement q = schur_qsym(t, b);
    for (int m = 0; m <= bound; ++m) {
        const Rational via_qsym = specialize_zeta(q, m);
        const Rational direct = eval_truncated(t, b, m, EvalMode::Exact).value.rational();
        if (via_qsym != direct)
            return {false, "specialization disagrees at cut-off " + std::to_string(m) + ": " +
                               rational_str(via_qsym) + " vs " + rational_str(direct)};
    }
    return {true, "specialization commutes with truncation through cut-off " +
                      std::to_string(bound)};
}

}  // namespace schurzeta
