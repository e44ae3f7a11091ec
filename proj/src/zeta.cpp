#include "schurzeta/zeta.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace schurzeta {

namespace {

Rational negative_power_exact(long base, long e) {
    mpz_class b(base), p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(mpz_class(1), p);
    return Rational(p);
}

Complex negative_power_float(long base, Complex s) {
    return std::exp(-s * std::log(static_cast<double>(base)));
}

std::uint64_t saturating_binomial(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

TruncatedValue eval_truncated(const ExponentTableau& t, const Binding& b, int bound,
                              EvalMode mode) {
    if (bound < 0) throw std::invalid_argument("cut-off must be nonnegative");
    const auto resolved = t.resolve_all(b);
    const std::size_t ncells = resolved.size();
    TruncatedValue out;
    out.bound = bound;
    out.mode = mode;

    if (mode == EvalMode::Exact) {
        std::vector<std::vector<Rational>> table(ncells);
        for (std::size_t i = 0; i < ncells; ++i) {
            if (!resolved[i].is_integer())
                throw std::domain_error("exact mode requires integer exponents");
            const long e = resolved[i].to_long();
            table[i].reserve(static_cast<std::size_t>(bound) + 1);
            table[i].emplace_back(0);  // index 0 unused
            for (int m = 1; m <= bound; ++m) table[i].push_back(negative_power_exact(m, e));
        }
        Rational acc(0);
        SsytStream st(t.shape(), bound);
        while (const auto* v = st.next()) {
            Rational p(1);
            for (std::size_t i = 0; i < ncells; ++i)
                p *= table[i][static_cast<std::size_t>((*v)[i])];
            acc += p;
            ++out.fillings;
        }
        out.value = Scalar(std::move(acc));
        return out;
    }

    std::vector<std::vector<Complex>> table(ncells);
    for (std::size_t i = 0; i < ncells; ++i) {
        const Complex s = resolved[i].to_complex();
        table[i].reserve(static_cast<std::size_t>(bound) + 1);
        table[i].emplace_back(0.0, 0.0);
        for (int m = 1; m <= bound; ++m) table[i].push_back(negative_power_float(m, s));
    }
    Complex acc(0.0, 0.0);
    SsytStream st(t.shape(), bound);
    while (const auto* v = st.next()) {
        Complex p(1.0, 0.0);
        for (std::size_t i = 0; i < ncells; ++i)
            p *= table[i][static_cast<std::size_t>((*v)[i])];
        acc += p;
        ++out.fillings;
    }
    out.value = Scalar(acc);
    return out;
}

TruncatedValue eval_ez(const std::vector<Scalar>& s, int bound, EvalMode mode) {
    if (bound < 0) throw std::invalid_argument("cut-off must be nonnegative");
    const int r = static_cast<int>(s.size());
    TruncatedValue out;
    out.bound = bound;
    out.mode = mode;
    out.fillings = saturating_binomial(bound, r);

    if (mode == EvalMode::Exact) {
        std::vector<long> e(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) {
            if (!s[static_cast<std::size_t>(i)].is_integer())
                throw std::domain_error("exact mode requires integer exponents");
            e[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i)].to_long();
        }
        // G[k] = sum over chains m_1 < ... < m_k <= m of prod m_i^(-s_i),
        // updated for one more m per outer step.
        std::vector<Rational> G(static_cast<std::size_t>(r) + 1, Rational(0));
        G[0] = 1;
        for (int m = 1; m <= bound; ++m)
            for (int k = r; k >= 1; --k)
                G[static_cast<std::size_t>(k)] +=
                    negative_power_exact(m, e[static_cast<std::size_t>(k - 1)]) *
                    G[static_cast<std::size_t>(k - 1)];
        out.value = Scalar(G[static_cast<std::size_t>(r)]);
        return out;
    }

    std::vector<Complex> se(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) se[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i)].to_complex();
    std::vector<Complex> G(static_cast<std::size_t>(r) + 1, Complex(0.0, 0.0));
    G[0] = Complex(1.0, 0.0);
    for (int m = 1; m <= bound; ++m)
        for (int k = r; k >= 1; --k)
            G[static_cast<std::size_t>(k)] +=
                negative_power_float(m, se[static_cast<std::size_t>(k - 1)]) *
                G[static_cast<std::size_t>(k - 1)];
    out.value = Scalar(G[static_cast<std::size_t>(r)]);
    return out;
}

TruncatedValue eval_ez(const std::vector<ExponentExpr>& s, const Binding& b, int bound,
                       EvalMode mode) {
    std::vector<Scalar> resolved;
    resolved.reserve(s.size());
    for (const auto& e : s) resolved.push_back(b.resolve(e));
    return eval_ez(resolved, bound, mode);
}

AdaptiveEstimate eval_adaptive(const ExponentTableau& t, const Binding& b, double tol,
                               int bound_cap) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const DomainVerdict dom = check_domain(t, b);
    if (!dom.admissible)
        throw std::domain_error("exponents lie outside the convergence domain");

    AdaptiveEstimate est;
    if (t.shape().empty()) {
        est.value = Complex(1.0, 0.0);
        est.converged = true;
        est.fillings = 1;
        return est;
    }

    // Single columns take the O(bound) prefix-sum recurrence; the generic
    // enumerator would walk binomial(bound, rows) fillings per refinement.
    bool is_column = true;
    for (const RowSpan& r : t.shape().rows())
        if (r.start != 1 || r.end != 1) { is_column = false; break; }

    Complex prev(0.0, 0.0);
    bool have_prev = false;
    for (int bound = 16; bound <= bound_cap; bound *= 2) {
        const TruncatedValue tv = is_column
                                      ? eval_ez(t.entries(), b, bound, EvalMode::Float)
                                      : eval_truncated(t, b, bound, EvalMode::Float);
        est.value = tv.value.to_complex();
        est.final_bound = bound;
        est.fillings += tv.fillings;
        if (have_prev) {
            est.last_increment = std::abs(est.value - prev);
            if (est.last_increment < tol) {
                est.converged = true;
                break;
            }
        }
        prev = est.value;
        have_prev = true;
    }
    return est;
}

}  // namespace schurzeta
