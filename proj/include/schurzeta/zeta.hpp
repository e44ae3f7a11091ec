#pragma once

#include <cstdint>
#include <vector>

#include "schurzeta/exponent.hpp"
#include "schurzeta/tableau.hpp"

namespace schurzeta {

struct TruncatedValue {
    Scalar value;
    int bound = 0;
    EvalMode mode = EvalMode::Exact;
    std::uint64_t fillings = 0;
};

// Sum of weight() over all semistandard fillings with entries <= bound.
TruncatedValue eval_truncated(const ExponentTableau& t, const Binding& b, int bound,
                              EvalMode mode);

// Euler-Zagier sum over 0 < m_1 < ... < m_r <= bound of prod m_i^(-s_i),
// computed by a prefix-sum recurrence independent of the tableau enumerator.
// Equals eval_truncated on the single-column tableau with s_1 in the top cell.
TruncatedValue eval_ez(const std::vector<Scalar>& s, int bound, EvalMode mode);
TruncatedValue eval_ez(const std::vector<ExponentExpr>& s, const Binding& b, int bound,
                       EvalMode mode);

struct AdaptiveEstimate {
    Complex value{0.0, 0.0};
    double last_increment = 0.0;
    int final_bound = 0;
    bool converged = false;
    std::uint64_t fillings = 0;
};

// Doubles the cut-off until the increment drops below tol (floating mode).
// Requires an admissible exponent tableau per check_domain.
AdaptiveEstimate eval_adaptive(const ExponentTableau& t, const Binding& b, double tol,
                               int bound_cap = 1 << 20);

}  // namespace schurzeta
