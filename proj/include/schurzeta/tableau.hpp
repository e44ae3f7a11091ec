#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schurzeta/exponent.hpp"

namespace schurzeta {

// Integer filling of a row-interval diagram, entries row-major.
class Filling {
public:
    Filling() = default;
    Filling(SkewDiagram shape, std::vector<int> values);

    const SkewDiagram& shape() const { return shape_; }
    const std::vector<int>& values() const { return values_; }
    int at(int row, int col) const;
    int& at(int row, int col);

    bool is_ssyt() const;

    std::string str() const;

    friend bool operator==(const Filling&, const Filling&) = default;

private:
    SkewDiagram shape_;
    std::vector<int> values_;
};

// Streams the semistandard fillings (rows weakly increase, columns strictly
// increase) with entries in 1..bound, in lexicographic row-major order,
// holding O(cells) state. Restricting the first cell's admissible values
// partitions the stream for parallel consumption.
class SsytStream {
public:
    SsytStream(const SkewDiagram& shape, int bound);
    SsytStream(const SkewDiagram& shape, int bound, int first_lo, int first_hi);

    // Borrowed row-major value vector; nullptr once exhausted.
    const std::vector<int>* next();

    const SkewDiagram& shape() const { return shape_; }

private:
    int low(std::size_t k) const;
    std::ptrdiff_t backtrack(std::ptrdiff_t from);

    SkewDiagram shape_;
    int bound_;
    int first_lo_, first_hi_;
    std::vector<int> left_, up_;  // row-major neighbor indices, -1 when absent
    std::vector<int> vals_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Filling> enumerate_ssyt(const SkewDiagram& shape, int bound);
std::uint64_t count_ssyt(const SkewDiagram& shape, int bound);

// Product over cells of value^(-exponent). Exact mode requires every
// exponent to resolve to an exact integer.
Scalar weight(const ExponentTableau& exponents, const Binding& b, const Filling& f,
              EvalMode mode);

// The three regions of a partition diagram used by the hook decomposition:
// arm rows D(p_i) = (i, i+1..λ_i), leg columns D(q_j) = (j+1..λ'_j, j), and
// the diagonal boxes B.
struct Regions {
    std::vector<Cell> arm;
    std::vector<Cell> leg;
    std::vector<Cell> diagonal;
};

Regions regions(const Partition& p);

// Permutations are vectors of images of 1..n; sign counts inversions.
int permutation_sign(const std::vector<int>& sigma);
std::vector<std::vector<int>> all_permutations(int n);

// Filling of a partition shape paired with a diagonal permutation, plus the
// optional wing fillings of a laced diagram. Conditions for membership:
//   (I)   rows weakly increase across the arm region,
//   (II)  each column strictly increases from its diagonal box down,
//   (III) t(σ(i),σ(i)) <= t(i,i+1) whenever row i has an arm cell,
// wings semistandard, upper wing's SW value < core NE value, and lower
// wing's NE value <= core SW value.
struct SigmaTableau {
    std::vector<int> sigma;
    Filling core;
    std::optional<Filling> lower;
    std::optional<Filling> upper;

    friend bool operator==(const SigmaTableau&, const SigmaTableau&) = default;
};

bool is_sigma_tableau(const std::vector<int>& sigma, const Filling& core,
                      const std::optional<Filling>& lower,
                      const std::optional<Filling>& upper);

std::vector<SigmaTableau> enumerate_sigma_tableaux(
    const Partition& lambda, const std::vector<int>& sigma, int bound,
    const std::optional<SkewDiagram>& lower_shape = std::nullopt,
    const std::optional<SkewDiagram>& upper_shape = std::nullopt);

// Hook decomposition: part k lives on the laced hook (p_k+1, 1^{q_σ(k)}),
// corner t(σ(k),σ(k)), arm row k, leg column σ(k), with the upper wing
// attached to part k=1 and the lower wing to the part with σ(k)=1.
std::vector<Filling> split(const SigmaTableau& t);

// Inverse of split; validates that the parts assemble into a genuine
// σ-tableau and round-trips with split.
SigmaTableau reassemble(const std::vector<Filling>& parts, const std::vector<int>& sigma,
                        const Partition& lambda,
                        const std::optional<SkewDiagram>& lower_shape = std::nullopt,
                        const std::optional<SkewDiagram>& upper_shape = std::nullopt);

// Sign-reversing pairing on the pairs outside {identity} x SSYT; throws
// std::invalid_argument when given an (identity, SSYT) pair, which has no
// partner.
SigmaTableau cancellation_partner(const SigmaTableau& t);

// The composed laced filling of a σ-tableau (core only when no wings).
Filling compose_filling(const SigmaTableau& t);

struct CancellationReport {
    std::uint64_t ssyt_count = 0;        // (identity, SSYT) pairs
    std::uint64_t cancelled_count = 0;   // everything else
    Scalar ssyt_sum;                     // equals the truncated zeta value
    Scalar cancelled_sum;                // must vanish
};

// Enumerates every (σ, tableau) pair at the given cut-off and accumulates the
// signed weights, separating the SSYT part from the part that must cancel.
CancellationReport cancellation_sum(const Partition& lambda, const ExponentTableau& core_tab,
                                    const std::optional<ExponentTableau>& lower_tab,
                                    const std::optional<ExponentTableau>& upper_tab,
                                    const Binding& b, int bound, EvalMode mode);

}  // namespace schurzeta
