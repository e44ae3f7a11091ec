#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schurzeta/exponent.hpp"
#include "schurzeta/scalar.hpp"

namespace schurzeta {

enum class EntryKind { Tableau, One, Zero };

struct DetEntry {
    EntryKind kind = EntryKind::Zero;
    ExponentTableau tableau;  // meaningful for EntryKind::Tableau

    static DetEntry one() { return {EntryKind::One, {}}; }
    static DetEntry zero() { return {EntryKind::Zero, {}}; }
    static DetEntry of(ExponentTableau t) { return {EntryKind::Tableau, std::move(t)}; }
};

struct DeterminantSpec {
    std::string label;
    int n = 0;
    std::vector<DetEntry> entries;  // row-major n*n

    const DetEntry& at(int i, int j) const {  // 1-indexed
        return entries[static_cast<std::size_t>((i - 1) * n + (j - 1))];
    }
    DetEntry& at(int i, int j) {
        return entries[static_cast<std::size_t>((i - 1) * n + (j - 1))];
    }
};

// One verifiable equality: the direct zeta of lhs against one or more
// determinant expansions that must all reproduce it.
struct IdentityInstance {
    std::string name;
    ExponentTableau lhs;
    std::vector<DeterminantSpec> dets;
};

// Column-per-column determinant: entry (i,j) is the depth-(λ'_i - i + j)
// column tableau ending with content variable z_{j-1} at the top cell read
// downward (constant 1 at depth 0, constant 0 below).
IdentityInstance jacobi_trudi_spec(const Partition& lambda);

// Frobenius hook determinant over the content filling.
IdentityInstance giambelli_spec(const Partition& lambda);

// Hook determinant with wing tableaux pasted on the first row / first column
// entries; the direct side is the laced diagram.
IdentityInstance laced_giambelli_spec(const Partition& core,
                                      const std::optional<ExponentTableau>& lower,
                                      const std::optional<ExponentTableau>& upper);

// Anti-diagonal transpose of the Giambelli identity.
IdentityInstance skew_giambelli_spec(const Partition& lambda);

// Rectangle core with single-line wings: the laced determinant and the
// transposed-shape determinant both equal the direct laced zeta.
IdentityInstance rectangle_pair_spec(const Partition& rectangle,
                                     const std::optional<ExponentTableau>& lower,
                                     const std::optional<ExponentTableau>& upper);

struct VerificationReport {
    std::string identity;
    int bound = 0;
    EvalMode mode = EvalMode::Exact;
    double tolerance = 0.0;
    Scalar direct;
    std::vector<std::string> det_labels;
    std::vector<int> det_sizes;
    std::vector<Scalar> determinant_values;
    Scalar residual;  // max |direct - det|
    bool pass = false;
    std::uint64_t direct_fillings = 0;
    std::vector<std::vector<Scalar>> entry_values;
    std::vector<std::vector<std::uint64_t>> entry_fillings;
    double seconds = 0.0;
};

// Evaluates the direct side and every determinant at the cut-off and compares.
// Exact mode demands residual exactly 0; floating mode uses tol. jobs > 1
// evaluates determinant entries concurrently.
VerificationReport verify(const IdentityInstance& inst, const Binding& b, int bound,
                          EvalMode mode, double tol = 0.0, int jobs = 1);

// Adds +1 to one determinant entry cell (resolved through the binding), for
// sensitivity checks: det_index / flat entry_index / cell_index.
IdentityInstance perturb_entry(const IdentityInstance& inst, const Binding& b,
                               std::size_t det_index, std::size_t entry_index,
                               std::size_t cell_index);

// Exact determinant by fraction-free (Bareiss) elimination; Leibniz expansion
// kept as an independent cross-check for small sizes.
Rational det_bareiss(std::vector<Rational> m, int n);
Rational det_leibniz(const std::vector<Rational>& m, int n);
Complex det_float(std::vector<Complex> m, int n);

}  // namespace schurzeta
