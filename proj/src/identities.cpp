#include "schurzeta/identities.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "schurzeta/tableau.hpp"
#include "schurzeta/zeta.hpp"

namespace schurzeta {

IdentityInstance jacobi_trudi_spec(const Partition& lambda) {
    IdentityInstance inst;
    inst.name = "column determinant " + lambda.str();
    inst.lhs = content_fill(SkewDiagram::of_partition(lambda));
    const Partition conj = lambda.conjugate();
    const int n = lambda.part(1);

    DeterminantSpec det;
    det.label = "columns";
    det.n = n;
    det.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                       DetEntry::zero());
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int depth = conj.part(i) - i + j;
            if (depth < 0) continue;
            if (depth == 0) {
                det.at(i, j) = DetEntry::one();
                continue;
            }
            const SkewDiagram col =
                SkewDiagram::of_partition(Partition(std::vector<int>(static_cast<std::size_t>(depth), 1)));
            std::vector<ExponentExpr> entries;
            entries.reserve(static_cast<std::size_t>(depth));
            for (int t = 1; t <= depth; ++t) entries.push_back(ExponentExpr::content(j - t));
            det.at(i, j) = DetEntry::of(ExponentTableau(col, std::move(entries)));
        }
    }
    inst.dets.push_back(std::move(det));
    return inst;
}

IdentityInstance giambelli_spec(const Partition& lambda) {
    IdentityInstance inst;
    inst.name = "hook determinant " + lambda.str();
    inst.lhs = content_fill(SkewDiagram::of_partition(lambda));
    const FrobeniusForm f = frobenius(lambda);
    const int n = f.diagonal();

    DeterminantSpec det;
    det.label = "hooks";
    det.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) det.entries.push_back(DetEntry::of(giambelli_entry(f, i, j)));
    inst.dets.push_back(std::move(det));
    return inst;
}

IdentityInstance laced_giambelli_spec(const Partition& core,
                                      const std::optional<ExponentTableau>& lower,
                                      const std::optional<ExponentTableau>& upper) {
    if (core.empty()) throw std::invalid_argument("laced core must be nonempty");
    IdentityInstance inst;
    inst.name = "laced hook determinant " + core.str();
    inst.lhs = compose_laced(content_fill(SkewDiagram::of_partition(core)), lower, upper);
    const FrobeniusForm f = frobenius(core);
    const int n = f.diagonal();

    DeterminantSpec det;
    det.label = "laced hooks";
    det.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            det.entries.push_back(DetEntry::of(laced_entry(f, i, j, lower, upper)));
    inst.dets.push_back(std::move(det));
    return inst;
}

IdentityInstance skew_giambelli_spec(const Partition& lambda) {
    IdentityInstance inst;
    inst.name = "reflected hook determinant " + lambda.str();
    inst.lhs = transpose_tableau(content_fill(SkewDiagram::of_partition(lambda)));
    const FrobeniusForm f = frobenius(lambda);
    const int n = f.diagonal();

    DeterminantSpec det;
    det.label = "reflected hooks";
    det.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            det.entries.push_back(DetEntry::of(skew_giambelli_entry(f, i, j)));
    inst.dets.push_back(std::move(det));
    return inst;
}

namespace {

bool single_column(const SkewDiagram& d) {
    for (const RowSpan& r : d.rows())
        if (r.start != 1 || r.end != 1) return false;
    return true;
}

}  // namespace

IdentityInstance rectangle_pair_spec(const Partition& rectangle,
                                     const std::optional<ExponentTableau>& lower,
                                     const std::optional<ExponentTableau>& upper) {
    if (rectangle.empty() || !rectangle.is_rectangle())
        throw std::invalid_argument("core must be a nonempty rectangle");
    // Only this orientation reflects to a straight shape: a row pasted left of
    // the southwest corner and a column pasted above the northeast corner.
    if (lower && !lower->shape().empty() && lower->shape().row_count() != 1)
        throw std::invalid_argument("lower wing must be a single row");
    if (upper && !upper->shape().empty() && !single_column(upper->shape()))
        throw std::invalid_argument("upper wing must be a single column");

    IdentityInstance inst;
    inst.name = "rectangle pair " + rectangle.str();
    inst.lhs = compose_laced(content_fill(SkewDiagram::of_partition(rectangle)), lower, upper);

    // Reflecting a single-line-winged rectangle yields a straight shape whose
    // anti-diagonals each carry one expression.
    const ExponentTableau flipped = transpose_tableau(inst.lhs);
    if (!flipped.shape().is_partition_shape())
        throw std::invalid_argument("reflected diagram is not a straight shape");
    if (!flipped.is_diagonal_constant())
        throw std::invalid_argument("reflected exponents are not diagonal-constant");
    const Partition mu = flipped.shape().to_partition();

    {
        const FrobeniusForm f = frobenius(rectangle);
        const int n = f.diagonal();
        DeterminantSpec det;
        det.label = "laced hooks";
        det.n = n;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                det.entries.push_back(DetEntry::of(laced_entry(f, i, j, lower, upper)));
        inst.dets.push_back(std::move(det));
    }
    {
        const FrobeniusForm fm = frobenius(mu);
        const int n = fm.diagonal();
        if (n != frobenius(rectangle).diagonal())
            throw std::logic_error("reflected diagonal length mismatch");
        DeterminantSpec det;
        det.label = "reflected hooks";
        det.n = n;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                det.entries.push_back(DetEntry::of(skew_giambelli_entry(
                    fm, i, j, [&](int k) { return flipped.diagonal_expr(k); })));
        inst.dets.push_back(std::move(det));
    }
    return inst;
}

Rational det_bareiss(std::vector<Rational> m, int n) {
    if (n == 0) return Rational(1);
    if (static_cast<int>(m.size()) != n * n) throw std::invalid_argument("matrix size mismatch");
    auto at = [&](int i, int j) -> Rational& {
        return m[static_cast<std::size_t>(i * n + j)];
    };
    Rational sign(1), prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Rational(0);
            for (int c = k; c < n; ++c) std::swap(at(k, c), at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

Rational det_leibniz(const std::vector<Rational>& m, int n) {
    if (n == 0) return Rational(1);
    if (static_cast<int>(m.size()) != n * n) throw std::invalid_argument("matrix size mismatch");
    Rational acc(0);
    for (const auto& sigma : all_permutations(n)) {
        Rational term(permutation_sign(sigma));
        for (int i = 0; i < n; ++i)
            term *= m[static_cast<std::size_t>(i * n + sigma[static_cast<std::size_t>(i)] - 1)];
        acc += term;
    }
    return acc;
}

Complex det_float(std::vector<Complex> m, int n) {
    if (n == 0) return Complex(1.0, 0.0);
    if (static_cast<int>(m.size()) != n * n) throw std::invalid_argument("matrix size mismatch");
    auto at = [&](int i, int j) -> Complex& {
        return m[static_cast<std::size_t>(i * n + j)];
    };
    Complex det(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = std::abs(at(k, k));
        for (int r = k + 1; r < n; ++r)
            if (std::abs(at(r, k)) > best) {
                best = std::abs(at(r, k));
                pivot = r;
            }
        if (best == 0.0) return Complex(0.0, 0.0);
        if (pivot != k) {
            for (int c = k; c < n; ++c) std::swap(at(k, c), at(pivot, c));
            det = -det;
        }
        det *= at(k, k);
        for (int r = k + 1; r < n; ++r) {
            const Complex factor = at(r, k) / at(k, k);
            for (int c = k; c < n; ++c) at(r, c) -= factor * at(k, c);
        }
    }
    return det;
}

namespace {

struct EntryResult {
    Scalar value;
    std::uint64_t fillings = 0;
};

EntryResult eval_entry(const DetEntry& e, const Binding& b, int bound, EvalMode mode) {
    EntryResult r;
    switch (e.kind) {
        case EntryKind::One:
            r.value = mode == EvalMode::Exact ? Scalar(1) : Scalar(Complex(1.0, 0.0));
            break;
        case EntryKind::Zero:
            r.value = mode == EvalMode::Exact ? Scalar(0) : Scalar(Complex(0.0, 0.0));
            break;
        case EntryKind::Tableau: {
            const TruncatedValue tv = eval_truncated(e.tableau, b, bound, mode);
            r.value = tv.value;
            r.fillings = tv.fillings;
            break;
        }
    }
    return r;
}

}  // namespace

VerificationReport verify(const IdentityInstance& inst, const Binding& b, int bound,
                          EvalMode mode, double tol, int jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.identity = inst.name;
    rep.bound = bound;
    rep.mode = mode;
    rep.tolerance = tol;

    const TruncatedValue direct = eval_truncated(inst.lhs, b, bound, mode);
    rep.direct = direct.value;
    rep.direct_fillings = direct.fillings;

    // Flatten all determinant entries into one task list.
    struct Task {
        std::size_t det, idx;
    };
    std::vector<Task> tasks;
    std::vector<std::vector<EntryResult>> results(inst.dets.size());
    for (std::size_t d = 0; d < inst.dets.size(); ++d) {
        results[d].resize(inst.dets[d].entries.size());
        for (std::size_t i = 0; i < inst.dets[d].entries.size(); ++i) tasks.push_back({d, i});
    }

    auto run_task = [&](const Task& t) {
        results[t.det][t.idx] = eval_entry(inst.dets[t.det].entries[t.idx], b, bound, mode);
    };

    if (jobs > 1 && tasks.size() > 1) {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        const std::size_t nthreads =
            std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    try {
                        run_task(tasks[i]);
                    } catch (...) {
                        const std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error) error = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    } else {
        for (const Task& t : tasks) run_task(t);
    }

    for (std::size_t d = 0; d < inst.dets.size(); ++d) {
        const int n = inst.dets[d].n;
        std::vector<std::uint64_t> fillings;
        std::vector<Scalar> values;
        fillings.reserve(results[d].size());
        values.reserve(results[d].size());
        for (const auto& r : results[d]) {
            fillings.push_back(r.fillings);
            values.push_back(r.value);
        }
        rep.entry_fillings.push_back(std::move(fillings));
        rep.entry_values.push_back(std::move(values));
        rep.det_labels.push_back(inst.dets[d].label);
        rep.det_sizes.push_back(n);
        if (mode == EvalMode::Exact) {
            std::vector<Rational> m;
            m.reserve(results[d].size());
            for (const auto& r : results[d]) m.push_back(r.value.rational());
            rep.determinant_values.emplace_back(det_bareiss(std::move(m), n));
        } else {
            std::vector<Complex> m;
            m.reserve(results[d].size());
            for (const auto& r : results[d]) m.push_back(r.value.to_complex());
            rep.determinant_values.emplace_back(det_float(std::move(m), n));
        }
    }

    if (mode == EvalMode::Exact) {
        Rational worst(0);
        for (const auto& v : rep.determinant_values) {
            const Rational diff = abs(rep.direct.rational() - v.rational());
            if (diff > worst) worst = diff;
        }
        rep.residual = Scalar(worst);
        rep.pass = worst == 0;
    } else {
        double worst = 0.0;
        for (const auto& v : rep.determinant_values)
            worst = std::max(worst, std::abs(rep.direct.to_complex() - v.to_complex()));
        rep.residual = Scalar(worst);
        rep.pass = worst <= tol;
    }

    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

IdentityInstance perturb_entry(const IdentityInstance& inst, const Binding& b,
                               std::size_t det_index, std::size_t entry_index,
                               std::size_t cell_index) {
    if (det_index >= inst.dets.size()) throw std::out_of_range("determinant index");
    if (entry_index >= inst.dets[det_index].entries.size())
        throw std::out_of_range("entry index");
    IdentityInstance out = inst;
    DetEntry& e = out.dets[det_index].entries[entry_index];
    if (e.kind != EntryKind::Tableau)
        throw std::invalid_argument("only tableau entries can be perturbed");
    const auto& entries = e.tableau.entries();
    if (cell_index >= entries.size()) throw std::out_of_range("cell index");
    const Scalar bumped = b.resolve(entries[cell_index]) + Scalar(1);
    std::vector<ExponentExpr> replaced = entries;
    replaced[cell_index] = ExponentExpr::constant(bumped);
    e.tableau = ExponentTableau(e.tableau.shape(), std::move(replaced));
    out.name += " (perturbed)";
    return out;
}

}  // namespace schurzeta
