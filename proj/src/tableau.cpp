#include "schurzeta/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurzeta {

Filling::Filling(SkewDiagram shape, std::vector<int> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != shape_.cell_count())
        throw std::invalid_argument("value count does not match shape");
    for (int v : values_)
        if (v < 1) throw std::invalid_argument("filling values must be positive");
}

int Filling::at(int row, int col) const {
    const int idx = shape_.index_of(row, col);
    if (idx < 0) throw std::out_of_range("cell outside shape");
    return values_[static_cast<std::size_t>(idx)];
}

int& Filling::at(int row, int col) {
    const int idx = shape_.index_of(row, col);
    if (idx < 0) throw std::out_of_range("cell outside shape");
    return values_[static_cast<std::size_t>(idx)];
}

bool Filling::is_ssyt() const {
    const auto cs = shape_.cells();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const auto [r, c] = cs[k];
        const int v = values_[k];
        if (shape_.contains(r, c - 1) && at(r, c - 1) > v) return false;
        if (shape_.contains(r - 1, c) && at(r - 1, c) >= v) return false;
    }
    return true;
}

std::string Filling::str() const {
    std::ostringstream os;
    for (int r = 1; r <= shape_.row_count(); ++r) {
        if (r > 1) os << " / ";
        for (int c = shape_.row(r).start; c <= shape_.row(r).end; ++c) {
            if (c > shape_.row(r).start) os << ' ';
            os << at(r, c);
        }
    }
    return os.str();
}

SsytStream::SsytStream(const SkewDiagram& shape, int bound)
    : SsytStream(shape, bound, 1, bound) {}

SsytStream::SsytStream(const SkewDiagram& shape, int bound, int first_lo, int first_hi)
    : shape_(shape), bound_(bound), first_lo_(first_lo), first_hi_(first_hi) {
    if (bound_ < 0) throw std::invalid_argument("cut-off must be nonnegative");
    const auto cs = shape_.cells();
    vals_.resize(cs.size());
    left_.resize(cs.size());
    up_.resize(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
        left_[k] = shape_.index_of(cs[k].row, cs[k].col - 1);
        up_[k] = shape_.index_of(cs[k].row - 1, cs[k].col);
    }
}

int SsytStream::low(std::size_t k) const {
    int lo = k == 0 ? std::max(1, first_lo_) : 1;
    if (left_[k] >= 0) lo = std::max(lo, vals_[static_cast<std::size_t>(left_[k])]);
    if (up_[k] >= 0) lo = std::max(lo, vals_[static_cast<std::size_t>(up_[k])] + 1);
    return lo;
}

std::ptrdiff_t SsytStream::backtrack(std::ptrdiff_t from) {
    for (std::ptrdiff_t j = from; j >= 0; --j) {
        const int hi = j == 0 ? std::min(bound_, first_hi_) : bound_;
        if (vals_[static_cast<std::size_t>(j)] < hi) {
            ++vals_[static_cast<std::size_t>(j)];
            return j + 1;
        }
    }
    return -1;
}

const std::vector<int>* SsytStream::next() {
    if (done_) return nullptr;
    const auto n = static_cast<std::ptrdiff_t>(vals_.size());
    if (n == 0) {
        if (started_) {
            done_ = true;
            return nullptr;
        }
        started_ = true;
        return &vals_;
    }
    std::ptrdiff_t k;
    if (!started_) {
        started_ = true;
        k = 0;
    } else {
        k = backtrack(n - 1);
    }
    while (k != n) {
        if (k < 0) {
            done_ = true;
            return nullptr;
        }
        const std::size_t ku = static_cast<std::size_t>(k);
        vals_[ku] = low(ku);
        const int hi = k == 0 ? std::min(bound_, first_hi_) : bound_;
        if (vals_[ku] > hi) k = backtrack(k - 1);
        else ++k;
    }
    return &vals_;
}

std::vector<Filling> enumerate_ssyt(const SkewDiagram& shape, int bound) {
    std::vector<Filling> out;
    SsytStream st(shape, bound);
    while (const auto* v = st.next()) out.emplace_back(shape, *v);
    return out;
}

std::uint64_t count_ssyt(const SkewDiagram& shape, int bound) {
    std::uint64_t n = 0;
    SsytStream st(shape, bound);
    while (st.next()) ++n;
    return n;
}

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

}  // namespace

Scalar weight(const ExponentTableau& exponents, const Binding& b, const Filling& f,
              EvalMode mode) {
    if (!(exponents.shape() == f.shape()))
        throw std::invalid_argument("exponent tableau and filling shapes differ");
    const auto resolved = exponents.resolve_all(b);
    if (mode == EvalMode::Exact) {
        Rational acc(1);
        for (std::size_t i = 0; i < resolved.size(); ++i) {
            if (!resolved[i].is_integer())
                throw std::domain_error("exact mode requires integer exponents");
            acc *= negative_power_exact(f.values()[i], resolved[i].to_long());
        }
        return Scalar(std::move(acc));
    }
    Complex acc(1.0, 0.0);
    for (std::size_t i = 0; i < resolved.size(); ++i)
        acc *= negative_power_float(f.values()[i], resolved[i].to_complex());
    return Scalar(acc);
}

Regions regions(const Partition& p) {
    Regions out;
    const Partition conj = p.conjugate();
    const int n = frobenius(p).diagonal();
    for (int i = 1; i <= n; ++i) {
        out.diagonal.push_back({i, i});
        for (int c = i + 1; c <= p.part(i); ++c) out.arm.push_back({i, c});
        for (int r = i + 1; r <= conj.part(i); ++r) out.leg.push_back({r, i});
    }
    return out;
}

int permutation_sign(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

namespace {

bool is_identity(const std::vector<int>& sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] != static_cast<int>(i) + 1) return false;
    return true;
}

struct CoreView {
    Partition lambda;
    Partition conj;
    FrobeniusForm frob;
};

CoreView core_view(const Filling& core) {
    CoreView v;
    v.lambda = core.shape().to_partition();
    v.conj = v.lambda.conjugate();
    v.frob = frobenius(v.lambda);
    return v;
}

}  // namespace

bool is_sigma_tableau(const std::vector<int>& sigma, const Filling& core,
                      const std::optional<Filling>& lower,
                      const std::optional<Filling>& upper) {
    if (!core.shape().is_partition_shape()) return false;
    const CoreView v = core_view(core);
    const int n = v.frob.diagonal();
    if (static_cast<int>(sigma.size()) != n) return false;
    permutation_sign(sigma);  // validates

    // (I) arm rows weakly increase.
    for (int i = 1; i <= n; ++i)
        for (int c = i + 2; c <= v.lambda.part(i); ++c)
            if (core.at(i, c - 1) > core.at(i, c)) return false;
    // (II) columns strictly increase from the diagonal box down.
    for (int j = 1; j <= n; ++j)
        for (int r = j + 1; r <= v.conj.part(j); ++r)
            if (core.at(r - 1, j) >= core.at(r, j)) return false;
    // (III) diagonal against the arm start.
    for (int i = 1; i <= n; ++i)
        if (v.lambda.part(i) >= i + 1) {
            const int si = sigma[static_cast<std::size_t>(i - 1)];
            if (core.at(si, si) > core.at(i, i + 1)) return false;
        }

    if (upper) {
        if (!upper->is_ssyt()) return false;
        const Cell sw = upper->shape().southwest();
        if (!(upper->at(sw.row, sw.col) < core.at(1, v.lambda.part(1)))) return false;
    }
    if (lower) {
        if (!lower->is_ssyt()) return false;
        const Cell ne = lower->shape().northeast();
        if (!(lower->at(ne.row, ne.col) <= core.at(v.lambda.rows(), 1))) return false;
    }
    return true;
}

namespace {

// Backtracking over core cells with the local parts of (I) and (II);
// (III) is checked at the leaves.
void enumerate_cores(const Partition& lambda, const std::vector<int>& sigma, int bound,
                     std::vector<Filling>& out) {
    const SkewDiagram shape = SkewDiagram::of_partition(lambda);
    const auto cs = shape.cells();
    const int n = static_cast<int>(cs.size());
    std::vector<int> vals(static_cast<std::size_t>(n), 0);
    const int diag = frobenius(lambda).diagonal();

    auto value_at = [&](int r, int c) { return vals[static_cast<std::size_t>(shape.index_of(r, c))]; };

    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            Filling f(shape, vals);
            bool ok = true;
            for (int i = 1; i <= diag && ok; ++i)
                if (lambda.part(i) >= i + 1) {
                    const int si = sigma[static_cast<std::size_t>(i - 1)];
                    if (value_at(si, si) > value_at(i, i + 1)) ok = false;
                }
            if (ok) out.push_back(std::move(f));
            return;
        }
        const auto [r, c] = cs[static_cast<std::size_t>(k)];
        int lo = 1;
        if (c >= r + 2 && shape.contains(r, c - 1)) lo = std::max(lo, value_at(r, c - 1));
        if (r >= c + 1) lo = std::max(lo, value_at(r - 1, c) + 1);
        for (int x = lo; x <= bound; ++x) {
            vals[static_cast<std::size_t>(k)] = x;
            rec(k + 1);
        }
        vals[static_cast<std::size_t>(k)] = 0;
    };
    rec(0);
}

}  // namespace

std::vector<SigmaTableau> enumerate_sigma_tableaux(const Partition& lambda,
                                                   const std::vector<int>& sigma, int bound,
                                                   const std::optional<SkewDiagram>& lower_shape,
                                                   const std::optional<SkewDiagram>& upper_shape) {
    if (lambda.empty()) throw std::invalid_argument("core partition must be nonempty");
    if (static_cast<int>(sigma.size()) != frobenius(lambda).diagonal())
        throw std::invalid_argument("permutation length must match the diagonal");
    permutation_sign(sigma);

    std::vector<Filling> cores;
    enumerate_cores(lambda, sigma, bound, cores);

    std::vector<Filling> lowers, uppers;
    if (lower_shape && !lower_shape->empty()) lowers = enumerate_ssyt(*lower_shape, bound);
    if (upper_shape && !upper_shape->empty()) uppers = enumerate_ssyt(*upper_shape, bound);

    std::vector<SigmaTableau> out;
    const int ne_col = lambda.part(1);
    const int sw_row = lambda.rows();
    for (const Filling& core : cores) {
        const int core_ne = core.at(1, ne_col);
        const int core_sw = core.at(sw_row, 1);
        auto push = [&](const std::optional<Filling>& lo, const std::optional<Filling>& up) {
            out.push_back({sigma, core, lo, up});
        };
        if (lowers.empty() && uppers.empty()) {
            push(std::nullopt, std::nullopt);
            continue;
        }
        std::vector<const Filling*> ok_lowers, ok_uppers;
        if (lowers.empty()) ok_lowers.push_back(nullptr);
        else
            for (const auto& w : lowers) {
                const Cell ne = w.shape().northeast();
                if (w.at(ne.row, ne.col) <= core_sw) ok_lowers.push_back(&w);
            }
        if (uppers.empty()) ok_uppers.push_back(nullptr);
        else
            for (const auto& w : uppers) {
                const Cell sw = w.shape().southwest();
                if (w.at(sw.row, sw.col) < core_ne) ok_uppers.push_back(&w);
            }
        for (const Filling* lo : ok_lowers)
            for (const Filling* up : ok_uppers)
                push(lo ? std::optional<Filling>(*lo) : std::nullopt,
                     up ? std::optional<Filling>(*up) : std::nullopt);
    }
    return out;
}

namespace {

struct PartGeometry {
    LacedLayout layout;
    int arm_len = 0;
    int leg_len = 0;
    int corner_row = 0;  // σ(k): corner and leg live in this core row/column
    int arm_row = 0;     // k
};

PartGeometry part_geometry(const FrobeniusForm& f, const std::vector<int>& sigma, int k,
                           const std::optional<SkewDiagram>& lower_shape,
                           const std::optional<SkewDiagram>& upper_shape) {
    PartGeometry g;
    g.arm_row = k;
    g.corner_row = sigma[static_cast<std::size_t>(k - 1)];
    g.arm_len = f.arms[static_cast<std::size_t>(k - 1)];
    g.leg_len = f.legs[static_cast<std::size_t>(g.corner_row - 1)];
    const SkewDiagram hook = SkewDiagram::of_partition(hook_shape(g.arm_len, g.leg_len));
    std::optional<SkewDiagram> lo, up;
    if (k == 1 && upper_shape && !upper_shape->empty()) up = upper_shape;
    if (g.corner_row == 1 && lower_shape && !lower_shape->empty()) lo = lower_shape;
    g.layout = lay_out_laced(hook, lo, up);
    return g;
}

}  // namespace

std::vector<Filling> split(const SigmaTableau& t) {
    const CoreView v = core_view(t.core);
    const int n = v.frob.diagonal();
    if (static_cast<int>(t.sigma.size()) != n)
        throw std::invalid_argument("permutation length must match the diagonal");
    std::optional<SkewDiagram> lower_shape, upper_shape;
    if (t.lower) lower_shape = t.lower->shape();
    if (t.upper) upper_shape = t.upper->shape();

    std::vector<Filling> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const PartGeometry g = part_geometry(v.frob, t.sigma, k, lower_shape, upper_shape);
        const LacedLayout& L = g.layout;
        std::vector<int> vals(static_cast<std::size_t>(L.shape.cell_count()), 0);
        auto put = [&](int row, int col, int value) {
            const int idx = L.shape.index_of(row, col);
            if (idx < 0) throw std::logic_error("split cell mismatch");
            vals[static_cast<std::size_t>(idx)] = value;
        };
        put(1 + L.core_drow, 1 + L.core_dcol, t.core.at(g.corner_row, g.corner_row));
        for (int a = 1; a <= g.arm_len; ++a)
            put(1 + L.core_drow, 1 + a + L.core_dcol, t.core.at(g.arm_row, g.arm_row + a));
        for (int b = 1; b <= g.leg_len; ++b)
            put(1 + b + L.core_drow, 1 + L.core_dcol, t.core.at(g.corner_row + b, g.corner_row));
        if (k == 1 && t.upper) {
            const auto cs = t.upper->shape().cells();
            for (std::size_t i = 0; i < cs.size(); ++i)
                put(cs[i].row + L.upper_drow, cs[i].col + L.upper_dcol, t.upper->values()[i]);
        }
        if (g.corner_row == 1 && t.lower) {
            const auto cs = t.lower->shape().cells();
            for (std::size_t i = 0; i < cs.size(); ++i)
                put(cs[i].row + L.lower_drow, cs[i].col + L.lower_dcol, t.lower->values()[i]);
        }
        parts.emplace_back(L.shape, std::move(vals));
    }
    return parts;
}

SigmaTableau reassemble(const std::vector<Filling>& parts, const std::vector<int>& sigma,
                        const Partition& lambda,
                        const std::optional<SkewDiagram>& lower_shape,
                        const std::optional<SkewDiagram>& upper_shape) {
    const FrobeniusForm f = frobenius(lambda);
    const int n = f.diagonal();
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("permutation length must match the diagonal");
    permutation_sign(sigma);
    if (static_cast<int>(parts.size()) != n)
        throw std::invalid_argument("expected one part per diagonal hook");

    const SkewDiagram core_shape = SkewDiagram::of_partition(lambda);
    std::vector<int> core_vals(static_cast<std::size_t>(core_shape.cell_count()), 0);
    std::optional<Filling> lower, upper;

    for (int k = 1; k <= n; ++k) {
        const PartGeometry g = part_geometry(f, sigma, k, lower_shape, upper_shape);
        const Filling& part = parts[static_cast<std::size_t>(k - 1)];
        if (!(part.shape() == g.layout.shape))
            throw std::invalid_argument("incompatible part shapes");
        const LacedLayout& L = g.layout;
        auto core_set = [&](int row, int col, int value) {
            core_vals[static_cast<std::size_t>(core_shape.index_of(row, col))] = value;
        };
        core_set(g.corner_row, g.corner_row, part.at(1 + L.core_drow, 1 + L.core_dcol));
        for (int a = 1; a <= g.arm_len; ++a)
            core_set(g.arm_row, g.arm_row + a, part.at(1 + L.core_drow, 1 + a + L.core_dcol));
        for (int b = 1; b <= g.leg_len; ++b)
            core_set(g.corner_row + b, g.corner_row, part.at(1 + b + L.core_drow, 1 + L.core_dcol));
        if (k == 1 && upper_shape && !upper_shape->empty()) {
            std::vector<int> w;
            for (const Cell& c : upper_shape->cells())
                w.push_back(part.at(c.row + L.upper_drow, c.col + L.upper_dcol));
            upper = Filling(*upper_shape, std::move(w));
        }
        if (g.corner_row == 1 && lower_shape && !lower_shape->empty()) {
            std::vector<int> w;
            for (const Cell& c : lower_shape->cells())
                w.push_back(part.at(c.row + L.lower_drow, c.col + L.lower_dcol));
            lower = Filling(*lower_shape, std::move(w));
        }
    }

    SigmaTableau out{sigma, Filling(core_shape, std::move(core_vals)), lower, upper};
    if (!is_sigma_tableau(out.sigma, out.core, out.lower, out.upper))
        throw std::invalid_argument("parts do not assemble into a valid tableau");
    return out;
}

SigmaTableau cancellation_partner(const SigmaTableau& t) {
    const CoreView v = core_view(t.core);
    const int n = v.frob.diagonal();
    const Filling& T = t.core;
    SigmaTableau out = t;

    // Class 1: column strictness fails between two arm rows.
    for (int i = 1; i < v.lambda.rows(); ++i) {
        int found_k = -1;
        for (int k = v.lambda.part(i + 1); k >= i + 2; --k)
            if (T.at(i, k) >= T.at(i + 1, k)) {
                found_k = k;
                break;
            }
        if (found_k < 0) continue;
        std::swap(out.sigma[static_cast<std::size_t>(i - 1)], out.sigma[static_cast<std::size_t>(i)]);
        for (int h = i + 1; h <= found_k - 1; ++h)
            std::swap(out.core.at(i, h), out.core.at(i + 1, h + 1));
        return out;
    }

    // Class 2: row weakness fails between two leg columns (diagonal included).
    for (int j = 1; j <= n - 1; ++j) {
        int found_k = -1;
        for (int k = v.conj.part(j + 1); k >= j + 1; --k)
            if (T.at(k, j) > T.at(k, j + 1)) {
                found_k = k;
                break;
            }
        if (found_k < 0) continue;
        for (auto& s : out.sigma) {
            if (s == j) s = j + 1;
            else if (s == j + 1) s = j;
        }
        for (int h = j; h <= found_k - 1; ++h)
            std::swap(out.core.at(h, j), out.core.at(h + 1, j + 1));
        return out;
    }

    // Class 3: seam between the diagonal and the arm start.
    for (int k = 1; k <= n; ++k) {
        if (v.lambda.part(k) < k + 1) continue;
        if (T.at(k, k) > T.at(k, k + 1))
            throw std::logic_error("diagonal exceeds arm start in a valid tableau");
        if (!v.lambda.contains(k + 1, k + 1)) continue;
        if (T.at(k + 1, k + 1) <= T.at(k, k + 1)) {
            int i = 0, j = 0;
            for (int x = 1; x <= n; ++x) {
                if (t.sigma[static_cast<std::size_t>(x - 1)] == k) i = x;
                if (t.sigma[static_cast<std::size_t>(x - 1)] == k + 1) j = x;
            }
            std::swap(out.sigma[static_cast<std::size_t>(i - 1)],
                      out.sigma[static_cast<std::size_t>(j - 1)]);
            return out;
        }
    }

    throw std::invalid_argument("tableau is semistandard with the identity permutation");
}

Filling compose_filling(const SigmaTableau& t) {
    if (!t.lower && !t.upper) return t.core;
    std::optional<SkewDiagram> lshape, ushape;
    if (t.lower) lshape = t.lower->shape();
    if (t.upper) ushape = t.upper->shape();
    const LacedLayout L = lay_out_laced(t.core.shape(), lshape, ushape);
    std::vector<int> vals(static_cast<std::size_t>(L.shape.cell_count()), 0);
    auto place = [&](const Filling& piece, int drow, int dcol) {
        const auto cs = piece.shape().cells();
        for (std::size_t i = 0; i < cs.size(); ++i)
            vals[static_cast<std::size_t>(L.shape.index_of(cs[i].row + drow, cs[i].col + dcol))] =
                piece.values()[i];
    };
    place(t.core, L.core_drow, L.core_dcol);
    if (t.lower) place(*t.lower, L.lower_drow, L.lower_dcol);
    if (t.upper) place(*t.upper, L.upper_drow, L.upper_dcol);
    return Filling(L.shape, std::move(vals));
}

CancellationReport cancellation_sum(const Partition& lambda, const ExponentTableau& core_tab,
                                    const std::optional<ExponentTableau>& lower_tab,
                                    const std::optional<ExponentTableau>& upper_tab,
                                    const Binding& b, int bound, EvalMode mode) {
    if (!(core_tab.shape() == SkewDiagram::of_partition(lambda)))
        throw std::invalid_argument("core tableau shape must match the partition");
    const bool winged = (lower_tab && !lower_tab->shape().empty()) ||
                        (upper_tab && !upper_tab->shape().empty());
    const ExponentTableau composed =
        winged ? compose_laced(core_tab, lower_tab, upper_tab) : core_tab;
    std::optional<SkewDiagram> lower_shape, upper_shape;
    if (lower_tab && !lower_tab->shape().empty()) lower_shape = lower_tab->shape();
    if (upper_tab && !upper_tab->shape().empty()) upper_shape = upper_tab->shape();

    CancellationReport rep;
    rep.ssyt_sum = mode == EvalMode::Exact ? Scalar(0) : Scalar(Complex(0.0, 0.0));
    rep.cancelled_sum = rep.ssyt_sum;
    const int n = frobenius(lambda).diagonal();
    for (const auto& sigma : all_permutations(n)) {
        const int sign = permutation_sign(sigma);
        const bool id = is_identity(sigma);
        for (const auto& x : enumerate_sigma_tableaux(lambda, sigma, bound, lower_shape, upper_shape)) {
            const Scalar w = weight(composed, b, compose_filling(x), mode);
            if (id && x.core.is_ssyt()) {
                ++rep.ssyt_count;
                rep.ssyt_sum += w;
            } else {
                ++rep.cancelled_count;
                rep.cancelled_sum += sign > 0 ? w : -w;
            }
        }
    }
    return rep;
}

}  // namespace schurzeta
