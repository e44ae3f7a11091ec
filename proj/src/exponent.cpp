#include "schurzeta/exponent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schurzeta {

ExponentExpr ExponentExpr::constant(Scalar v) {
    ExponentExpr e;
    e.kind_ = Kind::Constant;
    e.value_ = std::move(v);
    return e;
}

ExponentExpr ExponentExpr::content(int k) {
    ExponentExpr e;
    e.kind_ = Kind::Content;
    e.content_ = k;
    return e;
}

ExponentExpr ExponentExpr::symbol(std::string name) {
    if (name.empty()) throw std::invalid_argument("symbol name must be nonempty");
    ExponentExpr e;
    e.kind_ = Kind::Symbol;
    e.symbol_ = std::move(name);
    return e;
}

std::string ExponentExpr::str() const {
    switch (kind_) {
        case Kind::Constant: return value_.str();
        case Kind::Content: return "z_" + std::to_string(content_);
        case Kind::Symbol: return symbol_;
    }
    return {};
}

Scalar Binding::resolve(const ExponentExpr& e) const {
    switch (e.kind()) {
        case ExponentExpr::Kind::Constant: return e.constant_value();
        case ExponentExpr::Kind::Content: {
            auto it = contents_.find(e.content_index());
            if (it == contents_.end())
                throw std::out_of_range("unbound content variable z_" +
                                        std::to_string(e.content_index()));
            return it->second;
        }
        case ExponentExpr::Kind::Symbol: {
            auto it = symbols_.find(e.symbol_name());
            if (it == symbols_.end())
                throw std::out_of_range("unbound symbol " + e.symbol_name());
            return it->second;
        }
    }
    throw std::logic_error("unreachable");
}

ExponentTableau::ExponentTableau(SkewDiagram shape, std::vector<ExponentExpr> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.cell_count())
        throw std::invalid_argument("entry count does not match shape");
}

ExponentTableau ExponentTableau::filled(const SkewDiagram& shape,
                                        const std::function<ExponentExpr(Cell)>& f) {
    std::vector<ExponentExpr> entries;
    entries.reserve(static_cast<std::size_t>(shape.cell_count()));
    for (const Cell& c : shape.cells()) entries.push_back(f(c));
    return ExponentTableau(shape, std::move(entries));
}

const ExponentExpr& ExponentTableau::at(int row, int col) const {
    const int idx = shape_.index_of(row, col);
    if (idx < 0) throw std::out_of_range("cell outside shape");
    return entries_[static_cast<std::size_t>(idx)];
}

ExponentExpr& ExponentTableau::at(int row, int col) {
    const int idx = shape_.index_of(row, col);
    if (idx < 0) throw std::out_of_range("cell outside shape");
    return entries_[static_cast<std::size_t>(idx)];
}

std::vector<Scalar> ExponentTableau::resolve_all(const Binding& b) const {
    std::vector<Scalar> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(b.resolve(e));
    return out;
}

bool ExponentTableau::is_diagonal_constant() const {
    std::map<int, ExponentExpr> seen;
    const auto cs = shape_.cells();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto [it, inserted] = seen.emplace(cs[i].content(), entries_[i]);
        if (!inserted && !(it->second == entries_[i])) return false;
    }
    return true;
}

ExponentExpr ExponentTableau::diagonal_expr(int k) const {
    if (!is_diagonal_constant())
        throw std::invalid_argument("tableau is not diagonal-constant");
    const auto cs = shape_.cells();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i].content() == k) return entries_[i];
    throw std::out_of_range("no cell on diagonal " + std::to_string(k));
}

std::string ExponentTableau::str() const {
    std::ostringstream os;
    for (int r = 1; r <= shape_.row_count(); ++r) {
        if (r > 1) os << " / ";
        const auto& span = shape_.row(r);
        for (int c = span.start; c <= span.end; ++c) {
            if (c > span.start) os << ' ';
            os << at(r, c).str();
        }
    }
    return os.str();
}

ExponentTableau content_fill(const SkewDiagram& shape) {
    return ExponentTableau::filled(shape,
                                   [](Cell c) { return ExponentExpr::content(c.content()); });
}

ExponentTableau giambelli_entry(const FrobeniusForm& f, int i, int j) {
    const int n = f.diagonal();
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("frobenius indices out of range");
    const Partition hook =
        hook_shape(f.arms[static_cast<std::size_t>(i - 1)], f.legs[static_cast<std::size_t>(j - 1)]);
    return content_fill(SkewDiagram::of_partition(hook));
}

ExponentTableau transpose_tableau(const ExponentTableau& t) {
    const SkewDiagram& d = t.shape();
    const SkewDiagram td = antidiagonal_transpose(d);
    const int r = d.row_count();
    const int c = d.max_col();
    std::vector<ExponentExpr> entries(static_cast<std::size_t>(td.cell_count()),
                                      ExponentExpr::constant(Scalar(0)));
    const auto cs = d.cells();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const int tr = c + 1 - cs[k].col;
        const int tc = r + 1 - cs[k].row;
        const int idx = td.index_of(tr, tc);
        if (idx < 0) throw std::logic_error("transpose cell mismatch");
        entries[static_cast<std::size_t>(idx)] = t.entries()[k];
    }
    return ExponentTableau(td, std::move(entries));
}

ExponentTableau skew_giambelli_entry(const FrobeniusForm& f, int i, int j,
                                     const std::function<ExponentExpr(int)>& diag_expr) {
    const ExponentTableau hook = giambelli_entry(f, i, j);
    const ExponentTableau renamed = ExponentTableau::filled(
        hook.shape(), [&](Cell c) { return diag_expr(c.content()); });
    return transpose_tableau(renamed);
}

ExponentTableau skew_giambelli_entry(const FrobeniusForm& f, int i, int j) {
    return skew_giambelli_entry(f, i, j, [](int k) { return ExponentExpr::content(k); });
}

ExponentTableau compose_laced(const ExponentTableau& core,
                              const std::optional<ExponentTableau>& lower,
                              const std::optional<ExponentTableau>& upper) {
    std::optional<SkewDiagram> lshape, ushape;
    if (lower && !lower->shape().empty()) lshape = lower->shape();
    if (upper && !upper->shape().empty()) ushape = upper->shape();
    const LacedLayout layout = lay_out_laced(core.shape(), lshape, ushape);
    std::vector<ExponentExpr> entries(static_cast<std::size_t>(layout.shape.cell_count()),
                                      ExponentExpr::constant(Scalar(0)));
    auto place = [&](const ExponentTableau& piece, int drow, int dcol) {
        const auto cs = piece.shape().cells();
        for (std::size_t k = 0; k < cs.size(); ++k) {
            const int idx = layout.shape.index_of(cs[k].row + drow, cs[k].col + dcol);
            if (idx < 0) throw std::logic_error("laced layout cell mismatch");
            entries[static_cast<std::size_t>(idx)] = piece.entries()[k];
        }
    };
    place(core, layout.core_drow, layout.core_dcol);
    if (lshape) place(*lower, layout.lower_drow, layout.lower_dcol);
    if (ushape) place(*upper, layout.upper_drow, layout.upper_dcol);
    return ExponentTableau(layout.shape, std::move(entries));
}

ExponentTableau laced_entry(const FrobeniusForm& f, int i, int j,
                            const std::optional<ExponentTableau>& lower,
                            const std::optional<ExponentTableau>& upper) {
    const ExponentTableau hook = giambelli_entry(f, i, j);
    std::optional<ExponentTableau> lo, up;
    if (i == 1 && upper) up = upper;
    if (j == 1 && lower) lo = lower;
    return compose_laced(hook, lo, up);
}

DomainVerdict check_domain(const ExponentTableau& t, const Binding& b) {
    DomainVerdict v;
    v.admissible = true;
    const auto corner_cells = corners(t.shape());
    const auto cs = t.shape().cells();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        CellDomainReport rep;
        rep.cell = cs[k];
        rep.is_corner =
            std::find(corner_cells.begin(), corner_cells.end(), cs[k]) != corner_cells.end();
        const Scalar s = b.resolve(t.entries()[k]);
        rep.real_part = s.to_complex().real();
        rep.ok = rep.is_corner ? rep.real_part > 1.0 : rep.real_part >= 1.0;
        if (!rep.ok) v.admissible = false;
        v.cells.push_back(rep);
    }
    return v;
}

bool check_integrality(const ExponentTableau& t, const Binding& b) {
    for (const auto& e : t.entries()) {
        const Scalar s = b.resolve(e);
        if (!s.is_integer()) return false;
        if (s.rational() < 0) return false;
    }
    return true;
}

}  // namespace schurzeta
