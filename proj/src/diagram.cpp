#include "schurzeta/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schurzeta {

SkewDiagram SkewDiagram::from_rows(std::vector<RowSpan> rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].start > rows[i].end)
            throw std::invalid_argument("row interval start exceeds end");
        if (i > 0 && (rows[i].start > rows[i - 1].start || rows[i].end > rows[i - 1].end))
            throw std::invalid_argument("row intervals must have weakly decreasing starts and ends");
    }
    if (!rows.empty()) {
        int min_start = rows.back().start;  // starts weakly decrease
        if (min_start != 1)
            for (auto& r : rows) {
                r.start -= min_start - 1;
                r.end -= min_start - 1;
            }
    }
    SkewDiagram d;
    d.rows_ = std::move(rows);
    return d;
}

SkewDiagram SkewDiagram::of_partition(const Partition& p) {
    std::vector<RowSpan> rows;
    rows.reserve(static_cast<std::size_t>(p.rows()));
    for (int i = 1; i <= p.rows(); ++i) rows.push_back({1, p.part(i)});
    return from_rows(std::move(rows));
}

SkewDiagram SkewDiagram::skew(const Partition& outer, const Partition& inner) {
    if (inner.rows() > outer.rows())
        throw std::invalid_argument("inner partition does not fit in outer");
    std::vector<RowSpan> rows;
    for (int i = 1; i <= outer.rows(); ++i) {
        const int in = inner.part(i);
        if (in > outer.part(i))
            throw std::invalid_argument("inner partition does not fit in outer");
        if (in == outer.part(i)) {
            if (!rows.empty())
                throw std::invalid_argument("skew shape has an empty row between occupied ones");
            continue;  // leading empty rows are dropped
        }
        rows.push_back({in + 1, outer.part(i)});
    }
    return from_rows(std::move(rows));
}

int SkewDiagram::cell_count() const {
    int n = 0;
    for (const auto& r : rows_) n += r.length();
    return n;
}

int SkewDiagram::max_col() const {
    return rows_.empty() ? 0 : rows_.front().end;
}

bool SkewDiagram::contains(int row, int col) const {
    if (row < 1 || row > row_count()) return false;
    const RowSpan& r = rows_[static_cast<std::size_t>(row - 1)];
    return col >= r.start && col <= r.end;
}

std::vector<Cell> SkewDiagram::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(cell_count()));
    for (int r = 1; r <= row_count(); ++r)
        for (int c = row(r).start; c <= row(r).end; ++c) out.push_back({r, c});
    return out;
}

int SkewDiagram::index_of(int row_, int col) const {
    if (!contains(row_, col)) return -1;
    int idx = 0;
    for (int r = 1; r < row_; ++r) idx += row(r).length();
    return idx + (col - row(row_).start);
}

bool SkewDiagram::is_partition_shape() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const RowSpan& r) { return r.start == 1; });
}

Partition SkewDiagram::to_partition() const {
    if (!is_partition_shape())
        throw std::invalid_argument("diagram is not a partition shape");
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(r.end);
    return Partition(std::move(parts));
}

Cell SkewDiagram::northeast() const {
    if (empty()) throw std::invalid_argument("empty diagram has no cells");
    return {1, rows_.front().end};
}

Cell SkewDiagram::southwest() const {
    if (empty()) throw std::invalid_argument("empty diagram has no cells");
    return {row_count(), rows_.back().start};
}

std::string SkewDiagram::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_.size(); ++i)
        os << (i ? "," : "") << '[' << rows_[i].start << ',' << rows_[i].end << ']';
    os << ']';
    return os.str();
}

std::vector<Cell> corners(const SkewDiagram& d) {
    std::vector<Cell> out;
    for (const Cell& c : d.cells())
        if (!d.contains(c.row + 1, c.col) && !d.contains(c.row, c.col + 1)) out.push_back(c);
    return out;
}

namespace {

bool columns_connected(const SkewDiagram& d) {
    if (d.empty()) return true;
    // Occupied columns form [1, max]: every column below the top row's end is
    // covered because starts and ends weakly decrease; the only possible gap
    // is between a lower row's end and a higher row's start.
    for (int r = 1; r < d.row_count(); ++r)
        if (d.row(r).start > d.row(r + 1).end + 1) return false;
    return true;
}

}  // namespace

SkewDiagram antidiagonal_transpose(const SkewDiagram& d) {
    if (d.empty()) return d;
    if (!columns_connected(d))
        throw std::invalid_argument(
            "diagram has an empty column; its reflection is not a row-interval diagram");
    const int r = d.row_count();
    const int c = d.max_col();
    std::vector<RowSpan> out;
    out.reserve(static_cast<std::size_t>(c));
    for (int k = c; k >= 1; --k) {
        // Rows occupied in column k.
        int lo = 0, hi = 0;
        for (int i = 1; i <= r; ++i)
            if (d.contains(i, k)) {
                if (lo == 0) lo = i;
                hi = i;
            }
        if (lo == 0)
            throw std::logic_error("connected diagram missing a column");
        out.push_back({r + 1 - hi, r + 1 - lo});
    }
    return SkewDiagram::from_rows(std::move(out));
}

LacedLayout lay_out_laced(const SkewDiagram& core,
                          const std::optional<SkewDiagram>& lower,
                          const std::optional<SkewDiagram>& upper) {
    if (core.empty()) throw std::invalid_argument("laced core must be nonempty");
    struct Placed {
        const SkewDiagram* piece;
        int drow, dcol;
    };
    std::vector<Placed> placed;
    placed.push_back({&core, 0, 0});
    if (upper && !upper->empty()) {
        // SW cell of the wing directly above the core's NE cell.
        const Cell sw = upper->southwest();
        const Cell ne = core.northeast();
        placed.push_back({&*upper, (ne.row - 1) - sw.row, ne.col - sw.col});
    }
    if (lower && !lower->empty()) {
        // NE cell of the wing directly left of the core's SW cell, same row.
        const Cell ne = lower->northeast();
        const Cell sw = core.southwest();
        placed.push_back({&*lower, sw.row - ne.row, sw.col - 1 - ne.col});
    }

    int row_lo = 1, row_hi = core.row_count();
    for (const auto& p : placed) {
        row_lo = std::min(row_lo, 1 + p.drow);
        row_hi = std::max(row_hi, p.piece->row_count() + p.drow);
    }
    std::vector<int> starts(static_cast<std::size_t>(row_hi - row_lo + 1), 0);
    std::vector<int> ends(starts.size(), 0);
    std::vector<bool> seen(starts.size(), false);
    for (const auto& p : placed)
        for (int r = 1; r <= p.piece->row_count(); ++r) {
            const auto& span = p.piece->row(r);
            const std::size_t idx = static_cast<std::size_t>(r + p.drow - row_lo);
            const int s = span.start + p.dcol;
            const int e = span.end + p.dcol;
            if (!seen[idx]) {
                starts[idx] = s;
                ends[idx] = e;
                seen[idx] = true;
            } else {
                // Pieces may share a row only by abutting without overlap.
                if (s == ends[idx] + 1) ends[idx] = e;
                else if (e == starts[idx] - 1) starts[idx] = s;
                else
                    throw std::invalid_argument("laced pieces overlap or leave a gap in a row");
            }
        }
    std::vector<RowSpan> rows;
    rows.reserve(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) {
        if (!seen[i]) throw std::invalid_argument("laced pieces leave an empty row");
        rows.push_back({starts[i], ends[i]});
    }
    int min_start = rows.back().start;
    for (const auto& rsp : rows) min_start = std::min(min_start, rsp.start);

    LacedLayout layout;
    layout.shape = SkewDiagram::from_rows(rows);  // validates monotonicity, shifts columns
    const int dcol_norm = 1 - min_start;
    const int drow_norm = 1 - row_lo;
    layout.core_drow = drow_norm;
    layout.core_dcol = dcol_norm;
    if (upper && !upper->empty()) {
        layout.upper_drow = placed[1].drow + drow_norm;
        layout.upper_dcol = placed[1].dcol + dcol_norm;
    }
    if (lower && !lower->empty()) {
        const auto& p = placed.back();
        layout.lower_drow = p.drow + drow_norm;
        layout.lower_dcol = p.dcol + dcol_norm;
    }
    return layout;
}

SkewDiagram build_laced(const SkewDiagram& core,
                        const std::optional<SkewDiagram>& lower,
                        const std::optional<SkewDiagram>& upper) {
    return lay_out_laced(core, lower, upper).shape;
}

namespace {

void gen_diagrams(int rows_left_cells, int prev_start, int prev_end, std::vector<RowSpan>& cur,
                  std::vector<SkewDiagram>& out) {
    if (rows_left_cells == 0) {
        if (!cur.empty() && cur.back().start == 1) {
            // Reject empty columns so the family is closed under reflection.
            bool connected = true;
            for (std::size_t i = 0; i + 1 < cur.size(); ++i)
                if (cur[i].start > cur[i + 1].end + 1) connected = false;
            if (connected) out.push_back(SkewDiagram::from_rows(cur));
        }
        return;
    }
    for (int s = 1; s <= prev_start; ++s) {
        const int emax = std::min(prev_end, s + rows_left_cells - 1);
        for (int e = s; e <= emax; ++e) {
            cur.push_back({s, e});
            gen_diagrams(rows_left_cells - (e - s + 1), s, e, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<SkewDiagram> all_interval_diagrams(int n) {
    if (n < 0) throw std::invalid_argument("cell count must be nonnegative");
    std::vector<SkewDiagram> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<RowSpan> cur;
    gen_diagrams(n, n, 2 * n, cur, out);
    return out;
}

}  // namespace schurzeta
