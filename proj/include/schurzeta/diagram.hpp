#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurzeta/partition.hpp"

namespace schurzeta {

struct Cell {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct RowSpan {
    int start = 0;
    int end = 0;  // inclusive
    int length() const { return end - start + 1; }
    friend bool operator==(const RowSpan&, const RowSpan&) = default;
};

// Row-interval diagram: row r occupies columns [start_r, end_r], with both
// endpoints weakly decreasing downward. Covers straight shapes, skew shapes
// and every laced diagram. Always normalized: top row is row 1 and the
// minimum start is column 1. Zero rows encode the empty diagram.
class SkewDiagram {
public:
    SkewDiagram() = default;

    static SkewDiagram from_rows(std::vector<RowSpan> rows);
    static SkewDiagram of_partition(const Partition& p);
    static SkewDiagram skew(const Partition& outer, const Partition& inner);

    int row_count() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    const RowSpan& row(int r) const { return rows_[static_cast<std::size_t>(r - 1)]; }
    const std::vector<RowSpan>& rows() const { return rows_; }

    int cell_count() const;
    int max_col() const;
    bool contains(int row, int col) const;

    // Row-major cell list; index_of is the inverse (-1 when absent).
    std::vector<Cell> cells() const;
    int index_of(int row, int col) const;

    bool is_partition_shape() const;
    Partition to_partition() const;  // requires is_partition_shape()

    Cell northeast() const;  // top row, last column
    Cell southwest() const;  // bottom row, first column

    std::string str() const;

    friend bool operator==(const SkewDiagram&, const SkewDiagram&) = default;

private:
    std::vector<RowSpan> rows_;
};

// Cells with no neighbor below nor to the right.
std::vector<Cell> corners(const SkewDiagram& d);

// Reflection (i,j) -> (c+1-j, r+1-i) across the anti-diagonal of the bounding
// box (r rows, c columns), then renormalized. An involution.
SkewDiagram antidiagonal_transpose(const SkewDiagram& d);

// Laced composition: optional lower wing pasted directly LEFT of the core's SW
// cell (same row, extra wing rows extending downward) and optional upper wing
// whose SW cell lands directly ABOVE the core's NE cell.
struct LacedLayout {
    SkewDiagram shape;
    // Row/column shifts taking each piece's own coordinates into the composed
    // normalized coordinates.
    int core_drow = 0, core_dcol = 0;
    int lower_drow = 0, lower_dcol = 0;
    int upper_drow = 0, upper_dcol = 0;
};

LacedLayout lay_out_laced(const SkewDiagram& core,
                          const std::optional<SkewDiagram>& lower,
                          const std::optional<SkewDiagram>& upper);

SkewDiagram build_laced(const SkewDiagram& core,
                        const std::optional<SkewDiagram>& lower,
                        const std::optional<SkewDiagram>& upper);

// All normalized row-interval diagrams with exactly n cells (n >= 1) and at
// most max_rows rows; used by exhaustive identity sweeps.
std::vector<SkewDiagram> all_interval_diagrams(int n);

}  // namespace schurzeta
