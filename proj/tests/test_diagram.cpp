#include <doctest.h>

#include <stdexcept>

#include "schurzeta/diagram.hpp"

using namespace schurzeta;

namespace {
SkewDiagram rows(std::vector<RowSpan> r) { return SkewDiagram::from_rows(std::move(r)); }
}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("partition shapes") {
    const SkewDiagram d = SkewDiagram::of_partition(Partition({4, 3, 1}));
    CHECK(d.row_count() == 3);
    CHECK(d.row(1) == RowSpan{1, 4});
    CHECK(d.row(3) == RowSpan{1, 1});
    CHECK(d.cell_count() == 8);
    CHECK(d.max_col() == 4);
    CHECK(d.is_partition_shape());
    CHECK(d.to_partition() == Partition({4, 3, 1}));
    CHECK(d.contains(2, 3));
    CHECK(!d.contains(2, 4));
    CHECK(d.northeast() == Cell{1, 4});
    CHECK(d.southwest() == Cell{3, 1});
}

TEST_CASE("skew shapes") {
    const SkewDiagram d = SkewDiagram::skew(Partition({4, 3, 1}), Partition({2, 1}));
    CHECK(d.rows() == std::vector<RowSpan>{{3, 4}, {2, 3}, {1, 1}});
    CHECK(!d.is_partition_shape());
    CHECK_THROWS_AS(SkewDiagram::skew(Partition({2}), Partition({3})), std::invalid_argument);
    // A fully-covered top row is dropped; a covered row between occupied ones
    // would disconnect the diagram and is rejected.
    CHECK(SkewDiagram::skew(Partition({2, 2}), Partition({2})) ==
          SkewDiagram::of_partition(Partition({2})));
    CHECK_THROWS_AS(SkewDiagram::skew(Partition({2, 1, 1}), Partition({1, 1})),
                    std::invalid_argument);
    CHECK(SkewDiagram::skew(Partition({2, 1}), Partition()) ==
          SkewDiagram::of_partition(Partition({2, 1})));
}

TEST_CASE("row validation and normalization") {
    CHECK_THROWS_AS(rows({{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(rows({{1, 2}, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(rows({{1, 2}, {2, 2}}), std::invalid_argument);
    // Shifted input renormalizes so the least start is column 1.
    CHECK(rows({{4, 5}, {3, 4}}) == rows({{2, 3}, {1, 2}}));
    CHECK(rows({}).empty());
}

TEST_CASE("row-major cells and index_of") {
    const SkewDiagram d = rows({{2, 3}, {1, 2}});
    const auto cs = d.cells();
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == Cell{1, 2});
    CHECK(cs[1] == Cell{1, 3});
    CHECK(cs[2] == Cell{2, 1});
    CHECK(cs[3] == Cell{2, 2});
    for (std::size_t k = 0; k < cs.size(); ++k)
        CHECK(d.index_of(cs[k].row, cs[k].col) == static_cast<int>(k));
    CHECK(d.index_of(1, 1) == -1);
    CHECK(Cell{2, 3}.content() == 1);
}

TEST_CASE("corner cells") {
    CHECK(corners(SkewDiagram::of_partition(Partition({2, 2}))) ==
          std::vector<Cell>{{2, 2}});
    CHECK(corners(SkewDiagram::of_partition(Partition({3, 1}))) ==
          std::vector<Cell>{{1, 3}, {2, 1}});
    CHECK(corners(rows({{2, 3}, {1, 2}})) == std::vector<Cell>{{1, 3}, {2, 2}});
}

TEST_CASE("anti-diagonal reflection") {
    CHECK(antidiagonal_transpose(SkewDiagram::of_partition(Partition({3, 1}))) ==
          rows({{2, 2}, {2, 2}, {1, 2}}));
    // A column reflects to a row and vice versa.
    CHECK(antidiagonal_transpose(SkewDiagram::of_partition(Partition({1, 1, 1}))) ==
          SkewDiagram::of_partition(Partition({3})));
    // A square is symmetric.
    CHECK(antidiagonal_transpose(SkewDiagram::of_partition(Partition({2, 2}))) ==
          SkewDiagram::of_partition(Partition({2, 2})));
    // Diagrams with an interior empty column do not reflect.
    CHECK_THROWS_AS(antidiagonal_transpose(rows({{3, 3}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("reflection is an involution on every small diagram") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : all_interval_diagrams(n)) {
            const SkewDiagram t = antidiagonal_transpose(d);
            CHECK(t.cell_count() == d.cell_count());
            CHECK(antidiagonal_transpose(t) == d);
        }
}

TEST_CASE("interval diagram census") {
    CHECK(all_interval_diagrams(1).size() == 1);
    CHECK(all_interval_diagrams(2).size() == 3);
    CHECK(all_interval_diagrams(3).size() == 9);
    CHECK(all_interval_diagrams(4).size() == 28);
    CHECK(all_interval_diagrams(5).size() == 87);
    for (const auto& d : all_interval_diagrams(4)) CHECK(d.cell_count() == 4);
}

TEST_CASE("laced composition") {
    // Single-row lower wing sits left of the core's southwest cell; the upper
    // wing column stands on the core's northeast cell.
    const SkewDiagram core = SkewDiagram::of_partition(Partition({4, 3, 2, 1}));
    const SkewDiagram lower = SkewDiagram::of_partition(Partition({2}));
    const SkewDiagram upper = SkewDiagram::of_partition(Partition({1, 1}));
    const SkewDiagram composite = build_laced(core, lower, upper);
    CHECK(composite.rows() ==
          std::vector<RowSpan>{{6, 6}, {6, 6}, {3, 6}, {3, 5}, {3, 4}, {1, 3}});
    CHECK(composite.cell_count() == 14);

    const LacedLayout layout = lay_out_laced(core, lower, upper);
    CHECK(layout.shape == composite);
    // The core's top-left cell lands two rows down, two columns right.
    CHECK(layout.core_drow == 2);
    CHECK(layout.core_dcol == 2);

    CHECK(build_laced(core, std::nullopt, std::nullopt) == core);
    CHECK_THROWS_AS(build_laced(SkewDiagram(), lower, upper), std::invalid_argument);
}

}  // TEST_SUITE
