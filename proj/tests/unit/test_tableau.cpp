#include "oracles.hpp"

#include "schurweyl/error.hpp"
#include "schurweyl/tableau.hpp"
#include "schurweyl/text_format.hpp"

#include <doctest.h>

using namespace schurweyl;

TEST_CASE("standardness is enforced") {
    CHECK_NOTHROW(StandardTableau({{1, 3}, {2}}));
    CHECK_THROWS_AS(StandardTableau({{2, 1}, {3}}), InvalidArgument);
    CHECK_THROWS_AS(StandardTableau({{1, 2}, {2}}), InvalidArgument);
    CHECK_THROWS_AS(StandardTableau({{1, 4}, {2}}), InvalidArgument);
}

TEST_CASE("enumeration") {
    const auto two_one = enumerate_standard_tableaux(YoungDiagram({2, 1}));
    REQUIRE(two_one.size() == 2);
    CHECK(to_string(two_one[0]) == "[[1,2],[3]]");
    CHECK(to_string(two_one[1]) == "[[1,3],[2]]");
    CHECK(enumerate_standard_tableaux(YoungDiagram({4})).size() == 1);
    CHECK(enumerate_standard_tableaux(YoungDiagram({2, 2})).size() == 2);

    for (int n = 1; n <= 6; ++n)
        for (const auto &d : partitions_of(n)) {
            const auto list = enumerate_standard_tableaux(d);
            CHECK(static_cast<long>(list.size()) == oracle::count_standard_fillings(d.rows()));
            CHECK(BigInt(static_cast<long>(list.size())) == dim_irrep_SN(d));
            for (std::size_t i = 1; i < list.size(); ++i)
                CHECK(list[i - 1].reading_word() < list[i].reading_word());
        }
}

TEST_CASE("row- and column-ordered tableaux") {
    const YoungDiagram y({3, 2, 1});
    CHECK(to_string(row_ordered(y)) == "[[1,2,3],[4,5],[6]]");
    CHECK(to_string(column_ordered(y)) == "[[1,4,6],[2,5],[3]]");
    CHECK(row_ordered(y).is_row_ordered());
    CHECK(column_ordered(y).is_column_ordered());
    CHECK_FALSE(row_ordered(y).is_column_ordered());
    CHECK(to_string(column_ordered_with_last_in(y, {2, 2})) == "[[1,4,5],[2,6],[3]]");
}

TEST_CASE("remove_largest") {
    CHECK(to_string(remove_largest(StandardTableau({{1, 3}, {2}}))) == "[[1],[2]]");
    CHECK(to_string(remove_largest(StandardTableau({{1, 2}, {3}}))) == "[[1,2]]");
    CHECK(remove_largest(row_ordered(YoungDiagram({3, 2, 1}))) == row_ordered(YoungDiagram({3, 2})));
}

TEST_CASE("split_tableau") {
    auto s = split_tableau(StandardTableau({{1, 3}, {2, 4}}), 2);
    CHECK(to_string(s.first) == "[[1],[2]]");
    REQUIRE(s.second);
    CHECK(to_string(*s.second) == "[[1],[2]]");

    s = split_tableau(StandardTableau({{1, 3}, {2}}), 1);
    CHECK(to_string(s.first) == "[[1]]");
    CHECK_FALSE(s.second);

    for (const auto &t : enumerate_standard_tableaux(YoungDiagram({3, 2, 1}))) {
        s = split_tableau(t, 5);
        REQUIRE(s.second);
        CHECK(to_string(*s.second) == "[[1]]");
        CHECK(s.first == remove_largest(t));
    }
}

TEST_CASE("axial distance") {
    CHECK(axial_distance(StandardTableau({{1, 2}, {3}}), 1) == 1);
    CHECK(axial_distance(StandardTableau({{1, 2}, {3}}), 2) == -2);
    CHECK(axial_distance(StandardTableau({{1, 3}, {2}}), 2) == 2);
    CHECK(axial_distance(StandardTableau({{1, 3}, {2}}), 1) == -1);
}

TEST_CASE("swap_entries") {
    CHECK(to_string(swap_entries(StandardTableau({{1, 2}, {3}}), 2)) == "[[1,3],[2]]");
    CHECK_THROWS_AS(swap_entries(StandardTableau({{1, 2}, {3}}), 1), InvalidArgument);
}

TEST_CASE("text format round trip") {
    for (int n = 1; n <= 5; ++n)
        for (const auto &d : partitions_of(n)) {
            CHECK(parse_partition(to_string(d)) == d);
            for (const auto &t : enumerate_standard_tableaux(d))
                CHECK(parse_tableau(to_string(t)) == t);
        }
    CHECK(parse_partition(" 3, 2 ,1 ") == YoungDiagram({3, 2, 1}));
    CHECK(parse_box("(4,1)") == Box{4, 1});
    CHECK_THROWS_AS(parse_partition(""), ParseError);
    CHECK_THROWS_AS(parse_partition("3,,1"), ParseError);
    CHECK_THROWS_AS(parse_partition("3,2;"), ParseError);
    CHECK_THROWS_AS(parse_partition("1,2"), InvalidArgument);
    CHECK_THROWS_AS(parse_tableau("[[1,3],[2]"), ParseError);
    CHECK_THROWS_AS(parse_tableau("[[1,2],[2]]"), InvalidArgument);
}
