#include <doctest.h>

#include <random>

#include "vcind/rank.hpp"
#include "vcind/zoo.hpp"

using namespace vcind;

namespace {

Row row_from_value(std::uint64_t value, std::size_t width) {
    Row r(width);
    for (std::size_t i = 0; i < width; ++i) {
        r.set_bit(i, (value >> i) & 1);
    }
    return r;
}

} // namespace

TEST_CASE("min_switch_rank examples") {
    CHECK(min_switch_rank(Row::from_string("00100"), 0) == 1);
    CHECK(min_switch_rank(Row::from_string("11111"), 3) == 0);
    CHECK(min_switch_rank(Row::from_string("0"), 0) == 0);
    CHECK(min_switch_rank(Row::from_string("0101"), 1) == 1);
}

TEST_CASE("brute force oracle examples") {
    CHECK(brute_min_switch_rank(Row::from_string("0101010101"), 0) == 5);
    CHECK(brute_min_switch_rank(Row::from_string("0101010101"), 8) == 1);
    CHECK_THROWS(brute_min_switch_rank(Row(17), 0));
}

TEST_CASE("greedy agrees with brute force exhaustively (width <= 10)") {
    for (std::size_t width = 1; width <= 10; ++width) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) {
            const Row r = row_from_value(v, width);
            for (std::size_t l = 0; l <= 2; ++l) {
                const std::size_t rank = min_switch_rank(r, l);
                CHECK(rank == brute_min_switch_rank(r, l));
                const std::size_t alt = r.alternation();
                CHECK(rank <= alt);
                CHECK((alt + l + 1) / (l + 2) <= rank);
            }
        }
    }
}

TEST_CASE("min_switch_rank is nonincreasing in the window extent") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t width = 2 + rng() % 50;
        Row r(width);
        for (std::size_t i = 0; i < width; ++i) r.set_bit(i, (rng() & 1) != 0);
        std::size_t prev = min_switch_rank(r, 0);
        for (std::size_t l = 1; l <= 6; ++l) {
            const std::size_t cur = min_switch_rank(r, l);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("decompose examples") {
    SUBCASE("000111 at window 0") {
        const SwitchDecomposition d = decompose(Row::from_string("000111"), 0);
        CHECK(d.switches() == 1);
        CHECK(d.positions == std::vector<std::size_t>{3});
        CHECK(d.gap_values == std::vector<std::uint8_t>{0, 1});
        CHECK(d.window_bits[0] == std::vector<std::uint8_t>{1});
        CHECK(d.reproduce() == Row::from_string("000111"));
    }
    SUBCASE("0110 at window 1") {
        const SwitchDecomposition d = decompose(Row::from_string("0110"), 1);
        CHECK(d.switches() == 1);
        CHECK(d.positions == std::vector<std::size_t>{1});
        CHECK(d.window_bits[0] == std::vector<std::uint8_t>{1, 1});
        CHECK(d.gap_values == std::vector<std::uint8_t>{0, 0});
        CHECK(d.reproduce() == Row::from_string("0110"));
    }
    SUBCASE("constant row") {
        const SwitchDecomposition d = decompose(Row::from_string("1111"), 2);
        CHECK(d.switches() == 0);
        CHECK(d.gap_values == std::vector<std::uint8_t>{1});
        CHECK(d.reproduce() == Row::from_string("1111"));
    }
}

TEST_CASE("decompose reproduces and is minimal on random rows") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t width = 1 + rng() % 80;
        Row r(width);
        for (std::size_t i = 0; i < width; ++i) r.set_bit(i, (rng() & 1) != 0);
        const std::size_t l = rng() % 4;
        const SwitchDecomposition d = decompose(r, l);
        CHECK(d.reproduce() == r);
        CHECK(d.switches() == min_switch_rank(r, l));
        for (std::size_t k = 1; k < d.positions.size(); ++k) {
            CHECK(d.positions[k - 1] < d.positions[k]);
        }
    }
}

TEST_CASE("family_rank examples") {
    CHECK(family_rank(generate(FamilySpec::parse("threshold"), 12), 0) == 1);
    CHECK(family_rank(generate(FamilySpec::parse("threshold"), 12), 3) == 1);

    TraceMatrix constants(5, {Row::from_string("00000"),
                              Row::from_string("11111")});
    CHECK(family_rank(constants, 0) == 0);

    CHECK(family_rank(generate(FamilySpec::parse("spikes:2"), 8), 0) == 2);
}

TEST_CASE("family_rank never grows under column restriction") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t width = 3 + rng() % 20;
        std::vector<Row> rows;
        for (std::size_t i = 0; i < 1 + rng() % 6; ++i) {
            Row r(width);
            for (std::size_t j = 0; j < width; ++j) {
                r.set_bit(j, (rng() & 1) != 0);
            }
            rows.push_back(std::move(r));
        }
        TraceMatrix m(width, rows);
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < width; ++j) {
            if (rng() & 1) cols.push_back(j);
        }
        if (cols.empty()) cols.push_back(0);
        for (std::size_t l = 0; l <= 2; ++l) {
            CHECK(family_rank(restrict_columns(m, cols), l) <=
                  family_rank(m, l));
        }
    }
}

TEST_CASE("joint_cuts examples") {
    TraceMatrix m1(4, {Row::from_string("0011"), Row::from_string("0111")});
    CHECK(joint_cuts(m1).gaps == std::vector<std::size_t>{0, 1});

    TraceMatrix single(6, {Row::from_string("010011")});
    CHECK(joint_cuts(single) == change_points(single.rows()[0]));

    TraceMatrix m2(4, {Row::from_string("0101"), Row::from_string("1010")});
    CHECK(joint_cuts(m2).gaps == std::vector<std::size_t>{0, 1, 2});
}
