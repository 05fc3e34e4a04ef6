#include "qls/builder.hpp"
#include "qls/errors.hpp"
#include "qls/phase_class.hpp"
#include "qls/square.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <utility>

using namespace qls;
namespace bd = qls::builder;

namespace {

std::size_t census_count(const QuantumLatinSquare& q) {
    return Census::of(q.flat_cells()).cardinality();
}

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

} // namespace

TEST_SUITE("builder") {

TEST_CASE("row-1 value sets") {
    const auto& low = bd::low_row1_values();
    const auto& high = bd::high_row1_values();
    CHECK(low.size() == 21);
    CHECK(high.size() == 22);
    CHECK(contains(low, 0));
    CHECK(contains(low, 36));
    CHECK(contains(low, 24));
    CHECK_FALSE(contains(low, 1));
    CHECK_FALSE(contains(low, 15));
    CHECK_FALSE(contains(low, 35));
    CHECK(contains(high, 30));
    CHECK(contains(high, 34));
    CHECK(contains(high, 35));
    CHECK_FALSE(contains(high, 24));
    CHECK_FALSE(contains(high, 26));
}

TEST_CASE("impossible cardinality is refused first") {
    CHECK_THROWS_AS(bd::plan(2, 13), ImpossibleCardinality);
    CHECK_THROWS_AS(bd::plan(3, 19), ImpossibleCardinality);
    CHECK_THROWS_AS(bd::plan(4, 25), ImpossibleCardinality);
    CHECK_THROWS_AS(bd::plan(5, 31), ImpossibleCardinality);
}

TEST_CASE("range and parameter gates") {
    CHECK_THROWS_AS(bd::plan(3, 17), OutOfRange);
    CHECK_THROWS_AS(bd::plan(3, 325), OutOfRange);
    CHECK_THROWS_AS(bd::plan(2, 11), OutOfRange);
    CHECK_THROWS_AS(bd::plan(2, 145), OutOfRange);
    CHECK_THROWS_AS(bd::plan(1, 36), BadParams);
    CHECK_THROWS_AS(bd::plan(0, 0), BadParams);
}

TEST_CASE("order-12 coverage gaps") {
    for (long c : {131L, 133L, 134L, 135L, 139L})
        CHECK_THROWS_AS(bd::plan(2, c), UnsupportedOrder12Cardinality);
    for (long c : {12L, 130L, 132L, 136L, 137L, 138L, 140L, 144L}) {
        bd::BlockPlan p = bd::plan(2, c);
        CHECK(p.predicted_cardinality == c);
    }
}

TEST_CASE("plan shape matches the branch") {
    bd::BlockPlan low = bd::plan(3, 42);
    CHECK(low.branch == bd::Branch::Low);
    CHECK(low.m == 3);
    CHECK(low.diagonals.size() == 3);
    for (const auto& d : low.diagonals) CHECK(d.rest.size() == 1);

    bd::BlockPlan high = bd::plan(3, 290);
    CHECK(high.branch == bd::Branch::High);
    for (const auto& d : high.diagonals) {
        CHECK(d.row0.kind == bd::RowChoice::Kind::W0);
        for (const auto& r : d.rest) CHECK(r.kind == bd::RowChoice::Kind::Wtilde);
    }

    bd::BlockPlan fixed = bd::plan(3, 313);
    CHECK(fixed.branch == bd::Branch::Explicit313);
    CHECK(fixed.predicted_cardinality == 313);
}

TEST_CASE("assembled plans hit their prediction") {
    for (long c : {18L, 42L, 200L, 240L, 241L, 313L, 324L}) {
        bd::BlockPlan p = bd::plan(3, c);
        CHECK(p.predicted_cardinality == c);
        QuantumLatinSquare q = bd::assemble(p);
        CHECK(q.order == 18);
        CHECK(census_count(q) == static_cast<std::size_t>(c));
    }
}

TEST_CASE("build self-checks") {
    QuantumLatinSquare q = bd::build(3, 200);
    CHECK(q.order == 18);
    CHECK(verify(q).ok());
    CHECK(census_count(q) == 200);

    CHECK(census_count(bd::build(2, 12)) == 12);
    CHECK(census_count(bd::build(2, 144)) == 144);
    CHECK(census_count(bd::build(4, 100)) == 100);
    CHECK_THROWS_AS(bd::build(2, 133), UnsupportedOrder12Cardinality);
    CHECK_THROWS_AS(bd::build(3, 19), ImpossibleCardinality);
}

TEST_CASE("diagonal plans are independent of their slot") {
    bd::BlockPlan p = bd::plan(3, 150);
    std::size_t before = census_count(bd::assemble(p));
    std::swap(p.diagonals[0], p.diagonals[2]);
    std::size_t after = census_count(bd::assemble(p));
    CHECK(before == after);
    CHECK(before == 150);
}

TEST_CASE("random plans meet their predictions") {
    std::mt19937 rng(424242u);
    for (int t = 0; t < 8; ++t) {
        std::size_t m = (t % 2 == 0) ? 3 : 4;
        long lo = 6 * static_cast<long>(m);
        long hi = 36 * static_cast<long>(m) * static_cast<long>(m);
        std::uniform_int_distribution<long> pick(lo, hi);
        long c = pick(rng);
        if (c == lo + 1) ++c;
        CAPTURE(m);
        CAPTURE(c);
        bd::BlockPlan p = bd::plan(m, c);
        CHECK(p.predicted_cardinality == c);
        CHECK(census_count(bd::assemble(p)) == static_cast<std::size_t>(c));
    }
}

TEST_CASE("feasibility table for order 18") {
    auto entries = bd::feasibility_table(3);
    REQUIRE(entries.size() == 307);
    std::vector<long> infeasible;
    for (const auto& e : entries) {
        CHECK(e.cardinality >= 18);
        CHECK(e.cardinality <= 324);
        if (e.feasible) {
            REQUIRE(e.plan.has_value());
            CHECK(e.plan->predicted_cardinality == e.cardinality);
        } else {
            infeasible.push_back(e.cardinality);
            CHECK(e.error_code == "impossible_cardinality");
        }
        if (e.cardinality == 313) {
            REQUIRE(e.feasible);
            CHECK(e.plan->branch == bd::Branch::Explicit313);
        }
    }
    CHECK(infeasible == std::vector<long>{19});
}

TEST_CASE("feasibility table for order 12") {
    auto entries = bd::feasibility_table(2);
    REQUIRE(entries.size() == 133);
    std::set<long> unsupported;
    std::set<long> impossible;
    for (const auto& e : entries) {
        if (e.feasible) continue;
        if (e.error_code == "impossible_cardinality")
            impossible.insert(e.cardinality);
        else if (e.error_code == "unsupported_order12_cardinality")
            unsupported.insert(e.cardinality);
        else
            FAIL("unexpected error code " << e.error_code);
    }
    CHECK(impossible == std::set<long>{13});
    CHECK(unsupported == std::set<long>{131, 133, 134, 135, 139});
}

} // TEST_SUITE
