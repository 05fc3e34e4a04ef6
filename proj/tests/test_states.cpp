#include "qls/errors.hpp"
#include "qls/phase_class.hpp"
#include "qls/state_vector.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace qls;

namespace {

Amplitude imag_unit() { return Amplitude(RadReal(0), RadReal(1)); }

StateVector vec(std::vector<long> entries) {
    std::vector<Amplitude> amps;
    for (long e : entries) amps.emplace_back(e);
    return StateVector(std::move(amps));
}

} // namespace

TEST_SUITE("states") {

TEST_CASE("basis vectors") {
    StateVector e1 = StateVector::basis(1, 3);
    CHECK(e1.dim() == 3);
    CHECK(e1[0].is_zero());
    CHECK(e1[1] == Amplitude(1));
    CHECK(e1.is_unit());
    CHECK_THROWS_AS(StateVector::basis(3, 3), IndexOutOfRange);
}

TEST_CASE("tensor products concatenate index spaces") {
    StateVector u(std::vector<Amplitude>{Amplitude(Rational(3, 5)), Amplitude(Rational(4, 5))});
    StateVector t = u.tensor(StateVector::basis(1, 2));
    CHECK(t.dim() == 4);
    CHECK(t[0].is_zero());
    CHECK(t[1] == Amplitude(Rational(3, 5)));
    CHECK(t[2].is_zero());
    CHECK(t[3] == Amplitude(Rational(4, 5)));
    CHECK(t.is_unit());
    // |1> (x) |2> in dims 2,3 lands at index 1*3+2
    CHECK(StateVector::basis(1, 2).tensor(StateVector::basis(2, 3)) ==
          StateVector::basis(5, 6));
}

TEST_CASE("inner products conjugate the first slot") {
    StateVector u = StateVector::basis(0, 2).scaled(imag_unit());
    CHECK(u.inner(StateVector::basis(0, 2)) == -imag_unit());
    CHECK(StateVector::basis(0, 2).inner(u) == imag_unit());
    CHECK(u.inner(u) == Amplitude(1));
    CHECK(vec({1, 1}).inner(vec({1, -1})).is_zero());
    CHECK_THROWS_AS(vec({1, 0}).inner(vec({1, 0, 0})), DimensionMismatch);
    CHECK_THROWS_AS(vec({1, 0}) + vec({1, 0, 0}), DimensionMismatch);
}

TEST_CASE("norms") {
    StateVector u(std::vector<Amplitude>{Amplitude(Rational(3, 5)), Amplitude(Rational(4, 5))});
    CHECK(u.norm_sq() == RadReal(1));
    CHECK(u.is_unit());
    CHECK(vec({1, 1}).norm_sq() == RadReal(2));
    CHECK_FALSE(vec({1, 1}).is_unit());
    CHECK(vec({0, 0}).is_zero_vector());
}

TEST_CASE("canonicalize divides out the first nonzero amplitude") {
    Amplitude s(RadReal::sqrt_of(Rational(1, 2)), RadReal::sqrt_of(Rational(1, 2)));
    StateVector v = vec({1, 1}).scaled(s * imag_unit());
    CHECK(canonicalize(v) == vec({1, 1}));

    StateVector w = StateVector::basis(2, 3).scaled(Amplitude::omega());
    CHECK(canonicalize(w) == StateVector::basis(2, 3));

    // (-4/5)|00> + (3/5)|10> over dims 2x3: indices 0 and 3
    std::vector<Amplitude> amps(6);
    amps[0] = Amplitude(Rational(-4, 5));
    amps[3] = Amplitude(Rational(3, 5));
    StateVector canon = canonicalize(StateVector(std::move(amps)));
    CHECK(canon[0] == Amplitude(1));
    CHECK(canon[3] == Amplitude(Rational(-3, 4)));

    CHECK_THROWS_AS(canonicalize(vec({0, 0})), DivisionByZero);
}

TEST_CASE("same_up_to_phase matches canonicalize equality") {
    std::vector<StateVector> pool = {
        vec({1, 1}), vec({1, -1}), StateVector::basis(0, 2), StateVector::basis(1, 2),
        vec({1, 1}).scaled(Amplitude::omega()),
        vec({1, -1}).scaled(imag_unit()),
        StateVector(std::vector<Amplitude>{Amplitude(Rational(3, 5)), Amplitude(Rational(4, 5))}),
        StateVector(std::vector<Amplitude>{Amplitude(Rational(3, 5)), Amplitude(Rational(-4, 5))}),
    };
    for (const auto& u : pool)
        for (const auto& w : pool)
            CHECK(same_up_to_phase(u, w) == (canonicalize(u) == canonicalize(w)));
    CHECK(same_up_to_phase(StateVector::basis(0, 2),
                           StateVector::basis(0, 2).scaled(Amplitude::omega())));
    CHECK_FALSE(same_up_to_phase(StateVector::basis(0, 2), StateVector::basis(1, 2)));
}

TEST_CASE("phase equivalence is an equivalence relation") {
    std::mt19937 rng(5u);
    std::vector<Amplitude> phases = {
        Amplitude(1), Amplitude(-1), imag_unit(), Amplitude::omega(),
        Amplitude::omega() * Amplitude::omega(),
        Amplitude(RadReal::sqrt_of(Rational(1, 2)), RadReal::sqrt_of(Rational(1, 2)))};
    std::vector<StateVector> base = {vec({1, 2, 0}), vec({0, 1, -1}), vec({3, 0, 4}),
                                     StateVector::basis(1, 3)};
    std::uniform_int_distribution<std::size_t> pick_base(0, base.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_phase(0, phases.size() - 1);
    for (int i = 0; i < 80; ++i) {
        StateVector a = base[pick_base(rng)].scaled(phases[pick_phase(rng)]);
        StateVector b = base[pick_base(rng)].scaled(phases[pick_phase(rng)]);
        StateVector c = base[pick_base(rng)].scaled(phases[pick_phase(rng)]);
        CHECK(same_up_to_phase(a, a));
        CHECK(same_up_to_phase(a, b) == same_up_to_phase(b, a));
        if (same_up_to_phase(a, b) && same_up_to_phase(b, c)) CHECK(same_up_to_phase(a, c));
    }
}

TEST_CASE("census groups by phase class in first-occurrence order") {
    StateVector v = vec({1, 1});
    StateVector w = StateVector::basis(0, 2);
    std::vector<StateVector> cells = {v, w, v.scaled(Amplitude::omega()), w.scaled(imag_unit())};
    Census c = Census::of(cells);
    REQUIRE(c.cardinality() == 2);
    CHECK(c.classes()[0].representative == v);
    CHECK(c.classes()[0].multiplicity == 2);
    CHECK(c.classes()[1].representative == w);
    CHECK(c.classes()[1].multiplicity == 2);
    REQUIRE(c.classes()[0].canonical.has_value());
    CHECK(*c.classes()[0].canonical == vec({1, 1}));
}

TEST_CASE("census is thread-count independent") {
    std::mt19937 rng(17u);
    std::uniform_int_distribution<long> pick(-3, 3);
    std::vector<StateVector> cells;
    for (int i = 0; i < 120; ++i) {
        StateVector v = vec({pick(rng), pick(rng), pick(rng)});
        if (v.is_zero_vector()) v = StateVector::basis(0, 3);
        cells.push_back(i % 3 == 0 ? v.scaled(Amplitude::omega()) : v);
    }
    Census seq = Census::of(cells, 1);
    Census par = Census::of(cells, 8);
    REQUIRE(seq.cardinality() == par.cardinality());
    for (std::size_t i = 0; i < seq.cardinality(); ++i) {
        CHECK(seq.classes()[i].representative == par.classes()[i].representative);
        CHECK(seq.classes()[i].multiplicity == par.classes()[i].multiplicity);
    }
}

TEST_CASE("census multiplicities cover the input") {
    std::vector<StateVector> cells = {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({1, 1})};
    Census c = Census::of(cells);
    std::size_t total = 0;
    for (const auto& cls : c.classes()) total += cls.multiplicity;
    CHECK(total == cells.size());
    CHECK(c.cardinality() == 3);
}

TEST_CASE("set relations count shared phase classes") {
    std::vector<StateVector> a = {StateVector::basis(0, 3), StateVector::basis(1, 3)};
    std::vector<StateVector> b = {StateVector::basis(1, 3).scaled(Amplitude::omega()),
                                  StateVector::basis(2, 3)};
    SetRelations r = set_relations(Census::of(a), Census::of(b));
    CHECK(r.common == 1);
    CHECK(r.a_only == 1);
    CHECK(r.b_only == 1);
}

} // TEST_SUITE
