#include "qls/catalog.hpp"
#include "qls/errors.hpp"
#include "qls/phase_class.hpp"
#include "qls/square.hpp"

#include <doctest.h>

#include <vector>

using namespace qls;
using namespace qls::catalog;

namespace {

std::size_t census_count(const std::vector<StateVector>& cells) {
    return Census::of(cells).cardinality();
}

std::size_t census_count(const Grid& g) { return census_count(g.flat_cells()); }
std::size_t census_count(const QuantumLatinSquare& q) { return census_count(q.flat_cells()); }

SetRelations relations(const std::vector<StateVector>& a, const std::vector<StateVector>& b) {
    return set_relations(Census::of(a), Census::of(b));
}

// Rows and columns of a grid fragment must be orthonormal sets.
bool grid_orthonormal(const Grid& g) {
    for (const auto& row : g.cells)
        for (const auto& cell : row)
            if (!cell.is_unit()) return false;
    for (std::size_t r = 0; r < g.rows; ++r)
        for (std::size_t a = 0; a < g.cols; ++a)
            for (std::size_t b = a + 1; b < g.cols; ++b)
                if (!g.cells[r][a].inner(g.cells[r][b]).is_zero()) return false;
    for (std::size_t c = 0; c < g.cols; ++c)
        for (std::size_t a = 0; a < g.rows; ++a)
            for (std::size_t b = a + 1; b < g.rows; ++b)
                if (!g.cells[a][c].inner(g.cells[b][c]).is_zero()) return false;
    return true;
}

std::vector<StateVector> matrix_rows_as_vectors(const NamedMatrix& m) {
    std::vector<StateVector> out;
    for (const auto& row : m.entries) out.emplace_back(row);
    return out;
}

std::vector<StateVector> union_cells(const QuantumLatinSquare& a, const QuantumLatinSquare& b) {
    std::vector<StateVector> cells = a.flat_cells();
    auto more = b.flat_cells();
    cells.insert(cells.end(), more.begin(), more.end());
    return cells;
}

std::vector<StateVector> embedded_basis() {
    return {embed_4_to_6(StateVector::basis(0, 4)), embed_4_to_6(StateVector::basis(1, 4)),
            embed_4_to_6(StateVector::basis(2, 4)), embed_4_to_6(StateVector::basis(3, 4))};
}

} // namespace

TEST_SUITE("catalog") {

TEST_CASE("two-by-two block families") {
    Grid a0 = block_family(BlockName::A, Rational(0));
    REQUIRE(a0.rows == 2);
    CHECK(a0.cells[0][0] == StateVector::basis(0, 6));
    CHECK(a0.cells[0][1] == StateVector::basis(1, 6));
    CHECK(a0.cells[1][0] == StateVector::basis(1, 6));
    CHECK(a0.cells[1][1] == StateVector::basis(0, 6));

    Grid c1 = block_family(BlockName::C, Rational(1));
    RadReal h = RadReal::sqrt_of(Rational(1, 2));
    CHECK(c1.cells[0][0][2] == Amplitude(h));
    CHECK(c1.cells[0][0][5] == Amplitude(h));
    CHECK(c1.cells[0][1][2] == Amplitude(-h));
    CHECK(c1.cells[0][1][5] == Amplitude(h));
    CHECK(grid_orthonormal(c1));

    // distinct parameters give disjoint class pairs
    std::vector<StateVector> cells;
    for (long a : {0L, 1L, 2L}) {
        auto more = block_family(BlockName::A, Rational(a)).flat_cells();
        cells.insert(cells.end(), more.begin(), more.end());
    }
    CHECK(Census::of(cells).cardinality() == 6);

    Grid d0 = block_family(BlockName::D, Rational(0));
    CHECK(d0.rows == 3);
    CHECK(grid_orthonormal(d0));
    CHECK(grid_orthonormal(block_family(BlockName::D, Rational(2))));
    CHECK(grid_orthonormal(block_family(BlockName::E, Rational(3))));
}

TEST_CASE("three-by-three grids and their repairs") {
    CHECK(grid_orthonormal(f1()));
    CHECK(grid_orthonormal(f2()));
    CHECK(f2().meta.repaired);
    CHECK(f2().meta.repaired_entries.size() == 6);
    CHECK(grid_orthonormal(g1()));
    CHECK(g1().meta.repaired_entries.size() == 1);

    // the printed form of F2 has two rows of norm 7/9
    Grid bad_f = f2_unrepaired();
    CHECK_FALSE(grid_orthonormal(bad_f));
    std::size_t off_norm = 0;
    for (const auto& row : bad_f.cells)
        for (const auto& cell : row)
            if (cell.norm_sq() == RadReal(Rational(7, 9))) ++off_norm;
    CHECK(off_norm == 6);

    // the printed form of G1 breaks orthogonality, not norms
    Grid bad_g = g1_unrepaired();
    CHECK_FALSE(grid_orthonormal(bad_g));
    for (const auto& row : bad_g.cells)
        for (const auto& cell : row) CHECK(cell.is_unit());
    CHECK_FALSE(bad_g.cells[2][0].inner(bad_g.cells[0][0]).is_zero());
}

TEST_CASE("row-orthonormal rectangles") {
    for (const RowQLR& r : {u_rect(), v1_rect(), v2_rect()}) {
        CHECK(verify_rows(r).ok());
        CHECK(census_count(r.flat_cells()) == 4);
    }
    CHECK(verify_rows(u0_rect()).ok());
    CHECK(census_count(u0_rect().flat_cells()) == 6);
    CHECK(verify_rows(v0_rect()).ok());
    CHECK(census_count(v0_rect().flat_cells()) == 6);
    CHECK(verify_rows(menu24_rect()).ok());
    CHECK(census_count(menu24_rect().flat_cells()) == 4);
    for (std::size_t i : {0u, 1u, 7u}) {
        CHECK(verify_rows(ui_rect(i)).ok());
        CHECK(census_count(ui_rect(i).flat_cells()) == 6);
    }
}

TEST_CASE("product construction multiplies cardinalities") {
    QuantumLatinSquare x1 = product_construct(u_rect(), v1_rect());
    CHECK(verify(x1).ok());
    CHECK(census_count(x1) == 16);

    QuantumLatinSquare x2 = product_construct(u_rect(), v2_rect());
    CHECK(verify(x2).ok());
    CHECK(census_count(x2) == 16);

    QuantumLatinSquare w = product_construct(u0_rect(), v0_rect());
    CHECK(verify(w).ok());
    CHECK(census_count(w) == 36);

    // the first product has exactly the classes of the assembled 4x4 square
    SetRelations rel = relations(x1.flat_cells(), xp_square().flat_cells());
    CHECK(rel.common == 16);
    CHECK(rel.a_only == 0);
    CHECK(rel.b_only == 0);

    // classical rectangles lift a classical product square
    RowQLR cu;
    cu.rows = 2;
    cu.cols = 3;
    cu.space = {3};
    cu.cells = {{StateVector::basis(0, 3), StateVector::basis(1, 3), StateVector::basis(2, 3)},
                {StateVector::basis(1, 3), StateVector::basis(2, 3), StateVector::basis(0, 3)}};
    RowQLR cv;
    cv.rows = 3;
    cv.cols = 2;
    cv.space = {2};
    cv.cells = {{StateVector::basis(0, 2), StateVector::basis(1, 2)},
                {StateVector::basis(1, 2), StateVector::basis(0, 2)},
                {StateVector::basis(0, 2), StateVector::basis(1, 2)}};
    QuantumLatinSquare classical = product_construct(cu, cv);
    CHECK(verify(classical).ok());
    CHECK(census_count(classical) == 6);

    CHECK_THROWS_AS(product_construct(u_rect(), v0_rect()), DimensionMismatch);
}

TEST_CASE("order-4 square pair and their embeddings") {
    CHECK(verify(xp_square()).ok());
    CHECK(verify(xpp_square()).ok());
    CHECK(census_count(xp_square()) == 16);
    CHECK(census_count(xpp_square()) == 16);

    Grid ep = qls4(16, Qls4Variant::Xp);
    Grid epp = qls4(16, Qls4Variant::Xpp);
    CHECK(census_count(ep) == 16);
    CHECK(census_count(epp) == 16);
    SetRelations rel = relations(ep.flat_cells(), epp.flat_cells());
    CHECK(rel.common == 8);
    CHECK(rel.common + rel.a_only + rel.b_only == 24);

    // the first mixture contains all four embedded basis classes, the second none
    CHECK(relations(ep.flat_cells(), embedded_basis()).common == 4);
    CHECK(relations(epp.flat_cells(), embedded_basis()).common == 0);

    CHECK(census_count(qls4(4)) == 4);
    CHECK(census_count(qls4(6)) == 6);
    CHECK(census_count(qls4(8)) == 8);
    CHECK(grid_orthonormal(qls4(8)));
    CHECK_THROWS_AS(qls4(5), BadParams);
}

TEST_CASE("alpha-basis squares") {
    CHECK(is_orthonormal(smat()));
    CHECK(smat().meta.repaired);
    CHECK_FALSE(is_orthonormal(smat_unrepaired()));
    CHECK(alpha_basis()[0] == StateVector::basis(0, 4));

    QuantumLatinSquare cyc = alpha_qls4(false);
    CHECK(verify(cyc).ok());
    CHECK(census_count(cyc) == 4);

    QuantumLatinSquare mixed = alpha_qls4(true);
    CHECK(verify(mixed).ok());
    CHECK(census_count(mixed) == 8);
    CHECK(mixed.meta.repaired);

    CHECK(census_count(qls4_alpha(false)) == 4);
    CHECK(census_count(qls4_alpha(true)) == 8);
}

TEST_CASE("diagonal-parameter layouts") {
    QuantumLatinSquare base = gen_l(Rational(0), Rational(0), Rational(0), qls4(4));
    CHECK(verify(base).ok());
    CHECK(census_count(base) == 6);

    QuantumLatinSquare ten = gen_l(Rational(2), Rational(3), Rational(4), qls4(4));
    CHECK(verify(ten).ok());
    CHECK(census_count(ten) == 10);

    QuantumLatinSquare big = gen_l(Rational(2), Rational(3), Rational(4),
                                   qls4(16, Qls4Variant::Xpp));
    CHECK(verify(big).ok());
    CHECK(census_count(big) == 22);
}

TEST_CASE("mixed-block layout hits 24 plus twice the distinct parameters") {
    QuantumLatinSquare one = gen_w_abd(Rational(0), Rational(0), Rational(0));
    CHECK(verify(one).ok());
    CHECK(census_count(one) == 26);

    QuantumLatinSquare two = gen_w_abd(Rational(2), Rational(0), Rational(0));
    CHECK(verify(two).ok());
    CHECK(census_count(two) == 28);

    QuantumLatinSquare three = gen_w_abd(Rational(2), Rational(3), Rational(4));
    CHECK(verify(three).ok());
    CHECK(census_count(three) == 30);
}

TEST_CASE("named order-6 squares") {
    struct Row {
        QuantumLatinSquare q;
        std::size_t card;
    };
    for (const Row& row : {Row{h0(), 6}, Row{h1(), 14}, Row{w3(), 9}, Row{w4(), 11},
                           Row{w5(), 16}, Row{w0(), 36}}) {
        CHECK(verify(row.q).ok());
        CHECK(census_count(row.q) == row.card);
    }
    SetRelations rel = relations(h0().flat_cells(), h1().flat_cells());
    CHECK(rel.common == 6);
    CHECK(rel.b_only == 8);
}

TEST_CASE("conjugated maximal squares") {
    for (int k = 1; k <= 4; ++k) {
        QuantumLatinSquare m = mk(k);
        CHECK(verify(m).ok());
        CHECK(census_count(m) == 36);
    }
    CHECK(mk(3).meta.repaired);
    CHECK_THROWS_AS(mk(0), BadParams);
    CHECK_THROWS_AS(mk(5), BadParams);

    auto common_with = [&](const QuantumLatinSquare& a, const QuantumLatinSquare& b) {
        return relations(a.flat_cells(), b.flat_cells()).common;
    };
    CHECK(common_with(w0(), mk(1)) == 1);
    CHECK(common_with(w0(), mk(2)) == 2);
    CHECK(common_with(w0(), mk(3)) == 6);
    CHECK(common_with(mk(1), mk(4)) == 13);
}

TEST_CASE("tensor-padded maximal squares") {
    for (std::size_t i : {0u, 1u, 5u}) {
        QuantumLatinSquare q = wtilde(i);
        CHECK(verify(q).ok());
        CHECK(census_count(q) == 36);
    }
    CHECK(relations(wtilde(1).flat_cells(), wtilde(2).flat_cells()).common == 0);
    CHECK(relations(wtilde(5).flat_cells(), w0().flat_cells()).common == 0);
}

TEST_CASE("orthonormal matrix suite") {
    for (int k = 1; k <= 6; ++k) CHECK(is_orthonormal(xmat(k)));
    for (int k : {1, 2, 4}) CHECK(is_orthonormal(jmat(k)));
    CHECK(is_orthonormal(jmat(3)));
    CHECK(jmat(3).meta.repaired);
    CHECK_THROWS_AS(xmat(0), BadParams);
    CHECK_THROWS_AS(xmat(7), BadParams);
    CHECK_THROWS_AS(jmat(5), BadParams);

    NamedMatrix bad = jmat3_unrepaired();
    CHECK_FALSE(is_orthonormal(bad));
    std::vector<StateVector> rows = matrix_rows_as_vectors(bad);
    std::size_t bad_rows = 0;
    for (const auto& r : rows)
        if (!(r.norm_sq() == RadReal(1))) ++bad_rows;
    CHECK(bad_rows > 0);
}

TEST_CASE("extension ledger spot checks") {
    Census base = Census::of(union_cells(h0(), h1()));
    for (int ell : {2, 9, 16, 24, 36}) {
        QuantumLatinSquare q = hell(ell);
        CHECK(verify(q).ok());
        CHECK(set_relations(Census::of(q.flat_cells()), base).a_only ==
              static_cast<std::size_t>(ell));
    }
    Census w = Census::of(w0().flat_cells());
    for (int ell : {3, 22, 36}) {
        QuantumLatinSquare q = hell_prime(ell);
        CHECK(verify(q).ok());
        CHECK(set_relations(Census::of(q.flat_cells()), w).a_only ==
              static_cast<std::size_t>(ell));
    }
    CHECK_THROWS_AS(hell(17), BadParams);
    CHECK_THROWS_AS(hell(1), BadParams);
    CHECK_THROWS_AS(hell_prime(24), BadParams);
    CHECK_THROWS_AS(hell_prime(26), BadParams);
    CHECK(hell_values().size() == 20);
    CHECK(hell_prime_values().size() == 18);
}

TEST_CASE("order-6 cardinality menu") {
    for (int c : qls6_menu()) {
        QuantumLatinSquare q = qls6_with_cardinality(c);
        CHECK(verify(q).ok());
        CHECK(census_count(q) == static_cast<std::size_t>(c));
    }
    CHECK(qls6_menu().size() == 16);
    CHECK_THROWS_AS(qls6_with_cardinality(7), BadParams);
    CHECK_THROWS_AS(qls6_with_cardinality(13), BadParams);
}

TEST_CASE("dimension embedding") {
    CHECK(embed_4_to_6(StateVector::basis(0, 4)) == StateVector::basis(0, 6));
    CHECK(embed_4_to_6(StateVector::basis(1, 4)) == StateVector::basis(1, 6));
    CHECK(embed_4_to_6(StateVector::basis(2, 4)) == StateVector::basis(3, 6));
    CHECK(embed_4_to_6(StateVector::basis(3, 4)) == StateVector::basis(4, 6));
    StateVector mixed(std::vector<Amplitude>{Amplitude(Rational(1, 2)), Amplitude(Rational(1, 2)),
                                             Amplitude(Rational(1, 2)), Amplitude(Rational(1, 2))});
    CHECK(embed_4_to_6(mixed).norm_sq() == mixed.norm_sq());
    CHECK_THROWS_AS(embed_4_to_6(StateVector::basis(0, 3)), DimensionMismatch);
}

TEST_CASE("block tensor assembly") {
    std::vector<std::vector<QuantumLatinSquare>> blocks = {{h0(), h0()}, {h0(), h0()}};
    QuantumLatinSquare q = assemble_blocks(2, blocks);
    CHECK(q.order == 12);
    CHECK(verify(q).ok());
    CHECK(census_count(q) == 12);
    CHECK_THROWS_AS(assemble_blocks(3, blocks), DimensionMismatch);
}

} // TEST_SUITE
