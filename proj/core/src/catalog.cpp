#include "qls/catalog.hpp"

#include "qls/errors.hpp"

#include <algorithm>
#include <initializer_list>

namespace qls::catalog {

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

Amplitude ra(const Rational& q) { return Amplitude(q); }

// 1/sqrt(k) for a positive rational k.
RadReal inv_sqrt(const Rational& k) { return RadReal::sqrt_of(k.inverse()); }

StateVector real_vec(std::initializer_list<Rational> comps) {
    std::vector<Amplitude> amps;
    for (const auto& q : comps) amps.emplace_back(q);
    return StateVector(std::move(amps));
}

StateVector rad_vec(std::initializer_list<RadReal> comps) {
    std::vector<Amplitude> amps;
    for (const auto& r : comps) amps.emplace_back(r);
    return StateVector(std::move(amps));
}

// Sparse dim-6 vector: value at each listed index.
StateVector sparse6(std::initializer_list<std::pair<std::size_t, Amplitude>> entries) {
    StateVector v(6);
    for (const auto& [i, a] : entries) v[i] = a;
    return v;
}

void inherit_repair(ObjectMeta& dst, const ObjectMeta& src) {
    if (!src.repaired) return;
    dst.repaired = true;
    auto add = [&](const std::string& n) {
        if (n.empty()) return;
        if (std::find(dst.repaired_components.begin(), dst.repaired_components.end(), n) ==
            dst.repaired_components.end())
            dst.repaired_components.push_back(n);
    };
    if (!src.repaired_entries.empty()) add(src.name);
    for (const auto& n : src.repaired_components) add(n);
}

Grid grid_from_rows(std::vector<std::vector<StateVector>> rows,
                    std::vector<std::size_t> space, std::string name) {
    Grid g;
    g.rows = rows.size();
    g.cols = g.rows ? rows[0].size() : 0;
    g.space = std::move(space);
    g.cells = std::move(rows);
    g.meta.name = std::move(name);
    return g;
}

Grid subgrid(const Grid& g, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    Grid s;
    s.rows = nr;
    s.cols = nc;
    s.space = g.space;
    s.cells.resize(nr);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) s.cells[r].push_back(g.cells[r0 + r][c0 + c]);
    s.meta = g.meta;
    return s;
}

// Tiles a rectangular arrangement of grids into one square; all grids in a
// block row must agree on height, in a block column on width.
QuantumLatinSquare tile(const std::vector<std::vector<Grid>>& blocks,
                        std::vector<std::size_t> space, std::string name) {
    QuantumLatinSquare q;
    q.space = std::move(space);
    q.meta.name = std::move(name);
    std::size_t order = 0;
    for (const auto& brow : blocks) order += brow[0].rows;
    q.order = order;
    q.cells.assign(order, std::vector<StateVector>());
    std::size_t r_base = 0;
    for (const auto& brow : blocks) {
        std::size_t h = brow[0].rows;
        for (const auto& b : brow) {
            if (b.rows != h)
                throw DimensionMismatch("block heights differ within a block row");
            for (std::size_t r = 0; r < h; ++r)
                for (std::size_t c = 0; c < b.cols; ++c)
                    q.cells[r_base + r].push_back(b.cells[r][c]);
            inherit_repair(q.meta, b.meta);
        }
        r_base += h;
    }
    for (const auto& row : q.cells)
        if (row.size() != order) throw DimensionMismatch("block widths do not tile the order");
    return q;
}

Grid as_grid(const QuantumLatinSquare& q) {
    Grid g;
    g.rows = g.cols = q.order;
    g.space = q.space;
    g.cells = q.cells;
    g.meta = q.meta;
    return g;
}

const Rational kZero = R(0);

} // namespace

std::vector<StateVector> Grid::flat_cells() const {
    std::vector<StateVector> out;
    out.reserve(rows * cols);
    for (const auto& row : cells)
        for (const auto& c : row) out.push_back(c);
    return out;
}

NamedMatrix matrix_multiply(const NamedMatrix& a, const NamedMatrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("matrix product shape");
    NamedMatrix r;
    r.rows = a.rows;
    r.cols = b.cols;
    r.entries.assign(r.rows, std::vector<Amplitude>(r.cols));
    for (std::size_t i = 0; i < r.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.entries[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < r.cols; ++j) {
                if (b.entries[k][j].is_zero()) continue;
                r.entries[i][j] += a.entries[i][k] * b.entries[k][j];
            }
        }
    return r;
}

NamedMatrix matrix_transpose(const NamedMatrix& a) {
    NamedMatrix r;
    r.rows = a.cols;
    r.cols = a.rows;
    r.entries.assign(r.rows, std::vector<Amplitude>(r.cols));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r.entries[j][i] = a.entries[i][j];
    return r;
}

StateVector matrix_column(const NamedMatrix& a, std::size_t j) {
    if (j >= a.cols) throw IndexOutOfRange("matrix column index");
    StateVector v(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) v[i] = a.entries[i][j];
    return v;
}

bool is_orthonormal(const NamedMatrix& a) {
    if (a.rows != a.cols) return false;
    const RadReal one{Rational(1)};
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = i; j < a.rows; ++j) {
            Amplitude row_ip, col_ip;
            for (std::size_t k = 0; k < a.cols; ++k) {
                row_ip += a.entries[i][k].conj() * a.entries[j][k];
                col_ip += a.entries[k][i].conj() * a.entries[k][j];
            }
            Amplitude want = (i == j) ? Amplitude(1) : Amplitude();
            if (row_ip != want || col_ip != want) return false;
        }
    }
    return true;
}

Grid block_family(BlockName which, const Rational& a) {
    RadReal s = inv_sqrt(R(1) + a * a);
    Amplitude first(s), second(RadReal(a) * s);
    Amplitude mfirst(-(RadReal(a) * s)), msecond(s);

    auto pair2 = [&](std::size_t i0, std::size_t i1) {
        StateVector u = sparse6({{i0, first}, {i1, second}});
        StateVector w = sparse6({{i0, mfirst}, {i1, msecond}});
        return std::vector<std::vector<StateVector>>{{u, w}, {w, u}};
    };
    auto triple3 = [&](std::size_t i0, std::size_t i1, std::size_t i2) {
        StateVector e = StateVector::basis(i0, 6);
        StateVector p = sparse6({{i1, first}, {i2, second}});
        StateVector q = sparse6({{i1, mfirst}, {i2, msecond}});
        return std::vector<std::vector<StateVector>>{{e, p, q}, {q, e, p}, {p, q, e}};
    };

    std::string name;
    std::vector<std::vector<StateVector>> rows;
    switch (which) {
        case BlockName::A: name = "A(" + a.str() + ")"; rows = pair2(0, 1); break;
        case BlockName::B: name = "B(" + a.str() + ")"; rows = pair2(3, 4); break;
        case BlockName::C: name = "C(" + a.str() + ")"; rows = pair2(2, 5); break;
        case BlockName::D: name = "D(" + a.str() + ")"; rows = triple3(0, 1, 2); break;
        case BlockName::E: name = "E(" + a.str() + ")"; rows = triple3(3, 4, 5); break;
    }
    return grid_from_rows(std::move(rows), {2, 3}, std::move(name));
}

namespace {

// The three cyclically shifted rows over vectors (x, y, z).
std::vector<std::vector<StateVector>> cyclic3(const StateVector& x, const StateVector& y,
                                              const StateVector& z) {
    return {{x, y, z}, {y, z, x}, {z, x, y}};
}

} // namespace

Grid f1() {
    RadReal s3 = inv_sqrt(R(3));
    Amplitude w = Amplitude::omega();
    Amplitude w2 = w * w;
    Amplitude s(s3);
    StateVector fw = sparse6({{0, s}, {1, s * w}, {2, s * w2}});
    StateVector fw2 = sparse6({{0, s}, {1, s * w2}, {2, s * w}});
    StateVector f1v = sparse6({{0, s}, {1, s}, {2, s}});
    return grid_from_rows(cyclic3(fw, fw2, f1v), {2, 3}, "F1");
}

Grid f2() {
    RadReal half = RadReal(R(1, 2));
    StateVector u1 = sparse6({{0, Amplitude(-half)},
                              {1, Amplitude(-(RadReal::sqrt_of(R(3)) * half))}});
    StateVector u2 = sparse6({{0, Amplitude(RadReal::sqrt_of(R(3)) * RadReal(R(1, 6)))},
                              {1, ra(R(-1, 6))},
                              {2, Amplitude(-(RadReal::sqrt_of(R(2)) * RadReal(R(2, 3))))}});
    StateVector u3 = sparse6({{0, Amplitude(RadReal::sqrt_of(R(6)) * RadReal(R(1, 3)))},
                              {1, Amplitude(-(RadReal::sqrt_of(R(2)) * RadReal(R(1, 3))))},
                              {2, ra(R(1, 3))}});
    Grid g = grid_from_rows(cyclic3(u1, u2, u3), {2, 3}, "F2");
    g.meta.repaired = true;
    g.meta.repaired_entries = {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 2}};
    return g;
}

Grid f2_unrepaired() {
    RadReal half = RadReal(R(1, 2));
    RadReal third_sqrt6 = RadReal::sqrt_of(R(6)) * RadReal(R(1, 3));
    StateVector v1 = sparse6({{0, Amplitude(-half)},
                              {1, Amplitude(-(RadReal::sqrt_of(R(3)) * half))}});
    StateVector v2 = sparse6({{0, Amplitude(RadReal::sqrt_of(R(3)) * RadReal(R(1, 6)))},
                              {1, ra(R(-1, 6))},
                              {2, Amplitude(-third_sqrt6)}});
    StateVector v3 = sparse6({{0, Amplitude(RadReal::sqrt_of(R(3)) * RadReal(R(1, 6)))},
                              {1, ra(R(-1, 6))},
                              {2, Amplitude(third_sqrt6)}});
    return grid_from_rows(cyclic3(v1, v2, v3), {2, 3}, "F2_unrepaired");
}

Grid g1() {
    RadReal s3 = inv_sqrt(R(3));
    Amplitude w = Amplitude::omega();
    Amplitude w2 = w * w;
    Amplitude s(s3);
    StateVector gw = sparse6({{3, s}, {4, s * w}, {5, s * w2}});
    StateVector gw2 = sparse6({{3, s}, {4, s * w2}, {5, s * w}});
    StateVector g1v = sparse6({{3, s}, {4, s}, {5, s}});
    Grid g = grid_from_rows(cyclic3(gw, gw2, g1v), {2, 3}, "G1");
    g.meta.repaired = true;
    g.meta.repaired_entries = {{2, 0}};
    return g;
}

Grid g1_unrepaired() {
    Grid g = g1();
    g.meta = {};
    g.meta.name = "G1_unrepaired";
    RadReal s3 = inv_sqrt(R(3));
    Amplitude s(s3);
    g.cells[2][0] = sparse6({{0, s}, {4, s}, {5, s}});
    return g;
}

namespace {

RowQLR rect(std::size_t rows, std::size_t cols, std::vector<std::size_t> space,
            std::vector<std::vector<StateVector>> cells, std::string name) {
    RowQLR r;
    r.rows = rows;
    r.cols = cols;
    r.space = std::move(space);
    r.cells = std::move(cells);
    r.meta.name = std::move(name);
    return r;
}

} // namespace

RowQLR u_rect() {
    return rect(2, 2, {2},
                {{StateVector::basis(0, 2), StateVector::basis(1, 2)},
                 {real_vec({R(3, 5), R(4, 5)}), real_vec({R(-4, 5), R(3, 5)})}},
                "U");
}

RowQLR v1_rect() {
    return rect(2, 2, {2},
                {{StateVector::basis(0, 2), StateVector::basis(1, 2)},
                 {real_vec({R(5, 13), R(12, 13)}), real_vec({R(-12, 13), R(5, 13)})}},
                "V1");
}

RowQLR v2_rect() {
    return rect(2, 2, {2},
                {{real_vec({R(3, 5), R(4, 5)}), real_vec({R(-4, 5), R(3, 5)})},
                 {real_vec({R(5, 13), R(12, 13)}), real_vec({R(-12, 13), R(5, 13)})}},
                "V2");
}

RowQLR u0_rect() {
    return rect(3, 2, {2},
                {{StateVector::basis(0, 2), StateVector::basis(1, 2)},
                 {real_vec({R(3, 5), R(4, 5)}), real_vec({R(4, 5), R(-3, 5)})},
                 {real_vec({R(4, 5), R(3, 5)}), real_vec({R(3, 5), R(-4, 5)})}},
                "U0");
}

RowQLR v0_rect() {
    return rect(2, 3, {3},
                {{StateVector::basis(0, 3), StateVector::basis(1, 3), StateVector::basis(2, 3)},
                 {real_vec({R(1, 3), R(2, 3), R(2, 3)}), real_vec({R(2, 3), R(1, 3), R(-2, 3)}),
                  real_vec({R(2, 3), R(-2, 3), R(1, 3)})}},
                "V0");
}

RowQLR ui_rect(std::size_t i) {
    std::vector<std::vector<StateVector>> rows;
    for (std::size_t r = 0; r < 3; ++r) {
        long t = static_cast<long>(3 * i + 2 + r);
        RadReal s = inv_sqrt(R(1) + R(t) * R(t));
        rows.push_back({rad_vec({s, RadReal(R(t)) * s}), rad_vec({RadReal(R(t)) * s, -s})});
    }
    return rect(3, 2, {2}, std::move(rows), "Ui(" + std::to_string(i) + ")");
}

RowQLR menu24_rect() {
    StateVector p = real_vec({R(3, 5), R(4, 5)});
    StateVector q = real_vec({R(-4, 5), R(3, 5)});
    return rect(3, 2, {2},
                {{StateVector::basis(0, 2), StateVector::basis(1, 2)}, {p, q}, {p, q}},
                "Menu24Factor");
}

QuantumLatinSquare product_construct(const RowQLR& u, const RowQLR& v) {
    std::size_t m = u.rows, n = u.cols;
    if (v.rows != n || v.cols != m)
        throw DimensionMismatch("product factors must be m x n and n x m");
    for (const auto& row : u.cells)
        for (const auto& c : row)
            if (c.dim() != n) throw DimensionMismatch("left factor cells must have dim = its cols");
    for (const auto& row : v.cells)
        for (const auto& c : row)
            if (c.dim() != m) throw DimensionMismatch("right factor cells must have dim = its cols");
    if (!verify_rows(u).ok() || !verify_rows(v).ok())
        throw Error("internal_error", "product factor is not row-orthonormal");

    QuantumLatinSquare q;
    q.order = m * n;
    q.space = u.space;
    q.space.insert(q.space.end(), v.space.begin(), v.space.end());
    q.cells.assign(q.order, std::vector<StateVector>(q.order));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    q.cells[i * n + k][j * m + l] =
                        u.cells[i][(j + k) % n].tensor(v.cells[j][(i + l) % m]);
    q.meta.name = "Product(" + u.meta.name + "," + v.meta.name + ")";
    inherit_repair(q.meta, u.meta);
    inherit_repair(q.meta, v.meta);
    return q;
}

namespace {

// The assembled order-4 squares are built blockwise: block (p,q) holds
// u_{k,(p+q+1) mod 2} (x) v_{q,(k+l+1) mod 2} at cell (k,l), where v comes
// from v1 everywhere (first mixture) or from v2 in the left block column
// (second mixture). This reproduces the published sub-blocks cell for cell.
QuantumLatinSquare assembled_x(bool second_mixture) {
    RowQLR u = u_rect(), v1 = v1_rect(), v2 = v2_rect();
    QuantumLatinSquare q;
    q.order = 4;
    q.space = {2, 2};
    q.cells.assign(4, std::vector<StateVector>(4));
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t qq = 0; qq < 2; ++qq) {
            const RowQLR& v = (second_mixture && qq == 0) ? v2 : v1;
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    q.cells[2 * p + k][2 * qq + l] =
                        u.cells[k][(p + qq + 1) % 2].tensor(v.cells[qq][(k + l + 1) % 2]);
        }
    q.meta.name = second_mixture ? "Xpp" : "Xp";
    return q;
}

} // namespace

QuantumLatinSquare xp_square() { return assembled_x(false); }
QuantumLatinSquare xpp_square() { return assembled_x(true); }

NamedMatrix smat() {
    Amplitude w = Amplitude::omega();
    Amplitude w2 = w * w;
    NamedMatrix s;
    s.rows = s.cols = 4;
    s.entries = {
        {ra(R(1)), ra(R(0)), ra(R(0)), ra(R(0))},
        {ra(R(0)), ra(R(1, 3)), ra(R(-2, 3)), ra(R(2, 3))},
        {ra(R(0)), ra(R(2, 3)) * w, ra(R(-1, 3)) * w, ra(R(-2, 3)) * w},
        {ra(R(0)), ra(R(2, 3)) * w2, ra(R(2, 3)) * w2, ra(R(1, 3)) * w2},
    };
    s.meta.name = "S";
    s.meta.repaired = true;
    for (std::size_t r = 1; r < 4; ++r)
        for (std::size_t c = 1; c < 4; ++c) s.meta.repaired_entries.push_back({r, c});
    return s;
}

NamedMatrix smat_unrepaired() {
    Amplitude w = Amplitude::omega();
    Amplitude w2 = w * w;
    Amplitude s3(inv_sqrt(R(3)));
    NamedMatrix s;
    s.rows = s.cols = 4;
    s.entries = {
        {ra(R(1)), ra(R(0)), ra(R(0)), ra(R(0))},
        {ra(R(0)), s3, ra(R(-2)) * s3, ra(R(2)) * s3},
        {ra(R(0)), ra(R(2)) * s3, -s3 * w, ra(R(-2)) * s3 * w2},
        {ra(R(0)), ra(R(2)) * s3, ra(R(2)) * s3 * w2, s3 * w},
    };
    s.meta.name = "S_unrepaired";
    return s;
}

std::array<StateVector, 4> alpha_basis() {
    NamedMatrix s = smat();
    return {matrix_column(s, 0), matrix_column(s, 1), matrix_column(s, 2), matrix_column(s, 3)};
}

QuantumLatinSquare alpha_qls4(bool mixed) {
    auto alpha = alpha_basis();
    QuantumLatinSquare q;
    q.order = 4;
    q.space = {2, 2};
    q.meta.repaired = true;
    q.meta.repaired_components = {"S"};
    if (!mixed) {
        q.meta.name = "AlphaQLS4(cyclic)";
        q.cells.assign(4, std::vector<StateVector>());
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) q.cells[r].push_back(alpha[(r + c) % 4]);
        return q;
    }
    Amplitude rt(inv_sqrt(R(2)));
    StateVector m34p = (alpha[2] + alpha[3]).scaled(rt);
    StateVector m34m = (alpha[2] - alpha[3]).scaled(rt);
    StateVector m12p = (alpha[0] + alpha[1]).scaled(rt);
    StateVector m12m = (alpha[0] - alpha[1]).scaled(rt);
    q.meta.name = "AlphaQLS4(mixed)";
    q.meta.repaired_entries = {{3, 0}, {3, 1}};
    q.cells = {
        {alpha[0], alpha[1], alpha[2], alpha[3]},
        {alpha[1], alpha[0], alpha[3], alpha[2]},
        {m34p, m34m, m12p, m12m},
        {m34m, m34p, m12m, m12p},
    };
    return q;
}

StateVector embed_4_to_6(const StateVector& v) {
    if (v.dim() != 4) throw DimensionMismatch("embedding expects dim-4 input");
    static const std::size_t idx[4] = {0, 1, 3, 4};
    StateVector out(6);
    for (std::size_t i = 0; i < 4; ++i) out[idx[i]] = v[i];
    return out;
}

namespace {

Grid embed_square(const QuantumLatinSquare& q4) {
    Grid g;
    g.rows = g.cols = 4;
    g.space = {2, 3};
    g.cells.assign(4, std::vector<StateVector>());
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) g.cells[r].push_back(embed_4_to_6(q4.cells[r][c]));
    g.meta = q4.meta;
    return g;
}

Grid tile_2x2(const Grid& a, const Grid& b, const Grid& c, const Grid& d, std::string name) {
    Grid g;
    g.rows = g.cols = 4;
    g.space = {2, 3};
    g.cells.assign(4, std::vector<StateVector>());
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t cc = 0; cc < 2; ++cc) g.cells[r].push_back(a.cells[r][cc]);
        for (std::size_t cc = 0; cc < 2; ++cc) g.cells[r].push_back(b.cells[r][cc]);
        for (std::size_t cc = 0; cc < 2; ++cc) g.cells[r + 2].push_back(c.cells[r][cc]);
        for (std::size_t cc = 0; cc < 2; ++cc) g.cells[r + 2].push_back(d.cells[r][cc]);
    }
    g.meta.name = std::move(name);
    for (const Grid* part : {&a, &b, &c, &d}) inherit_repair(g.meta, part->meta);
    return g;
}

} // namespace

Grid qls4(int c, Qls4Variant variant) {
    auto A = [&](long a) { return block_family(BlockName::A, R(a)); };
    auto B = [&](long a) { return block_family(BlockName::B, R(a)); };
    switch (c) {
        case 4: return tile_2x2(A(0), B(0), B(0), A(0), "QLS4(4)");
        case 6: return tile_2x2(A(2), B(0), B(0), A(0), "QLS4(6)");
        case 8: return tile_2x2(A(2), B(2), B(3), A(3), "QLS4(8)");
        case 16:
            return embed_square(variant == Qls4Variant::Xp ? xp_square() : xpp_square());
        default:
            throw BadParams("no order-4 grid with cardinality " + std::to_string(c));
    }
}

Grid qls4_alpha(bool mixed) { return embed_square(alpha_qls4(mixed)); }

QuantumLatinSquare gen_l(const Rational& a, const Rational& b, const Rational& d,
                         const Grid& x) {
    if (x.rows != 4 || x.cols != 4) throw DimensionMismatch("layout expects a 4x4 grid");
    Grid x00 = subgrid(x, 0, 0, 2, 2), x01 = subgrid(x, 0, 2, 2, 2);
    Grid x10 = subgrid(x, 2, 0, 2, 2), x11 = subgrid(x, 2, 2, 2, 2);
    Grid ca = block_family(BlockName::C, a);
    Grid cb = block_family(BlockName::C, b);
    Grid cd = block_family(BlockName::C, d);

    // The cardinality formula card(x) + 2|{a,b,d}| needs the C-family classes
    // to be disjoint from the grid's classes.
    std::vector<StateVector> c_cells = ca.flat_cells();
    for (const auto& v : cb.flat_cells()) c_cells.push_back(v);
    for (const auto& v : cd.flat_cells()) c_cells.push_back(v);
    if (set_relations(Census::of(c_cells), Census::of(x.flat_cells())).common != 0)
        throw DisjointnessViolation("C-family classes overlap the inner grid's classes");

    QuantumLatinSquare q = tile({{ca, x00, x01}, {x10, cb, x11}, {x00, x10, cd}}, {2, 3},
                                "L(" + a.str() + "," + b.str() + "," + d.str() + ";" +
                                    x.meta.name + ")");
    return q;
}

QuantumLatinSquare gen_w_abd(const Rational& a, const Rational& b, const Rational& d) {
    Grid xp = embed_square(xp_square());
    Grid xpp = embed_square(xpp_square());
    Grid p00 = subgrid(xp, 0, 0, 2, 2), p01 = subgrid(xp, 0, 2, 2, 2);
    Grid p10 = subgrid(xp, 2, 0, 2, 2), p11 = subgrid(xp, 2, 2, 2, 2);
    Grid d00 = subgrid(xpp, 0, 0, 2, 2), d10 = subgrid(xpp, 2, 0, 2, 2);
    Grid ca = block_family(BlockName::C, a);
    Grid cb = block_family(BlockName::C, b);
    Grid cd = block_family(BlockName::C, d);
    return tile({{ca, p00, p01}, {d10, cb, p11}, {d00, p10, cd}}, {2, 3},
                "Wabd(" + a.str() + "," + b.str() + "," + d.str() + ")");
}

QuantumLatinSquare w3() {
    Grid d0 = block_family(BlockName::D, R(0));
    Grid e0 = block_family(BlockName::E, R(0));
    return tile({{d0, e0}, {e0, f1()}}, {2, 3}, "W3");
}

QuantumLatinSquare w4() {
    Grid d0 = block_family(BlockName::D, R(0));
    Grid e0 = block_family(BlockName::E, R(0));
    Grid d1 = block_family(BlockName::D, R(1));
    return tile({{d0, e0}, {g1(), d1}}, {2, 3}, "W4");
}

QuantumLatinSquare w5() {
    auto A = [&](long a) { return block_family(BlockName::A, R(a)); };
    auto B = [&](long a) { return block_family(BlockName::B, R(a)); };
    auto C = [&](long a) { return block_family(BlockName::C, R(a)); };
    return tile({{A(0), B(0), C(0)}, {C(1), A(0), B(1)}, {B(2), C(2), A(1)}}, {2, 3}, "W5");
}

QuantumLatinSquare h0() {
    auto A = block_family(BlockName::A, kZero);
    auto B = block_family(BlockName::B, kZero);
    auto C = block_family(BlockName::C, kZero);
    return tile({{A, B, C}, {B, C, A}, {C, A, B}}, {2, 3}, "H0");
}

QuantumLatinSquare h1() {
    auto A = [&](long a) { return block_family(BlockName::A, R(a)); };
    auto B = [&](long a) { return block_family(BlockName::B, R(a)); };
    auto C = [&](long a) { return block_family(BlockName::C, R(a)); };
    return tile({{A(0), B(0), C(0)}, {C(0), A(1), B(0)}, {B(1), C(1), A(2)}}, {2, 3}, "H1");
}

namespace {

const Rational kThird = Rational(1, 3);
const Rational kTwoThird = Rational(2, 3);

NamedMatrix real_matrix(std::size_t n, std::initializer_list<std::initializer_list<Rational>> rows,
                        std::string name) {
    NamedMatrix m;
    m.rows = m.cols = n;
    for (const auto& row : rows) {
        std::vector<Amplitude> r;
        for (const auto& q : row) r.emplace_back(q);
        m.entries.push_back(std::move(r));
    }
    m.meta.name = std::move(name);
    return m;
}

} // namespace

NamedMatrix xmat(int k) {
    auto q = [](long n, long d) { return Rational(n, d); };
    auto z = Rational(0);
    switch (k) {
        case 1:
            return real_matrix(6,
                {{z, z, z, q(2,3), q(2,3), q(1,3)},
                 {z, z, z, q(1,3), q(-2,3), q(2,3)},
                 {z, z, z, q(-2,3), q(1,3), q(2,3)},
                 {z, z, Rational(1), z, z, z},
                 {Rational(1), z, z, z, z, z},
                 {z, Rational(1), z, z, z, z}}, "X1");
        case 2:
            return real_matrix(6,
                {{z, z, Rational(1), z, z, z},
                 {Rational(1), z, z, z, z, z},
                 {z, Rational(1), z, z, z, z},
                 {z, z, z, q(2,3), q(2,3), q(1,3)},
                 {z, z, z, q(1,3), q(-2,3), q(2,3)},
                 {z, z, z, q(-2,3), q(1,3), q(2,3)}}, "X2");
        case 3:
            return real_matrix(6,
                {{z, q(4,5), z, q(2,5), q(1,5), q(2,5)},
                 {z, z, q(4,5), q(-2,5), q(2,5), q(1,5)},
                 {q(4,5), z, z, q(1,5), q(2,5), q(-2,5)},
                 {z, q(-3,5), z, q(8,15), q(4,15), q(8,15)},
                 {z, z, q(-3,5), q(-8,15), q(8,15), q(4,15)},
                 {q(-3,5), z, z, q(4,15), q(8,15), q(-8,15)}}, "X3");
        case 4:
            return real_matrix(6,
                {{z, q(3,5), z, q(8,15), q(4,15), q(8,15)},
                 {z, z, q(3,5), q(-8,15), q(8,15), q(4,15)},
                 {q(3,5), z, z, q(4,15), q(8,15), q(-8,15)},
                 {z, q(4,5), z, q(-2,5), q(-1,5), q(-2,5)},
                 {z, z, q(4,5), q(2,5), q(-2,5), q(-1,5)},
                 {q(4,5), z, z, q(-1,5), q(-2,5), q(2,5)}}, "X4");
        case 5:
            return real_matrix(6,
                {{q(3,5), z, z, q(4,15), q(8,15), q(8,15)},
                 {z, q(3,5), z, q(8,15), q(4,15), q(-8,15)},
                 {z, z, q(3,5), q(8,15), q(-8,15), q(4,15)},
                 {q(-4,5), z, z, q(1,5), q(2,5), q(2,5)},
                 {z, q(-4,5), z, q(2,5), q(1,5), q(-2,5)},
                 {z, z, q(-4,5), q(2,5), q(-2,5), q(1,5)}}, "X5");
        case 6:
            return real_matrix(6,
                {{q(4,5), z, z, q(1,5), q(2,5), q(2,5)},
                 {z, q(4,5), z, q(2,5), q(1,5), q(-2,5)},
                 {z, z, q(4,5), q(2,5), q(-2,5), q(1,5)},
                 {q(3,5), z, z, q(-4,15), q(-8,15), q(-8,15)},
                 {z, q(3,5), z, q(-8,15), q(-4,15), q(8,15)},
                 {z, z, q(3,5), q(-8,15), q(8,15), q(-4,15)}}, "X6");
        default:
            throw BadParams("matrix index out of range: " + std::to_string(k));
    }
}

NamedMatrix jmat(int k) {
    auto q = [](long n, long d) { return Rational(n, d); };
    auto z = Rational(0);
    auto one = Rational(1);
    switch (k) {
        case 1:
            return real_matrix(6,
                {{one, z, z, z, z, z},
                 {z, q(2,3), q(-2,3), q(1,3), z, z},
                 {z, q(1,3), q(2,3), q(2,3), z, z},
                 {z, q(2,3), q(1,3), q(-2,3), z, z},
                 {z, z, z, z, q(3,5), q(-4,5)},
                 {z, z, z, z, q(4,5), q(3,5)}}, "J1");
        case 2:
            return real_matrix(6,
                {{one, z, z, z, z, z},
                 {z, one, z, z, z, z},
                 {z, z, q(1,2), q(1,2), q(1,2), q(1,2)},
                 {z, z, q(1,2), q(-1,2), q(1,2), q(-1,2)},
                 {z, z, q(1,2), q(1,2), q(-1,2), q(-1,2)},
                 {z, z, q(1,2), q(-1,2), q(-1,2), q(1,2)}}, "J2");
        case 3: {
            NamedMatrix m = real_matrix(6,
                {{one, z, z, z, z, z},
                 {z, one, z, z, z, z},
                 {z, z, one, z, z, z},
                 {z, z, z, q(2,3), q(-2,3), q(1,3)},
                 {z, z, z, q(1,3), q(2,3), q(2,3)},
                 {z, z, z, q(2,3), q(1,3), q(-2,3)}}, "J3");
            m.meta.repaired = true;
            m.meta.repaired_entries = {{3, 5}, {5, 5}};
            return m;
        }
        case 4:
            return real_matrix(6,
                {{one, z, z, z, z, z},
                 {z, q(2,3), q(-2,3), q(1,3), z, z},
                 {z, q(1,3), q(2,3), q(2,3), z, z},
                 {z, q(2,3), q(1,3), q(-2,3), z, z},
                 {z, z, z, z, q(-4,5), q(3,5)},
                 {z, z, z, z, q(3,5), q(4,5)}}, "J4");
        default:
            throw BadParams("matrix index out of range: " + std::to_string(k));
    }
}

NamedMatrix jmat3_unrepaired() {
    auto q = [](long n, long d) { return Rational(n, d); };
    auto z = Rational(0);
    auto one = Rational(1);
    return real_matrix(6,
        {{one, z, z, z, z, z},
         {z, one, z, z, z, z},
         {z, z, one, z, z, z},
         {z, z, z, q(2,3), q(-2,3), q(1,6)},
         {z, z, z, q(1,3), q(2,3), q(2,3)},
         {z, z, z, q(2,3), q(1,3), q(-2,5)}}, "J3_unrepaired");
}

QuantumLatinSquare w0() {
    QuantumLatinSquare q;
    q.order = 6;
    q.space = {2, 3};
    q.meta.name = "W0";
    q.cells.assign(6, std::vector<StateVector>());
    for (int i = 1; i <= 6; ++i) {
        NamedMatrix x = xmat(i);
        for (std::size_t j = 0; j < 6; ++j) q.cells[i - 1].push_back(matrix_column(x, j));
    }
    return q;
}

QuantumLatinSquare mk(int k) {
    if (k < 1 || k > 4) throw BadParams("conjugated-square index out of range");
    NamedMatrix x1 = xmat(1);
    NamedMatrix p = matrix_multiply(matrix_multiply(x1, jmat(k)), matrix_transpose(x1));
    QuantumLatinSquare q;
    q.order = 6;
    q.space = {2, 3};
    q.meta.name = "M" + std::to_string(k);
    if (k == 3) {
        q.meta.repaired = true;
        q.meta.repaired_components = {"J3"};
    }
    q.cells.assign(6, std::vector<StateVector>());
    for (int i = 1; i <= 6; ++i) {
        NamedMatrix prod = matrix_multiply(p, xmat(i));
        for (std::size_t j = 0; j < 6; ++j) q.cells[i - 1].push_back(matrix_column(prod, j));
    }
    return q;
}

QuantumLatinSquare wtilde(std::size_t i) {
    QuantumLatinSquare q = product_construct(ui_rect(i), v0_rect());
    q.meta.name = "Wtilde(" + std::to_string(i) + ")";
    return q;
}

QuantumLatinSquare hell(int ell) {
    auto l_params = [&](int rank) -> std::array<Rational, 3> {
        switch (rank) {
            case 0: return {R(0), R(0), R(0)};
            case 1: return {R(2), R(0), R(0)};
            case 2: return {R(2), R(3), R(0)};
            default: return {R(2), R(3), R(4)};
        }
    };
    auto make_l = [&](int rank, const Grid& x) {
        auto p = l_params(rank);
        return gen_l(p[0], p[1], p[2], x);
    };
    Grid x1 = tile_2x2(block_family(BlockName::A, R(3)), block_family(BlockName::B, R(2)),
                       block_family(BlockName::B, R(3)), block_family(BlockName::A, R(4)),
                       "QLS4(8;3,2,3,4)");
    QuantumLatinSquare q;
    switch (ell) {
        case 2: q = make_l(1, qls4(4)); break;
        case 4: q = make_l(2, qls4(4)); break;
        case 6: q = make_l(3, qls4(4)); break;
        case 3: q = make_l(0, qls4_alpha(false)); break;
        case 5: q = make_l(1, qls4_alpha(false)); break;
        case 7: q = make_l(2, qls4_alpha(false)); break;
        case 9: q = make_l(3, qls4_alpha(false)); break;
        case 8: q = make_l(0, x1); break;
        case 10: q = make_l(1, x1); break;
        case 12: q = make_l(2, x1); break;
        case 14: q = make_l(3, x1); break;
        case 11: q = make_l(2, qls4_alpha(true)); break;
        case 13: q = make_l(3, qls4_alpha(true)); break;
        case 16: q = make_l(0, qls4(16, Qls4Variant::Xpp)); break;
        case 18: q = make_l(1, qls4(16, Qls4Variant::Xpp)); break;
        case 20: q = make_l(2, qls4(16, Qls4Variant::Xpp)); break;
        case 22: q = make_l(3, qls4(16, Qls4Variant::Xpp)); break;
        case 24: q = gen_w_abd(R(2), R(3), R(0)); break;
        case 26: q = gen_w_abd(R(2), R(3), R(4)); break;
        case 36: q = wtilde(0); break;
        default:
            throw BadParams("no ledger square for value " + std::to_string(ell));
    }
    q.meta.name = "Hell(" + std::to_string(ell) + ")";
    return q;
}

QuantumLatinSquare hell_prime(int ell) {
    if (ell == 24 || ell == 26)
        throw BadParams("no ledger square for value " + std::to_string(ell) +
                        " relative to the maximal fixed square");
    QuantumLatinSquare q = hell(ell);
    q.meta.name = "HellPrime(" + std::to_string(ell) + ")";
    return q;
}

const std::vector<int>& hell_values() {
    static const std::vector<int> v = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14,
                                       16, 18, 20, 22, 24, 26, 36};
    return v;
}

const std::vector<int>& hell_prime_values() {
    static const std::vector<int> v = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14,
                                       16, 18, 20, 22, 36};
    return v;
}

QuantumLatinSquare qls6_with_cardinality(int c) {
    switch (c) {
        case 6: return h0();
        case 8: return gen_l(R(2), R(0), R(0), qls4(4));
        case 9: return w3();
        case 10: return gen_l(R(2), R(3), R(0), qls4(4));
        case 11: return w4();
        case 12: return gen_l(R(2), R(0), R(0), qls4(8));
        case 14: return gen_l(R(2), R(3), R(0), qls4(8));
        case 16: return w5();
        case 18: return gen_l(R(0), R(0), R(0), qls4(16, Qls4Variant::Xpp));
        case 20: return gen_l(R(2), R(0), R(0), qls4(16, Qls4Variant::Xpp));
        case 22: return gen_l(R(2), R(3), R(0), qls4(16, Qls4Variant::Xpp));
        case 24: {
            QuantumLatinSquare q = product_construct(menu24_rect(), v0_rect());
            q.meta.name = "Menu24";
            return q;
        }
        case 26: return gen_w_abd(R(0), R(0), R(0));
        case 28: return gen_w_abd(R(2), R(0), R(0));
        case 30: return gen_w_abd(R(2), R(3), R(0));
        case 36: return w0();
        default:
            throw BadParams("no order-6 catalog square with cardinality " + std::to_string(c));
    }
}

const std::vector<int>& qls6_menu() {
    static const std::vector<int> v = {6, 8, 9, 10, 11, 12, 14, 16,
                                       18, 20, 22, 24, 26, 28, 30, 36};
    return v;
}

QuantumLatinSquare assemble_blocks(
    std::size_t m, const std::vector<std::vector<QuantumLatinSquare>>& blocks) {
    if (blocks.size() != m) throw DimensionMismatch("block grid must be m x m");
    QuantumLatinSquare q;
    q.order = 6 * m;
    q.space = {m, 2, 3};
    q.cells.assign(q.order, std::vector<StateVector>(q.order));
    for (std::size_t i = 0; i < m; ++i) {
        if (blocks[i].size() != m) throw DimensionMismatch("block grid must be m x m");
        for (std::size_t j = 0; j < m; ++j) {
            const QuantumLatinSquare& y = blocks[i][j];
            if (y.order != 6) throw DimensionMismatch("blocks must have order 6");
            std::size_t prefix = (j + m - i) % m;
            StateVector pv = StateVector::basis(prefix, m);
            for (std::size_t r = 0; r < 6; ++r)
                for (std::size_t c = 0; c < 6; ++c)
                    q.cells[6 * i + r][6 * j + c] = pv.tensor(y.cells[r][c]);
            inherit_repair(q.meta, y.meta);
        }
    }
    return q;
}

QuantumLatinSquare qls18_313() {
    QuantumLatinSquare W = w0();
    QuantumLatinSquare m1 = mk(1), m2 = mk(2), m3 = mk(3);
    QuantumLatinSquare wt5 = wtilde(5);
    QuantumLatinSquare q = assemble_blocks(3, {{W, W, W}, {m3, m2, m2}, {wt5, wt5, m1}});
    q.meta.name = "QLS18_313";
    return q;
}

} // namespace qls::catalog
