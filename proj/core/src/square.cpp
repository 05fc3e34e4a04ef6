#include "qls/square.hpp"

#include "qls/errors.hpp"

#include <thread>

namespace qls {

std::vector<StateVector> QuantumLatinSquare::flat_cells() const {
    std::vector<StateVector> out;
    out.reserve(order * order);
    for (const auto& row : cells)
        for (const auto& c : row) out.push_back(c);
    return out;
}

std::vector<StateVector> RowQLR::flat_cells() const {
    std::vector<StateVector> out;
    out.reserve(rows * cols);
    for (const auto& row : cells)
        for (const auto& c : row) out.push_back(c);
    return out;
}

namespace {

const RadReal kOne{Rational(1)};

// Checks one line (row or column) of a square: unit norms are reported by the
// caller; here only pairwise orthogonality.
void check_line(const std::vector<const StateVector*>& line, bool in_row,
                std::size_t index, std::vector<OrthFailure>& out) {
    for (std::size_t a = 0; a < line.size(); ++a) {
        for (std::size_t b = a + 1; b < line.size(); ++b) {
            Amplitude ip = line[a]->inner(*line[b]);
            if (!ip.is_zero()) out.push_back({in_row, index, a, b, ip});
        }
    }
}

} // namespace

VerifyReport verify(const QuantumLatinSquare& q, int threads) {
    VerifyReport rep;

    if (q.cells.size() != q.order)
        rep.shape_failures.push_back("row count != order");
    for (std::size_t i = 0; i < q.cells.size(); ++i)
        if (q.cells[i].size() != q.order)
            rep.shape_failures.push_back("row " + std::to_string(i) + " length != order");
    if (!rep.shape_failures.empty()) return rep;

    std::size_t dim = q.order ? q.cells[0][0].dim() : 0;
    for (std::size_t i = 0; i < q.order; ++i)
        for (std::size_t j = 0; j < q.order; ++j)
            if (q.cells[i][j].dim() != dim)
                rep.shape_failures.push_back("cell (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") dimension differs");
    if (!rep.shape_failures.empty()) return rep;

    for (std::size_t i = 0; i < q.order; ++i)
        for (std::size_t j = 0; j < q.order; ++j) {
            RadReal n = q.cells[i][j].norm_sq();
            if (n != kOne) rep.norm_failures.push_back({i, j, n});
        }

    // 2*order independent line checks, parallelized deterministically: each
    // line gets its own failure list, merged in fixed order.
    std::size_t n_lines = 2 * q.order;
    std::vector<std::vector<OrthFailure>> per_line(n_lines);
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t li = lo; li < hi; ++li) {
            std::vector<const StateVector*> line(q.order);
            if (li < q.order) {
                for (std::size_t j = 0; j < q.order; ++j) line[j] = &q.cells[li][j];
                check_line(line, true, li, per_line[li]);
            } else {
                std::size_t col = li - q.order;
                for (std::size_t i = 0; i < q.order; ++i) line[i] = &q.cells[i][col];
                check_line(line, false, col, per_line[li]);
            }
        }
    };
    std::size_t t = std::max(1, threads);
    t = std::min(t, n_lines == 0 ? std::size_t(1) : n_lines);
    if (t <= 1) {
        work(0, n_lines);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (n_lines + t - 1) / t;
        for (std::size_t w = 0; w < t; ++w) {
            std::size_t lo = w * chunk, hi = std::min(n_lines, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    for (auto& lst : per_line)
        rep.orth_failures.insert(rep.orth_failures.end(), lst.begin(), lst.end());

    rep.cardinality = Census::of(q.flat_cells(), threads).cardinality();
    return rep;
}

VerifyReport verify_rows(const RowQLR& r) {
    VerifyReport rep;
    if (r.cells.size() != r.rows)
        rep.shape_failures.push_back("row count mismatch");
    for (const auto& row : r.cells)
        if (row.size() != r.cols) rep.shape_failures.push_back("column count mismatch");
    if (!rep.shape_failures.empty()) return rep;

    for (std::size_t i = 0; i < r.rows; ++i)
        for (std::size_t j = 0; j < r.cols; ++j) {
            RadReal n = r.cells[i][j].norm_sq();
            if (n != kOne) rep.norm_failures.push_back({i, j, n});
        }
    for (std::size_t i = 0; i < r.rows; ++i) {
        std::vector<const StateVector*> line(r.cols);
        for (std::size_t j = 0; j < r.cols; ++j) line[j] = &r.cells[i][j];
        check_line(line, true, i, rep.orth_failures);
    }
    rep.cardinality = Census::of(r.flat_cells()).cardinality();
    return rep;
}

Census census_of(const QuantumLatinSquare& q, int threads) {
    return Census::of(q.flat_cells(), threads);
}

} // namespace qls
