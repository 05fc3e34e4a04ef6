#include "qls/builder.hpp"

#include "qls/catalog.hpp"
#include "qls/errors.hpp"

#include <algorithm>
#include <string>

namespace qls::builder {

namespace {

// Reachable sums of k values drawn (with repetition) from vals, for k = 0..m.
// feasible[k][b] answers "can k slots sum to b".
std::vector<std::vector<bool>> sum_table(const std::vector<int>& vals, std::size_t m,
                                         long bmax) {
    std::vector<std::vector<bool>> feasible(m + 1, std::vector<bool>(bmax + 1, false));
    feasible[0][0] = true;
    for (std::size_t k = 1; k <= m; ++k)
        for (long b = 0; b <= bmax; ++b)
            for (int v : vals)
                if (v <= b && feasible[k - 1][b - v]) {
                    feasible[k][b] = true;
                    break;
                }
    return feasible;
}

// Greedy largest-first split of b into exactly m values from vals, guided by
// the sum table so the greedy choice never dead-ends. Returns descending
// terms; empty result means infeasible.
std::vector<int> decompose(const std::vector<int>& vals, std::size_t m, long b,
                           const std::vector<std::vector<bool>>& feasible) {
    if (b < 0 || b >= static_cast<long>(feasible[0].size()) || !feasible[m][b]) return {};
    std::vector<int> sorted = vals;
    std::sort(sorted.rbegin(), sorted.rend());
    std::vector<int> out;
    long rem = b;
    for (std::size_t k = m; k > 0; --k) {
        for (int v : sorted) {
            if (v <= rem && feasible[k - 1][rem - v]) {
                out.push_back(v);
                rem -= v;
                break;
            }
        }
    }
    if (rem != 0 || out.size() != m) return {}; // defensive; cannot happen
    return out;
}

RowChoice low_row1_choice(int y) {
    if (y == 0) return {RowChoice::Kind::H0, 0, 0};
    if (y == 36) return {RowChoice::Kind::Wtilde, 5, 36};
    return {RowChoice::Kind::Hell, y, y};
}

RowChoice high_row1_choice(int y) {
    switch (y) {
        case 0: return {RowChoice::Kind::W0, 0, 0};
        case 30: return {RowChoice::Kind::M, 3, 30};
        case 34: return {RowChoice::Kind::M, 2, 34};
        case 35: return {RowChoice::Kind::M, 1, 35};
        case 36: return {RowChoice::Kind::Wtilde, 5, 36};
        default: return {RowChoice::Kind::HellPrime, y, y};
    }
}

std::optional<BlockPlan> try_low(std::size_t m, long c) {
    long base = 6 * static_cast<long>(m);
    long bmax = 36 * static_cast<long>(m) - 18;
    if (c > base + 8 * static_cast<long>(m) + bmax + 36 * static_cast<long>(m * (m - 2)))
        return std::nullopt;
    auto feasible = sum_table(low_row1_values(), m, bmax);
    long cmax = static_cast<long>(m * (m - 2));
    // Preference: as many 36-class repeat-free rows as possible, then as few
    // row-0 upgrades as possible; the remainder goes through row 1.
    for (long C = cmax; C >= 0; --C) {
        for (long A = 0; A <= static_cast<long>(m); ++A) {
            long B = c - base - 8 * A - 36 * C;
            if (B < 0 || B > bmax) continue;
            std::vector<int> terms = decompose(low_row1_values(), m, B, feasible);
            if (terms.empty() && B != 0) continue;
            if (B == 0) terms.assign(m, 0);

            BlockPlan p;
            p.m = m;
            p.cardinality = c;
            p.branch = Branch::Low;
            p.predicted_cardinality = c;
            long wrows = C;
            for (std::size_t j = 0; j < m; ++j) {
                DiagonalPlan d;
                bool upgraded = static_cast<long>(j) < A;
                d.row0 = {upgraded ? RowChoice::Kind::H1 : RowChoice::Kind::H0, 0,
                          upgraded ? 8 : 0};
                d.row1 = low_row1_choice(terms[j]);
                long take = std::min<long>(wrows, static_cast<long>(m) - 2);
                wrows -= take;
                for (std::size_t i = 2; i < m; ++i) {
                    if (static_cast<long>(i) - 2 < take)
                        d.rest.push_back({RowChoice::Kind::Wtilde, static_cast<int>(i + 4), 36});
                    else
                        d.rest.push_back({RowChoice::Kind::RepeatRow0, 0, 0});
                }
                p.diagonals.push_back(std::move(d));
            }
            return p;
        }
    }
    return std::nullopt;
}

std::optional<BlockPlan> try_high(std::size_t m, long c) {
    long high_base = 36 * static_cast<long>(m) * static_cast<long>(m - 1);
    if (c < high_base) return std::nullopt;
    long bprime = c - high_base;
    long bmax = 36 * static_cast<long>(m);
    if (bprime > bmax) return std::nullopt;
    auto feasible = sum_table(high_row1_values(), m, bmax);
    std::vector<int> terms = decompose(high_row1_values(), m, bprime, feasible);
    if (terms.empty() && bprime != 0) return std::nullopt;
    if (bprime == 0) terms.assign(m, 0);

    BlockPlan p;
    p.m = m;
    p.cardinality = c;
    p.branch = Branch::High;
    p.predicted_cardinality = c;
    for (std::size_t j = 0; j < m; ++j) {
        DiagonalPlan d;
        d.row0 = {RowChoice::Kind::W0, 0, 0};
        d.row1 = high_row1_choice(terms[j]);
        for (std::size_t i = 2; i < m; ++i)
            d.rest.push_back({RowChoice::Kind::Wtilde, static_cast<int>(i + 4), 36});
        p.diagonals.push_back(std::move(d));
    }
    return p;
}

QuantumLatinSquare realize(const RowChoice& ch, const QuantumLatinSquare& row0_square) {
    using K = RowChoice::Kind;
    switch (ch.kind) {
        case K::H0: return catalog::h0();
        case K::H1: return catalog::h1();
        case K::W0: return catalog::w0();
        case K::Hell: return catalog::hell(ch.param);
        case K::HellPrime: return catalog::hell_prime(ch.param);
        case K::M: return catalog::mk(ch.param);
        case K::Wtilde: return catalog::wtilde(static_cast<std::size_t>(ch.param));
        case K::RepeatRow0: return row0_square;
    }
    throw BadParams("unknown row choice");
}

long diagonal_contribution(const BlockPlan& p, const DiagonalPlan& d) {
    long base = (p.branch == Branch::High) ? 36 : 6;
    long total = base + d.row0.y + d.row1.y;
    for (const auto& ch : d.rest) total += ch.y;
    return total;
}

} // namespace

const std::vector<int>& low_row1_values() {
    static const std::vector<int> v = {0, 2,  3,  4,  5,  6,  7,  8,  9,  10, 11,
                                       12, 13, 14, 16, 18, 20, 22, 24, 26, 36};
    return v;
}

const std::vector<int>& high_row1_values() {
    static const std::vector<int> v = {0,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11,
                                       12, 13, 14, 16, 18, 20, 22, 30, 34, 35, 36};
    return v;
}

BlockPlan plan(std::size_t m, long c) {
    if (m < 2) throw BadParams("order parameter must be at least 2");
    long lo = 6 * static_cast<long>(m);
    long hi = 36 * static_cast<long>(m) * static_cast<long>(m);
    if (c == lo + 1)
        throw ImpossibleCardinality("no square of order " + std::to_string(6 * m) +
                                    " has cardinality " + std::to_string(c));
    if (c < lo || c > hi)
        throw OutOfRange("cardinality " + std::to_string(c) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");

    if (auto p = try_low(m, c)) return *p;

    if (m == 3 && c == 313) {
        BlockPlan p;
        p.m = 3;
        p.cardinality = 313;
        p.branch = Branch::Explicit313;
        p.predicted_cardinality = 313;
        return p;
    }
    if (auto p = try_high(m, c)) return *p;

    if (m == 2)
        throw UnsupportedOrder12Cardinality(
            "cardinality " + std::to_string(c) +
            " at order 12 is not reachable by either counting branch");
    throw NoDecomposition("no decomposition found for cardinality " + std::to_string(c));
}

QuantumLatinSquare assemble(const BlockPlan& p, int threads) {
    if (p.branch == Branch::Explicit313) {
        QuantumLatinSquare q = catalog::qls18_313();
        std::size_t got = census_of(q, threads).cardinality();
        if (got != static_cast<std::size_t>(p.predicted_cardinality))
            throw DisjointnessViolation("explicit order-18 square census " +
                                        std::to_string(got) + " != 313");
        return q;
    }

    std::size_t m = p.m;
    if (p.diagonals.size() != m) throw DimensionMismatch("plan diagonal count");
    std::vector<std::vector<QuantumLatinSquare>> blocks(
        m, std::vector<QuantumLatinSquare>(m));
    for (std::size_t j = 0; j < m; ++j) {
        const DiagonalPlan& d = p.diagonals[j];
        std::vector<QuantumLatinSquare> squares;
        squares.push_back(realize(d.row0, QuantumLatinSquare{}));
        squares.push_back(realize(d.row1, squares[0]));
        for (std::size_t i = 2; i < m; ++i)
            squares.push_back(realize(d.rest[i - 2], squares[0]));

        // The additivity argument needs this diagonal's blocks to contribute
        // exactly the planned number of classes; check it by exact census.
        std::vector<StateVector> all_cells;
        for (const auto& s : squares)
            for (const auto& v : s.flat_cells()) all_cells.push_back(v);
        long want = diagonal_contribution(p, d);
        std::size_t got = Census::of(all_cells, threads).cardinality();
        if (got != static_cast<std::size_t>(want))
            throw DisjointnessViolation("diagonal " + std::to_string(j) + " census " +
                                        std::to_string(got) + " != planned " +
                                        std::to_string(want));

        for (std::size_t i = 0; i < m; ++i) blocks[i][(i + j) % m] = std::move(squares[i]);
    }

    QuantumLatinSquare q = catalog::assemble_blocks(m, blocks);
    q.meta.name = "Build(m=" + std::to_string(m) +
                  ",c=" + std::to_string(p.cardinality) + ")";
    return q;
}

QuantumLatinSquare build(std::size_t m, long c, std::optional<bool> self_check,
                         int threads) {
    BlockPlan p = plan(m, c);
    QuantumLatinSquare q = assemble(p, threads);
    bool check = self_check.value_or(6 * m <= 36);
    if (check) {
        VerifyReport report = verify(q, threads);
        if (!report.ok())
            throw DisjointnessViolation("self-check: assembled square fails verification");
        if (report.cardinality != static_cast<std::size_t>(c))
            throw DisjointnessViolation("self-check: census " +
                                        std::to_string(report.cardinality) +
                                        " != requested " + std::to_string(c));
    }
    return q;
}

std::vector<TableEntry> feasibility_table(std::size_t m) {
    if (m < 2) throw BadParams("order parameter must be at least 2");
    std::vector<TableEntry> entries;
    long lo = 6 * static_cast<long>(m);
    long hi = 36 * static_cast<long>(m) * static_cast<long>(m);
    for (long c = lo; c <= hi; ++c) {
        TableEntry e;
        e.cardinality = c;
        try {
            e.plan = plan(m, c);
            e.feasible = true;
        } catch (const Error& err) {
            e.feasible = false;
            e.error_code = err.code();
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

} // namespace qls::builder
