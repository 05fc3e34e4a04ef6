#pragma once

#include "qls/square.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qls::builder {

enum class Branch { Low, High, Explicit313 };

/// One block choice within a diagonal. y is the class-count contribution the
/// plan arithmetic assigns to it.
struct RowChoice {
    enum class Kind { H0, H1, W0, Hell, HellPrime, M, Wtilde, RepeatRow0 };
    Kind kind = Kind::H0;
    int param = 0; // ledger value for Hell/HellPrime, k for M, index for Wtilde
    int y = 0;
};

/// Choices for the m blocks sharing one prefix value: the block at grid
/// position (i, (i+j) mod m) for row i = 0..m-1.
struct DiagonalPlan {
    RowChoice row0;
    RowChoice row1;
    std::vector<RowChoice> rest; // rows 2..m-1
};

struct BlockPlan {
    std::size_t m = 0;
    long cardinality = 0;
    Branch branch = Branch::Low;
    long predicted_cardinality = 0;
    std::vector<DiagonalPlan> diagonals; // empty for Explicit313
};

/// Decides how to reach cardinality c at order 6m.
/// Throws ImpossibleCardinality for c = 6m+1, OutOfRange outside [6m, 36m^2],
/// UnsupportedOrder12Cardinality for the m = 2 values neither branch covers,
/// BadParams for m < 2, and NoDecomposition if no branch applies (must not
/// happen for m >= 3 within range).
BlockPlan plan(std::size_t m, long c);

/// Realizes a plan as an order-6m square in H_m (x) H_2 (x) H_3. Each
/// diagonal's class count is recomputed exactly and checked against the
/// plan's contribution (DisjointnessViolation on mismatch).
QuantumLatinSquare assemble(const BlockPlan& p, int threads = 1);

/// plan + assemble; self_check additionally runs full verification and the
/// total census (defaults on for 6m <= 36).
QuantumLatinSquare build(std::size_t m, long c,
                         std::optional<bool> self_check = std::nullopt,
                         int threads = 1);

struct TableEntry {
    long cardinality = 0;
    bool feasible = false;
    std::string error_code;         // set when infeasible
    std::optional<BlockPlan> plan;  // set when feasible
};

/// Planner outcome for every c in [6m, 36m^2], without assembling.
std::vector<TableEntry> feasibility_table(std::size_t m);

/// Per-diagonal y-value choices available to the planner.
const std::vector<int>& low_row1_values();
const std::vector<int>& high_row1_values();

} // namespace qls::builder
