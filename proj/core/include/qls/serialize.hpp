#pragma once

#include "qls/builder.hpp"
#include "qls/catalog.hpp"
#include "qls/square.hpp"

#include <string>
#include <vector>

namespace qls::serialize {

/// All documents are JSON objects whose first field is "kind"
/// (qls, row_qlr, grid, matrix, plan, census, report, relations, table).
/// Serialization is canonical: fixed field order, 2-space indent, trailing
/// newline, integers as decimal strings inside exact values. parse(to_json(x))
/// reproduces x and re-serializing is byte-identical.

std::string to_json(const QuantumLatinSquare& q);
std::string to_json(const RowQLR& r);
std::string to_json(const catalog::Grid& g);
std::string to_json(const catalog::NamedMatrix& m);
std::string to_json(const builder::BlockPlan& p);
std::string to_json(const Census& c);
std::string to_json(const VerifyReport& r);
std::string to_json(const SetRelations& r);
std::string table_to_json(std::size_t m, const std::vector<builder::TableEntry>& entries);

/// "kind" of a serialized document (ParseError if malformed or missing).
std::string kind_of(const std::string& text);

QuantumLatinSquare square_from_json(const std::string& text);
RowQLR rect_from_json(const std::string& text);
catalog::Grid grid_from_json(const std::string& text);
catalog::NamedMatrix matrix_from_json(const std::string& text);
builder::BlockPlan plan_from_json(const std::string& text);

/// Cells of any cell-bearing document (qls, row_qlr, grid); for "matrix"
/// the columns are returned as vectors. Used by count/relations commands.
std::vector<StateVector> cells_from_json(const std::string& text);

} // namespace qls::serialize
