#pragma once

#include <stdexcept>
#include <string>

namespace qls {

/// Base for all library errors; carries a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define QLS_DEFINE_ERROR(Name, code_str)                         \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& message)                \
            : Error(code_str, message) {}                        \
    }

QLS_DEFINE_ERROR(DivisionByZero, "division_by_zero");
QLS_DEFINE_ERROR(RadicandTooLarge, "radicand_too_large");
QLS_DEFINE_ERROR(TooManyRadicals, "too_many_radicals");
QLS_DEFINE_ERROR(DimensionMismatch, "dimension_mismatch");
QLS_DEFINE_ERROR(IndexOutOfRange, "index_out_of_range");
QLS_DEFINE_ERROR(ParseError, "parse_error");
QLS_DEFINE_ERROR(ImpossibleCardinality, "impossible_cardinality");
QLS_DEFINE_ERROR(OutOfRange, "out_of_range");
QLS_DEFINE_ERROR(UnsupportedOrder12Cardinality, "unsupported_order12_cardinality");
QLS_DEFINE_ERROR(NoDecomposition, "no_decomposition");
QLS_DEFINE_ERROR(DisjointnessViolation, "disjointness_violation");
QLS_DEFINE_ERROR(UnknownGenerator, "unknown_generator");
QLS_DEFINE_ERROR(BadParams, "bad_params");

#undef QLS_DEFINE_ERROR

} // namespace qls
