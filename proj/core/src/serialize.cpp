#include "qls/serialize.hpp"

#include "qls/errors.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace qls::serialize {

namespace {

using ojson = nlohmann::ordered_json;

// ---- writing ----

ojson rad_to(const RadReal& r) {
    ojson out = ojson::array();
    for (const auto& [d, coeff] : r.terms())
        out.push_back(ojson::array(
            {std::to_string(d), coeff.num_string(), coeff.den_string()}));
    return out;
}

ojson amp_to(const Amplitude& a) {
    ojson out = ojson::object();
    out["re"] = rad_to(a.re());
    out["im"] = rad_to(a.im());
    return out;
}

ojson vec_to(const StateVector& v) {
    ojson out = ojson::array();
    for (const auto& a : v.amps()) out.push_back(amp_to(a));
    return out;
}

ojson cell_rows_to(const std::vector<std::vector<StateVector>>& rows) {
    ojson out = ojson::array();
    for (const auto& row : rows) {
        ojson jrow = ojson::array();
        for (const auto& v : row) jrow.push_back(vec_to(v));
        out.push_back(std::move(jrow));
    }
    return out;
}

ojson space_to(const std::vector<std::size_t>& space) {
    ojson out = ojson::array();
    for (auto d : space) out.push_back(d);
    return out;
}

void meta_to(ojson& obj, const ObjectMeta& meta) {
    if (!meta.name.empty()) obj["name"] = meta.name;
    if (meta.repaired) obj["repaired"] = true;
    if (!meta.repaired_entries.empty()) {
        ojson entries = ojson::array();
        for (const auto& [r, c] : meta.repaired_entries)
            entries.push_back(ojson::array({r, c}));
        obj["repaired_entries"] = std::move(entries);
    }
    if (!meta.repaired_components.empty()) obj["repaired_components"] = meta.repaired_components;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

// ---- reading ----

ojson parse_text(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const ojson& field(const ojson& obj, const char* name) {
    if (!obj.is_object() || !obj.contains(name))
        throw ParseError(std::string("missing field: ") + name);
    return obj.at(name);
}

std::size_t size_field(const ojson& obj, const char* name) {
    const ojson& f = field(obj, name);
    if (!f.is_number_unsigned()) throw ParseError(std::string("bad integer field: ") + name);
    return f.get<std::size_t>();
}

long long_field(const ojson& obj, const char* name) {
    const ojson& f = field(obj, name);
    if (!f.is_number_integer()) throw ParseError(std::string("bad integer field: ") + name);
    return f.get<long>();
}

std::string string_field(const ojson& obj, const char* name) {
    const ojson& f = field(obj, name);
    if (!f.is_string()) throw ParseError(std::string("bad string field: ") + name);
    return f.get<std::string>();
}

RadReal rad_from(const ojson& j) {
    if (!j.is_array()) throw ParseError("exact value must be a list of [d, p, q] triples");
    RadReal out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
            !t[2].is_string())
            throw ParseError("exact term must be three decimal strings [d, p, q]");
        const std::string d_str = t[0].get<std::string>();
        std::uint64_t d = 0;
        try {
            std::size_t pos = 0;
            d = std::stoull(d_str, &pos);
            if (pos != d_str.size()) throw std::invalid_argument(d_str);
        } catch (const std::exception&) {
            throw ParseError("bad radicand: " + d_str);
        }
        if (d == 0) throw ParseError("radicand must be positive");
        Rational coeff =
            Rational::parse(t[1].get<std::string>() + "/" + t[2].get<std::string>());
        out += RadReal::term(d, coeff);
    }
    return out;
}

Amplitude amp_from(const ojson& j) {
    return Amplitude(rad_from(field(j, "re")), rad_from(field(j, "im")));
}

StateVector vec_from(const ojson& j) {
    if (!j.is_array()) throw ParseError("state vector must be a list of amplitudes");
    std::vector<Amplitude> amps;
    for (const auto& a : j) amps.push_back(amp_from(a));
    return StateVector(std::move(amps));
}

std::vector<std::vector<StateVector>> cell_rows_from(const ojson& j) {
    if (!j.is_array()) throw ParseError("cells must be a list of rows");
    std::vector<std::vector<StateVector>> rows;
    for (const auto& jrow : j) {
        if (!jrow.is_array()) throw ParseError("cell row must be a list");
        std::vector<StateVector> row;
        for (const auto& v : jrow) row.push_back(vec_from(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::size_t> space_from(const ojson& j) {
    if (!j.is_array()) throw ParseError("space must be a list of dimensions");
    std::vector<std::size_t> out;
    for (const auto& d : j) {
        if (!d.is_number_unsigned()) throw ParseError("space entries must be nonnegative");
        out.push_back(d.get<std::size_t>());
    }
    return out;
}

ObjectMeta meta_from(const ojson& obj) {
    ObjectMeta meta;
    if (obj.contains("name")) meta.name = string_field(obj, "name");
    if (obj.contains("repaired")) {
        if (!obj.at("repaired").is_boolean()) throw ParseError("repaired must be boolean");
        meta.repaired = obj.at("repaired").get<bool>();
    }
    if (obj.contains("repaired_entries")) {
        for (const auto& e : field(obj, "repaired_entries")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("bad repaired entry");
            meta.repaired_entries.emplace_back(e[0].get<std::size_t>(),
                                               e[1].get<std::size_t>());
        }
    }
    if (obj.contains("repaired_components"))
        for (const auto& n : field(obj, "repaired_components"))
            meta.repaired_components.push_back(n.get<std::string>());
    return meta;
}

void expect_kind(const ojson& obj, const char* kind) {
    if (string_field(obj, "kind") != kind)
        throw ParseError(std::string("expected kind ") + kind);
}

// ---- plan pieces ----

const char* choice_name(builder::RowChoice::Kind k) {
    using K = builder::RowChoice::Kind;
    switch (k) {
        case K::H0: return "H0";
        case K::H1: return "H1";
        case K::W0: return "W0";
        case K::Hell: return "Hell";
        case K::HellPrime: return "HellPrime";
        case K::M: return "M";
        case K::Wtilde: return "Wtilde";
        case K::RepeatRow0: return "RepeatRow0";
    }
    throw BadParams("unknown row choice");
}

bool choice_has_param(builder::RowChoice::Kind k) {
    using K = builder::RowChoice::Kind;
    return k == K::Hell || k == K::HellPrime || k == K::M || k == K::Wtilde;
}

builder::RowChoice::Kind choice_kind(const std::string& name) {
    using K = builder::RowChoice::Kind;
    if (name == "H0") return K::H0;
    if (name == "H1") return K::H1;
    if (name == "W0") return K::W0;
    if (name == "Hell") return K::Hell;
    if (name == "HellPrime") return K::HellPrime;
    if (name == "M") return K::M;
    if (name == "Wtilde") return K::Wtilde;
    if (name == "RepeatRow0") return K::RepeatRow0;
    throw ParseError("unknown row choice: " + name);
}

ojson choice_to(const builder::RowChoice& ch) {
    ojson out = ojson::object();
    out["choice"] = choice_name(ch.kind);
    if (choice_has_param(ch.kind)) out["param"] = ch.param;
    out["y"] = ch.y;
    return out;
}

builder::RowChoice choice_from(const ojson& j) {
    builder::RowChoice ch;
    ch.kind = choice_kind(string_field(j, "choice"));
    if (choice_has_param(ch.kind)) ch.param = static_cast<int>(long_field(j, "param"));
    ch.y = static_cast<int>(long_field(j, "y"));
    return ch;
}

const char* branch_name(builder::Branch b) {
    switch (b) {
        case builder::Branch::Low: return "low";
        case builder::Branch::High: return "high";
        case builder::Branch::Explicit313: return "explicit313";
    }
    throw BadParams("unknown branch");
}

builder::Branch branch_from(const std::string& name) {
    if (name == "low") return builder::Branch::Low;
    if (name == "high") return builder::Branch::High;
    if (name == "explicit313") return builder::Branch::Explicit313;
    throw ParseError("unknown branch: " + name);
}

} // namespace

std::string to_json(const QuantumLatinSquare& q) {
    ojson out = ojson::object();
    out["kind"] = "qls";
    out["order"] = q.order;
    out["space"] = space_to(q.space);
    out["cells"] = cell_rows_to(q.cells);
    meta_to(out, q.meta);
    return dump(out);
}

std::string to_json(const RowQLR& r) {
    ojson out = ojson::object();
    out["kind"] = "row_qlr";
    out["rows"] = r.rows;
    out["cols"] = r.cols;
    out["space"] = space_to(r.space);
    out["cells"] = cell_rows_to(r.cells);
    meta_to(out, r.meta);
    return dump(out);
}

std::string to_json(const catalog::Grid& g) {
    ojson out = ojson::object();
    out["kind"] = "grid";
    out["rows"] = g.rows;
    out["cols"] = g.cols;
    out["space"] = space_to(g.space);
    out["cells"] = cell_rows_to(g.cells);
    meta_to(out, g.meta);
    return dump(out);
}

std::string to_json(const catalog::NamedMatrix& m) {
    ojson out = ojson::object();
    out["kind"] = "matrix";
    out["rows"] = m.rows;
    out["cols"] = m.cols;
    ojson entries = ojson::array();
    for (const auto& row : m.entries) {
        ojson jrow = ojson::array();
        for (const auto& a : row) jrow.push_back(amp_to(a));
        entries.push_back(std::move(jrow));
    }
    out["entries"] = std::move(entries);
    meta_to(out, m.meta);
    return dump(out);
}

std::string to_json(const builder::BlockPlan& p) {
    ojson out = ojson::object();
    out["kind"] = "plan";
    out["m"] = p.m;
    out["cardinality"] = p.cardinality;
    out["branch"] = branch_name(p.branch);
    out["predicted_cardinality"] = p.predicted_cardinality;
    ojson diagonals = ojson::array();
    for (const auto& d : p.diagonals) {
        ojson jd = ojson::object();
        jd["row0"] = choice_to(d.row0);
        jd["row1"] = choice_to(d.row1);
        ojson rest = ojson::array();
        for (const auto& ch : d.rest) rest.push_back(choice_to(ch));
        jd["rest"] = std::move(rest);
        diagonals.push_back(std::move(jd));
    }
    out["diagonals"] = std::move(diagonals);
    return dump(out);
}

std::string to_json(const Census& c) {
    ojson out = ojson::object();
    out["kind"] = "census";
    out["cardinality"] = c.cardinality();
    ojson classes = ojson::array();
    for (const auto& cl : c.classes()) {
        ojson jc = ojson::object();
        jc["representative"] = vec_to(cl.representative);
        jc["canonical"] = cl.canonical ? vec_to(*cl.canonical) : ojson();
        jc["multiplicity"] = cl.multiplicity;
        classes.push_back(std::move(jc));
    }
    out["classes"] = std::move(classes);
    return dump(out);
}

std::string to_json(const VerifyReport& r) {
    ojson out = ojson::object();
    out["kind"] = "report";
    out["ok"] = r.ok();
    out["cardinality"] = r.cardinality;
    ojson norms = ojson::array();
    for (const auto& f : r.norm_failures) {
        ojson jf = ojson::object();
        jf["row"] = f.row;
        jf["col"] = f.col;
        jf["norm_sq"] = rad_to(f.norm_sq);
        norms.push_back(std::move(jf));
    }
    out["norm_failures"] = std::move(norms);
    ojson orths = ojson::array();
    for (const auto& f : r.orth_failures) {
        ojson jf = ojson::object();
        jf["line"] = f.in_row ? "row" : "column";
        jf["index"] = f.index;
        jf["a"] = f.a;
        jf["b"] = f.b;
        jf["inner"] = amp_to(f.inner);
        orths.push_back(std::move(jf));
    }
    out["orth_failures"] = std::move(orths);
    out["shape_failures"] = r.shape_failures;
    return dump(out);
}

std::string to_json(const SetRelations& r) {
    ojson out = ojson::object();
    out["kind"] = "relations";
    out["common"] = r.common;
    out["a_only"] = r.a_only;
    out["b_only"] = r.b_only;
    return dump(out);
}

std::string table_to_json(std::size_t m, const std::vector<builder::TableEntry>& entries) {
    ojson out = ojson::object();
    out["kind"] = "table";
    out["m"] = m;
    ojson list = ojson::array();
    for (const auto& e : entries) {
        ojson je = ojson::object();
        je["cardinality"] = e.cardinality;
        je["feasible"] = e.feasible;
        if (!e.feasible) {
            je["error"] = e.error_code;
        } else {
            const builder::BlockPlan& p = *e.plan;
            je["branch"] = branch_name(p.branch);
            if (p.branch != builder::Branch::Explicit313) {
                ojson row0 = ojson::array(), row1 = ojson::array(), extra = ojson::array();
                for (const auto& d : p.diagonals) {
                    row0.push_back(d.row0.y);
                    row1.push_back(d.row1.y);
                    int w = 0;
                    for (const auto& ch : d.rest) w += (ch.y != 0) ? 1 : 0;
                    extra.push_back(w);
                }
                je["row0"] = std::move(row0);
                je["row1"] = std::move(row1);
                je["extra_rows"] = std::move(extra);
            }
        }
        list.push_back(std::move(je));
    }
    out["entries"] = std::move(list);
    return dump(out);
}

std::string kind_of(const std::string& text) {
    return string_field(parse_text(text), "kind");
}

QuantumLatinSquare square_from_json(const std::string& text) {
    ojson j = parse_text(text);
    expect_kind(j, "qls");
    QuantumLatinSquare q;
    q.order = size_field(j, "order");
    q.space = space_from(field(j, "space"));
    q.cells = cell_rows_from(field(j, "cells"));
    q.meta = meta_from(j);
    return q;
}

RowQLR rect_from_json(const std::string& text) {
    ojson j = parse_text(text);
    expect_kind(j, "row_qlr");
    RowQLR r;
    r.rows = size_field(j, "rows");
    r.cols = size_field(j, "cols");
    r.space = space_from(field(j, "space"));
    r.cells = cell_rows_from(field(j, "cells"));
    r.meta = meta_from(j);
    return r;
}

catalog::Grid grid_from_json(const std::string& text) {
    ojson j = parse_text(text);
    expect_kind(j, "grid");
    catalog::Grid g;
    g.rows = size_field(j, "rows");
    g.cols = size_field(j, "cols");
    g.space = space_from(field(j, "space"));
    g.cells = cell_rows_from(field(j, "cells"));
    g.meta = meta_from(j);
    return g;
}

catalog::NamedMatrix matrix_from_json(const std::string& text) {
    ojson j = parse_text(text);
    expect_kind(j, "matrix");
    catalog::NamedMatrix m;
    m.rows = size_field(j, "rows");
    m.cols = size_field(j, "cols");
    for (const auto& jrow : field(j, "entries")) {
        std::vector<Amplitude> row;
        for (const auto& a : jrow) row.push_back(amp_from(a));
        m.entries.push_back(std::move(row));
    }
    m.meta = meta_from(j);
    return m;
}

builder::BlockPlan plan_from_json(const std::string& text) {
    ojson j = parse_text(text);
    expect_kind(j, "plan");
    builder::BlockPlan p;
    p.m = size_field(j, "m");
    p.cardinality = long_field(j, "cardinality");
    p.branch = branch_from(string_field(j, "branch"));
    p.predicted_cardinality = long_field(j, "predicted_cardinality");
    for (const auto& jd : field(j, "diagonals")) {
        builder::DiagonalPlan d;
        d.row0 = choice_from(field(jd, "row0"));
        d.row1 = choice_from(field(jd, "row1"));
        for (const auto& ch : field(jd, "rest")) d.rest.push_back(choice_from(ch));
        p.diagonals.push_back(std::move(d));
    }
    return p;
}

std::vector<StateVector> cells_from_json(const std::string& text) {
    std::string kind = kind_of(text);
    if (kind == "qls") return square_from_json(text).flat_cells();
    if (kind == "row_qlr") return rect_from_json(text).flat_cells();
    if (kind == "grid") return grid_from_json(text).flat_cells();
    if (kind == "matrix") {
        catalog::NamedMatrix m = matrix_from_json(text);
        std::vector<StateVector> cols;
        for (std::size_t jcol = 0; jcol < m.cols; ++jcol)
            cols.push_back(catalog::matrix_column(m, jcol));
        return cols;
    }
    throw ParseError("document kind " + kind + " carries no cells");
}

} // namespace qls::serialize
