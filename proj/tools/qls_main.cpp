#include "qls/builder.hpp"
#include "qls/catalog.hpp"
#include "qls/errors.hpp"
#include "qls/serialize.hpp"
#include "qls/square.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ojson = nlohmann::ordered_json;
using namespace qls;

int exit_code_for(const std::string& code) {
    if (code == "impossible_cardinality") return 2;
    if (code == "out_of_range") return 3;
    if (code == "unsupported_order12_cardinality") return 4;
    if (code == "parse_error") return 5;
    if (code == "unknown_generator") return 6;
    if (code == "bad_params") return 7;
    return 1;
}

int env_threads() {
    const char* raw = std::getenv("QLS_THREADS");
    if (!raw) return 1;
    int n = std::atoi(raw);
    return n > 0 ? n : 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

void emit_ok(const ojson& payload) {
    ojson out = ojson::object();
    out["status"] = "ok";
    out["payload"] = payload;
    std::cout << out.dump(2) << "\n";
}

ojson embed(const std::string& serialized) { return ojson::parse(serialized); }

// ---- parameter handling for gen ----

using ParamMap = std::map<std::string, std::string>;

ParamMap parse_params(const std::vector<std::string>& raw) {
    ParamMap out;
    for (const auto& kv : raw) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw BadParams("parameters must look like key=value: " + kv);
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

long get_int(ParamMap& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw BadParams("missing required parameter: " + key);
    std::string text = it->second;
    p.erase(it);
    try {
        std::size_t pos = 0;
        long v = std::stol(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw BadParams("parameter " + key + " must be an integer, got: " + text);
    }
}

Rational get_rational(ParamMap& p, const std::string& key, const Rational& fallback) {
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    std::string text = it->second;
    p.erase(it);
    try {
        return Rational::parse(text);
    } catch (const Error&) {
        throw BadParams("parameter " + key + " must be rational, got: " + text);
    }
}

std::string get_string(ParamMap& p, const std::string& key, const std::string& fallback) {
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    std::string v = it->second;
    p.erase(it);
    return v;
}

void reject_leftovers(const ParamMap& p) {
    if (!p.empty()) throw BadParams("unknown parameter: " + p.begin()->first);
}

catalog::Grid inner_grid_for(const std::string& which) {
    using catalog::Qls4Variant;
    if (which == "4") return catalog::qls4(4);
    if (which == "6") return catalog::qls4(6);
    if (which == "8") return catalog::qls4(8);
    if (which == "16" || which == "xp") return catalog::qls4(16, Qls4Variant::Xp);
    if (which == "xpp") return catalog::qls4(16, Qls4Variant::Xpp);
    if (which == "alpha") return catalog::qls4_alpha(false);
    if (which == "alpha_mixed") return catalog::qls4_alpha(true);
    throw BadParams("parameter x must be one of 4, 6, 8, 16, xp, xpp, alpha, alpha_mixed");
}

// Serialized object for a generator name; throws UnknownGenerator / BadParams.
std::string generate(const std::string& name, ParamMap params) {
    using catalog::BlockName;
    using catalog::Qls4Variant;

    auto grid = [&](const catalog::Grid& g) { return serialize::to_json(g); };
    auto square = [&](const QuantumLatinSquare& q) { return serialize::to_json(q); };
    auto rect = [&](const RowQLR& r) { return serialize::to_json(r); };
    auto matrix = [&](const catalog::NamedMatrix& m) { return serialize::to_json(m); };
    auto done = [&](const std::string& out) {
        reject_leftovers(params);
        return out;
    };

    if (name == "A" || name == "B" || name == "C" || name == "D" || name == "E") {
        Rational a = get_rational(params, "a", Rational(0));
        BlockName which = name == "A"   ? BlockName::A
                          : name == "B" ? BlockName::B
                          : name == "C" ? BlockName::C
                          : name == "D" ? BlockName::D
                                        : BlockName::E;
        reject_leftovers(params);
        return grid(catalog::block_family(which, a));
    }
    if (name == "F1") return done(grid(catalog::f1()));
    if (name == "F2") return done(grid(catalog::f2()));
    if (name == "G1") return done(grid(catalog::g1()));
    if (name == "U") return done(rect(catalog::u_rect()));
    if (name == "V1") return done(rect(catalog::v1_rect()));
    if (name == "V2") return done(rect(catalog::v2_rect()));
    if (name == "U0") return done(rect(catalog::u0_rect()));
    if (name == "V0") return done(rect(catalog::v0_rect()));
    if (name == "Ui") {
        long i = get_int(params, "i");
        if (i < 0) throw BadParams("parameter i must be nonnegative");
        reject_leftovers(params);
        return rect(catalog::ui_rect(static_cast<std::size_t>(i)));
    }
    if (name == "Xp") return done(square(catalog::xp_square()));
    if (name == "Xpp") return done(square(catalog::xpp_square()));
    if (name == "L") {
        Rational a = get_rational(params, "a", Rational(0));
        Rational b = get_rational(params, "b", Rational(0));
        Rational d = get_rational(params, "d", Rational(0));
        catalog::Grid x = inner_grid_for(get_string(params, "x", "4"));
        reject_leftovers(params);
        return square(catalog::gen_l(a, b, d, x));
    }
    if (name == "Wabd") {
        Rational a = get_rational(params, "a", Rational(0));
        Rational b = get_rational(params, "b", Rational(0));
        Rational d = get_rational(params, "d", Rational(0));
        reject_leftovers(params);
        return square(catalog::gen_w_abd(a, b, d));
    }
    if (name == "W3") return done(square(catalog::w3()));
    if (name == "W4") return done(square(catalog::w4()));
    if (name == "W5") return done(square(catalog::w5()));
    if (name == "H0") return done(square(catalog::h0()));
    if (name == "H1") return done(square(catalog::h1()));
    if (name == "W0") return done(square(catalog::w0()));
    if (name == "Wtilde") {
        long i = get_int(params, "i");
        if (i < 0) throw BadParams("parameter i must be nonnegative");
        reject_leftovers(params);
        return square(catalog::wtilde(static_cast<std::size_t>(i)));
    }
    if (name == "Xk" || name == "X") {
        long k = get_int(params, "k");
        reject_leftovers(params);
        return matrix(catalog::xmat(static_cast<int>(k)));
    }
    if (name == "Jk" || name == "J") {
        long k = get_int(params, "k");
        reject_leftovers(params);
        return matrix(catalog::jmat(static_cast<int>(k)));
    }
    if (name == "Mk" || name == "M") {
        long k = get_int(params, "k");
        reject_leftovers(params);
        return square(catalog::mk(static_cast<int>(k)));
    }
    if (name == "S") return done(matrix(catalog::smat()));
    if (name == "AlphaQLS4") {
        long mixed = 0;
        if (params.count("mixed")) mixed = get_int(params, "mixed");
        reject_leftovers(params);
        return square(catalog::alpha_qls4(mixed != 0));
    }
    if (name == "Hell") {
        long ell = get_int(params, "ell");
        reject_leftovers(params);
        return square(catalog::hell(static_cast<int>(ell)));
    }
    if (name == "HellPrime") {
        long ell = get_int(params, "ell");
        reject_leftovers(params);
        return square(catalog::hell_prime(static_cast<int>(ell)));
    }
    if (name == "QLS4") {
        long c = get_int(params, "c");
        std::string variant = get_string(params, "variant", "xp");
        if (variant != "xp" && variant != "xpp")
            throw BadParams("variant must be xp or xpp");
        reject_leftovers(params);
        return grid(catalog::qls4(static_cast<int>(c), variant == "xpp"
                                                           ? Qls4Variant::Xpp
                                                           : Qls4Variant::Xp));
    }
    if (name == "QLS18_313") return done(square(catalog::qls18_313()));
    throw UnknownGenerator("no generator named " + name);
}

// ---- human renderers ----

void human_report(const VerifyReport& r) {
    std::cout << (r.ok() ? "PASS" : "FAIL") << "  cardinality " << r.cardinality << "\n";
    for (const auto& f : r.shape_failures) std::cout << "  shape: " << f << "\n";
    for (const auto& f : r.norm_failures)
        std::cout << "  norm  (" << f.row << "," << f.col << ") |v|^2 = " << f.norm_sq.str()
                  << "\n";
    for (const auto& f : r.orth_failures)
        std::cout << "  orth  " << (f.in_row ? "row " : "col ") << f.index << " cells "
                  << f.a << "," << f.b << " <a|b> = " << f.inner.str() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quantum Latin square toolkit"};
    app.require_subcommand(1);
    int threads = env_threads();
    bool human = false;
    app.add_flag("--human", human, "Render aligned text instead of JSON");

    // build
    auto* cmd_build = app.add_subcommand("build", "Construct an order-6m square");
    long build_m = 0, build_c = 0;
    std::string build_out, build_plan_out;
    bool no_self_check = false;
    cmd_build->add_option("--m", build_m, "Block count m (order 6m)")->required();
    cmd_build->add_option("--cardinality", build_c, "Requested cardinality")->required();
    cmd_build->add_option("--out", build_out, "Write the square JSON here");
    cmd_build->add_option("--plan-out", build_plan_out, "Write the plan JSON here");
    cmd_build->add_flag("--no-self-check", no_self_check, "Skip verification and census");

    // verify / count / relations
    auto* cmd_verify = app.add_subcommand("verify", "Check the orthonormality invariants");
    std::string verify_path;
    cmd_verify->add_option("path", verify_path, "Square JSON file")->required();

    auto* cmd_count = app.add_subcommand("count", "Phase-class census of a file's cells");
    std::string count_path;
    cmd_count->add_option("path", count_path, "Object JSON file")->required();

    auto* cmd_relations = app.add_subcommand("relations", "Class-set overlap of two files");
    std::string rel_a, rel_b;
    cmd_relations->add_option("a", rel_a, "First file")->required();
    cmd_relations->add_option("b", rel_b, "Second file")->required();

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "Emit a named catalog object");
    std::string gen_name, gen_out;
    std::vector<std::string> gen_params;
    cmd_gen->add_option("--name", gen_name, "Generator name")->required();
    cmd_gen->add_option("--params", gen_params, "key=value parameters");
    cmd_gen->add_option("--out", gen_out, "Write the object JSON here");

    // table
    auto* cmd_table = app.add_subcommand("table", "Planner feasibility for every cardinality");
    long table_m = 0;
    cmd_table->add_option("--m", table_m, "Block count m")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_build->parsed()) {
            if (build_m < 2) throw BadParams("m must be at least 2");
            std::size_t m = static_cast<std::size_t>(build_m);
            builder::BlockPlan p = builder::plan(m, build_c);
            if (!build_plan_out.empty()) write_file(build_plan_out, serialize::to_json(p));
            QuantumLatinSquare q = builder::assemble(p, threads);

            bool self_check = !no_self_check && 6 * m <= 36;
            std::optional<std::size_t> census;
            if (self_check) {
                VerifyReport report = verify(q, threads);
                if (!report.ok())
                    throw DisjointnessViolation("self-check: square fails verification");
                if (report.cardinality != static_cast<std::size_t>(build_c))
                    throw DisjointnessViolation(
                        "self-check: census " + std::to_string(report.cardinality) +
                        " != requested " + std::to_string(build_c));
                census = report.cardinality;
            }
            std::string square_json = serialize::to_json(q);
            if (!build_out.empty()) write_file(build_out, square_json);

            if (human) {
                std::cout << "built order " << q.order << " square, cardinality " << build_c
                          << " (branch " << (p.branch == builder::Branch::Low    ? "low"
                                             : p.branch == builder::Branch::High ? "high"
                                                                                 : "explicit313")
                          << (self_check ? ", self-check passed" : "") << ")\n";
                if (!build_out.empty()) std::cout << "square: " << build_out << "\n";
                if (!build_plan_out.empty()) std::cout << "plan: " << build_plan_out << "\n";
            } else {
                ojson payload = ojson::object();
                payload["m"] = m;
                payload["cardinality"] = build_c;
                payload["plan"] = embed(serialize::to_json(p));
                payload["order"] = q.order;
                if (census) payload["census"] = *census;
                if (!build_out.empty())
                    payload["out"] = build_out;
                else
                    payload["square"] = embed(square_json);
                if (!build_plan_out.empty()) payload["plan_out"] = build_plan_out;
                emit_ok(payload);
            }
        } else if (cmd_verify->parsed()) {
            QuantumLatinSquare q = serialize::square_from_json(read_file(verify_path));
            VerifyReport report = verify(q, threads);
            if (human)
                human_report(report);
            else
                emit_ok(embed(serialize::to_json(report)));
        } else if (cmd_count->parsed()) {
            std::vector<StateVector> cells = serialize::cells_from_json(read_file(count_path));
            Census census = Census::of(cells, threads);
            if (human) {
                std::cout << "cardinality " << census.cardinality() << " over "
                          << cells.size() << " cells\n";
            } else {
                emit_ok(embed(serialize::to_json(census)));
            }
        } else if (cmd_relations->parsed()) {
            Census ca = Census::of(serialize::cells_from_json(read_file(rel_a)), threads);
            Census cb = Census::of(serialize::cells_from_json(read_file(rel_b)), threads);
            SetRelations rel = set_relations(ca, cb);
            if (human) {
                std::cout << "common " << rel.common << ", a_only " << rel.a_only
                          << ", b_only " << rel.b_only << "\n";
            } else {
                emit_ok(embed(serialize::to_json(rel)));
            }
        } else if (cmd_gen->parsed()) {
            std::string object_json = generate(gen_name, parse_params(gen_params));
            if (!gen_out.empty()) write_file(gen_out, object_json);
            if (human) {
                if (!gen_out.empty())
                    std::cout << "wrote " << gen_name << " to " << gen_out << "\n";
                else
                    std::cout << object_json;
            } else {
                ojson payload = ojson::object();
                payload["name"] = gen_name;
                if (!gen_out.empty())
                    payload["out"] = gen_out;
                else
                    payload["object"] = embed(object_json);
                emit_ok(payload);
            }
        } else if (cmd_table->parsed()) {
            if (table_m < 2) throw BadParams("m must be at least 2");
            std::size_t m = static_cast<std::size_t>(table_m);
            std::vector<builder::TableEntry> entries = builder::feasibility_table(m);
            if (human) {
                for (const auto& e : entries) {
                    std::cout << e.cardinality << "  "
                              << (e.feasible ? "feasible" : "infeasible: " + e.error_code);
                    if (e.feasible)
                        std::cout << "  branch "
                                  << (e.plan->branch == builder::Branch::Low    ? "low"
                                      : e.plan->branch == builder::Branch::High ? "high"
                                                                                : "explicit313");
                    std::cout << "\n";
                }
            } else {
                emit_ok(embed(serialize::table_to_json(m, entries)));
            }
        }
        return 0;
    } catch (const Error& e) {
        ojson out = ojson::object();
        out["status"] = "failed";
        out["error"] = {{"code", e.code()}, {"message", e.what()}};
        std::cout << out.dump(2) << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        ojson out = ojson::object();
        out["status"] = "failed";
        out["error"] = {{"code", "internal_error"}, {"message", e.what()}};
        std::cout << out.dump(2) << "\n";
        return 1;
    }
}
