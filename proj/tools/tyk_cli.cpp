// Command-line front end: parse pairs, weights and tuples, dispatch to the
// engines, and emit machine-readable verdicts.

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "tyk/drinfeld.hpp"
#include "tyk/json_io.hpp"
#include "tyk/lowrank.hpp"
#include "tyk/reflection.hpp"

using namespace tyk;
using Json = io::Json;

namespace {

// Inline JSON, a file path, or "-" for stdin.
Json load_input(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (!arg.empty() && (arg[0] == '{' || arg[0] == '[' || arg[0] == '"')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw MalformedInput("cannot open input '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw MalformedInput(std::string("bad JSON: ") + e.what());
    }
}

SymmetricPair pair_of(const std::string& arg) {
    if (!arg.empty() && arg[0] == '{') return io::pair_from(load_input(arg));
    return SymmetricPair::from_id(arg);
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Json classify_one(const Json& input, bool pretty) {
    if (input.contains("mu")) return io::classification_json(classify(io::weight_from(input)), pretty);
    return io::classification_json(classify(io::tuple_from(input)), pretty);
}

int run_verify(const std::string& pair_arg, const std::string& solution,
               const std::string& param, const std::string& matrix_file) {
    SymmetricPair sp = pair_of(pair_arg);
    MatN S(sp);
    if (!matrix_file.empty()) {
        S = io::matn_from(sp, load_input(matrix_file));
    } else if (solution == "trivial") {
        S = trivial_solution(sp);
    } else if (solution == "kmatrix") {
        std::optional<Rational> a;
        if (!param.empty() && param != "symbolic") a = Rational::parse(param);
        S = kmatrix(sp, a);
    } else {
        throw MalformedInput("unknown solution '" + solution + "'");
    }
    Json out;
    out["pair"] = io::pair_json(sp);
    out["solution"] = matrix_file.empty() ? solution : "matrix";
    Json reports = Json::array();
    bool all = true;
    for (const auto& rep : verify_solution(sp, S)) {
        reports.push_back(io::report_json(rep));
        all = all && rep.holds;
    }
    out["reports"] = reports;
    out["all_hold"] = all;
    emit(out);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for twisted Yangians of types B, C and D"};
    app.require_subcommand(1);

    std::string pair_arg, solution = "trivial", param, matrix_file, input;
    bool pretty = false, on_weight = false;
    int m = 1, jobs = 1;
    std::string mu, mu2;

    auto* verify = app.add_subcommand("verify", "check the defining matrix identities");
    verify->add_option("--pair", pair_arg)->required();
    verify->add_option("--solution", solution);
    verify->add_option("--param", param);
    verify->add_option("--matrix", matrix_file);

    auto* classify_cmd = app.add_subcommand("classify", "finite-dimensionality verdict");
    classify_cmd->add_option("input", input)->required();
    classify_cmd->add_flag("--pretty", pretty);
    classify_cmd->add_option("--jobs", jobs);

    auto* associate_cmd = app.add_subcommand("associate", "weight to classification tuple");
    associate_cmd->add_option("input", input)->required();
    associate_cmd->add_flag("--pretty", pretty);

    auto* synth = app.add_subcommand("synthesize", "canonical weight of a tuple");
    synth->add_option("input", input)->required();

    auto* twist = app.add_subcommand("twist", "swap twist of a tuple or weight");
    twist->add_option("input", input)->required();
    twist->add_flag("--weight", on_weight);
    twist->add_flag("--pretty", pretty);

    auto* restrict_cmd = app.add_subcommand("restrict", "restriction to a reduced pair");
    restrict_cmd->add_option("input", input)->required();
    restrict_cmd->add_option("--m", m);
    restrict_cmd->add_flag("--pretty", pretty);

    auto* tensor = app.add_subcommand("tensor", "tensor composition with ambient polynomials");
    tensor->add_option("input", input)->required();
    tensor->add_flag("--pretty", pretty);

    auto* evaluate = app.add_subcommand("evaluate", "evaluation-module weight and data");
    evaluate->add_option("--pair", pair_arg)->required();
    evaluate->add_option("--mu", mu);
    evaluate->add_option("--mu2", mu2);
    evaluate->add_option("--param", param);
    evaluate->add_flag("--pretty", pretty);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(pair_arg, solution, param, matrix_file);

        if (classify_cmd->parsed()) {
            Json in = load_input(input);
            if (in.is_array()) {
                std::vector<std::future<Json>> futs;
                size_t stride = jobs > 1 ? jobs : 1;
                std::vector<Json> results(in.size());
                for (size_t base = 0; base < in.size(); base += stride) {
                    size_t end = std::min(in.size(), base + stride);
                    for (size_t i = base; i < end; ++i)
                        futs.push_back(std::async(stride > 1 ? std::launch::async
                                                             : std::launch::deferred,
                                                  classify_one, in.at(i), pretty));
                    for (size_t i = base; i < end; ++i) results[i] = futs[i - base].get();
                    futs.clear();
                }
                Json arr = Json::array();
                int worst = 0;
                for (const auto& r : results) {
                    arr.push_back(r);
                    std::string v = r.at("verdict").get<std::string>();
                    worst = std::max(worst, v == "FiniteDim" ? 0 : (v == "NotFiniteDim" ? 1 : 3));
                }
                emit(arr);
                return worst;
            }
            Json out = classify_one(in, pretty);
            emit(out);
            std::string v = out.at("verdict").get<std::string>();
            return v == "FiniteDim" ? 0 : (v == "NotFiniteDim" ? 1 : 3);
        }

        if (associate_cmd->parsed()) {
            emit(io::tuple_json(associate(io::weight_from(load_input(input))), pretty));
            return 0;
        }
        if (synth->parsed()) {
            emit(io::weight_json(synthesize(io::tuple_from(load_input(input)))));
            return 0;
        }
        if (twist->parsed()) {
            Json in = load_input(input);
            if (on_weight || in.contains("mu"))
                emit(io::weight_json(psi_twist_weight(io::weight_from(in))));
            else emit(io::tuple_json(psi_twist(io::tuple_from(in)), pretty));
            return 0;
        }
        if (restrict_cmd->parsed()) {
            Json in = load_input(input);
            if (in.contains("mu"))
                emit(io::weight_json(restrict_weight(io::weight_from(in), m)));
            else emit(io::tuple_json(restrict_tuple(io::tuple_from(in), m), pretty));
            return 0;
        }
        if (tensor->parsed()) {
            Json in = load_input(input);
            DrinfeldTuple t = io::tuple_from(in.at("tuple"));
            std::vector<std::map<Rational, int>> q;
            for (const auto& poly : in.at("q")) {
                std::map<Rational, int> roots;
                for (const auto& rm : poly)
                    roots[io::rational_from(rm.at(0))] += rm.size() > 1 ? rm.at(1).get<int>() : 1;
                q.push_back(std::move(roots));
            }
            emit(io::tuple_json(tensor_compose(q, t), pretty));
            return 0;
        }
        if (evaluate->parsed()) {
            SymmetricPair sp = pair_of(pair_arg);
            std::string p1 = !mu.empty() ? mu : param;
            Json out;
            out["pair"] = io::pair_json(sp);
            if (sp.family() == Family::SO3) {
                Rational m1 = Rational::parse(p1.empty() ? "0" : p1);
                HighestWeight w = ev_so3_weight(m1);
                out["params"] = Json::array({io::rational_json(m1)});
                out["weight"] = io::weight_json(w);
                out["tuple"] = io::tuple_json(associate(w), pretty);
                Json checks = Json::array();
                MatN S = ev_so3_matrix(m1);
                for (const auto& rep : verify_solution(sp, S)) checks.push_back(io::report_json(rep));
                out["checks"] = checks;
            } else if (sp.family() == Family::SO4) {
                Rational m1 = Rational::parse(p1.empty() ? "0" : p1);
                Rational m2 = Rational::parse(mu2.empty() ? "0" : mu2);
                HighestWeight w = ev_so4_weight(m1, m2);
                So4Data d = so4_tuple(w);
                out["params"] = Json::array({io::rational_json(m1), io::rational_json(m2)});
                out["weight"] = io::weight_json(w);
                out["tuple"] = Json{{"alpha", io::rational_json(d.alpha)},
                                    {"beta", io::rational_json(d.beta)},
                                    {"P", io::sympoly_json(d.P, pretty)},
                                    {"Q", io::sympoly_json(d.Q, pretty)}};
                Json checks = Json::array();
                MatN S = ev_so4_matrix(m1, m2);
                for (const auto& rep : verify_solution(sp, S)) checks.push_back(io::report_json(rep));
                out["checks"] = checks;
            } else {
                throw MalformedInput("evaluation modules exist for the pairs so3 and so4");
            }
            emit(out);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
