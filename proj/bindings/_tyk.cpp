// Python bindings for the main operations. Structured values cross the
// boundary as plain dicts/lists in the same shape as the CLI JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tyk/drinfeld.hpp"
#include "tyk/json_io.hpp"
#include "tyk/lowrank.hpp"
#include "tyk/reflection.hpp"

namespace py = pybind11;
using namespace tyk;
using Json = io::Json;

namespace {

py::object to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
        case Json::value_t::number_unsigned: return py::int_(j.get<long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(to_py(e));
            return out;
        }
        default: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
            return out;
        }
    }
}

Json to_json(py::handle h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<long long>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        Json out = Json::array();
        for (auto e : h.cast<py::sequence>()) out.push_back(to_json(e));
        return out;
    }
    if (py::isinstance<py::dict>(h)) {
        Json out = Json::object();
        for (auto item : h.cast<py::dict>())
            out[item.first.cast<std::string>()] = to_json(item.second);
        return out;
    }
    throw MalformedInput("unsupported python value; rationals are strings like '3/4'");
}

SymmetricPair pair_arg(py::handle h) {
    if (py::isinstance<py::str>(h)) return SymmetricPair::from_id(h.cast<std::string>());
    return io::pair_from(to_json(h));
}

Rational rat_arg(py::handle h) {
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<long>());
    return Rational::parse(py::str(h).cast<std::string>());
}

} // namespace

PYBIND11_MODULE(_tyk, m) {
    m.doc() = "exact calculus for twisted Yangians of types B, C and D";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, (e.name() + ": " + e.what()).c_str());
        }
    });

    py::class_<SymmetricPair>(m, "Pair")
        .def(py::init([](py::object spec) { return pair_arg(spec); }))
        .def_property_readonly("id", &SymmetricPair::id)
        .def_property_readonly("family", [](const SymmetricPair& p) { return family_name(p.family()); })
        .def_property_readonly("N", &SymmetricPair::N)
        .def_property_readonly("n", &SymmetricPair::n)
        .def_property_readonly("p", &SymmetricPair::p)
        .def_property_readonly("q", &SymmetricPair::q)
        .def_property_readonly("ell", &SymmetricPair::ell)
        .def_property_readonly("kay", &SymmetricPair::kay)
        .def_property_readonly("kappa", [](const SymmetricPair& p) { return p.kappa().str(); })
        .def_property_readonly("d", [](const SymmetricPair& p) { return p.d().str(); })
        .def("__repr__", [](const SymmetricPair& p) { return "Pair('" + p.id() + "')"; })
        .def("__eq__", [](const SymmetricPair& a, const SymmetricPair& b) { return a == b; });

    m.def("pair", [](py::object spec) { return pair_arg(spec); },
          "build a symmetric pair from an id string or a dict");

    m.def(
        "verify",
        [](py::object pair, const std::string& solution, py::object param) {
            SymmetricPair sp = pair_arg(pair);
            MatN S(sp);
            if (solution == "trivial") S = trivial_solution(sp);
            else if (solution == "kmatrix")
                S = kmatrix(sp, param.is_none() ? std::optional<Rational>()
                                                : std::optional<Rational>(rat_arg(param)));
            else throw MalformedInput("unknown solution '" + solution + "'");
            Json reports = Json::array();
            bool all = true;
            for (const auto& rep : verify_solution(sp, S)) {
                reports.push_back(io::report_json(rep));
                all = all && rep.holds;
            }
            return to_py(Json{{"pair", io::pair_json(sp)},
                              {"solution", solution},
                              {"reports", reports},
                              {"all_hold", all}});
        },
        py::arg("pair"), py::arg("solution") = "trivial", py::arg("param") = py::none(),
        "check the reflection equation, symmetry relation, trace identity and unitarity");

    m.def("classify", [](py::object input) {
        Json j = to_json(input);
        Classification c = j.contains("mu") ? classify(io::weight_from(j))
                                            : classify(io::tuple_from(j));
        return to_py(io::classification_json(c));
    });
    m.def("associate",
          [](py::object w) { return to_py(io::tuple_json(associate(io::weight_from(to_json(w))))); });
    m.def("synthesize",
          [](py::object t) { return to_py(io::weight_json(synthesize(io::tuple_from(to_json(t))))); });
    m.def("psi_twist",
          [](py::object t) { return to_py(io::tuple_json(psi_twist(io::tuple_from(to_json(t))))); });
    m.def("psi_twist_weight", [](py::object w) {
        return to_py(io::weight_json(psi_twist_weight(io::weight_from(to_json(w)))));
    });
    m.def("restrict", [](py::object t, int m) {
        Json j = to_json(t);
        if (j.contains("mu"))
            return to_py(io::weight_json(restrict_weight(io::weight_from(j), m)));
        return to_py(io::tuple_json(restrict_tuple(io::tuple_from(j), m)));
    });
    m.def("tensor", [](py::object q, py::object t) {
        std::vector<std::map<Rational, int>> roots;
        for (auto poly : q.cast<py::sequence>()) {
            std::map<Rational, int> rm;
            for (auto pairroot : poly.cast<py::sequence>()) {
                auto seq = pairroot.cast<py::sequence>();
                rm[rat_arg(seq[0])] += seq.size() > 1 ? seq[1].cast<int>() : 1;
            }
            roots.push_back(std::move(rm));
        }
        return to_py(io::tuple_json(tensor_compose(roots, io::tuple_from(to_json(t)))));
    });

    m.def("trivial_weight",
          [](py::object p) { return to_py(io::weight_json(trivial_weight(pair_arg(p)))); });
    m.def("onedim_weight", [](py::object p, py::object params) {
        std::vector<Rational> ps;
        for (auto e : params.cast<py::sequence>()) ps.push_back(rat_arg(e));
        return to_py(io::weight_json(onedim_weight(pair_arg(p), ps)));
    });
    m.def("evaluate", [](py::object p, py::object params) {
        SymmetricPair sp = pair_arg(p);
        std::vector<Rational> ps;
        for (auto e : params.cast<py::sequence>()) ps.push_back(rat_arg(e));
        HighestWeight w = onedim_weight(sp, ps);
        Json out{{"pair", io::pair_json(sp)}, {"weight", io::weight_json(w)}};
        if (sp.family() == Family::SO4) {
            So4Data d = so4_tuple(w);
            out["tuple"] = Json{{"alpha", io::rational_json(d.alpha)},
                                {"beta", io::rational_json(d.beta)},
                                {"P", io::sympoly_json(d.P)},
                                {"Q", io::sympoly_json(d.Q)}};
        } else {
            out["tuple"] = io::tuple_json(associate(w));
        }
        return to_py(out);
    });

    m.def("p_function", [](py::object p) { return p_function(pair_arg(p)).str(); });
    m.def("scr_g", [](py::object p) { return scr_g(pair_arg(p)).str(); });
    m.def("h_shift", [](py::object p, int mm) { return h_shift(pair_arg(p), mm).str(); });
    m.def("string_set", [](py::object a, py::object b) {
        py::list out;
        for (const auto& r : string_set(rat_arg(a), rat_arg(b))) out.append(r.str());
        return out;
    });
    m.def("g_weight", [](py::object t) {
        py::list out;
        for (const auto& r : g_weight(io::tuple_from(to_json(t)))) out.append(r.str());
        return out;
    });
}
