#include "tyk/json_io.hpp"

#include <cstdlib>

namespace tyk::io {

int max_degree() {
    if (const char* env = std::getenv("TYK_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 128;
}

namespace {

void check_degree(int deg) {
    if (deg > max_degree())
        throw MalformedInput("polynomial degree " + std::to_string(deg) +
                             " exceeds TYK_MAX_DEGREE");
}

} // namespace

Json rational_json(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw MalformedInput("expected a rational literal");
}

Json unipoly_json(const UniPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_json(c));
    return Json{{"coeffs", coeffs}};
}

UniPoly unipoly_from(const Json& j) {
    if (j.is_object() && j.contains("coeffs")) {
        std::vector<Rational> cs;
        for (const auto& c : j.at("coeffs")) cs.push_back(rational_from(c));
        check_degree(static_cast<int>(cs.size()) - 1);
        return UniPoly(std::move(cs));
    }
    if (j.is_object() && j.contains("roots")) {
        std::map<Rational, int> roots;
        int total = 0;
        for (const auto& rm : j.at("roots")) {
            int m = rm.size() > 1 ? rm.at(1).get<int>() : 1;
            roots[rational_from(rm.at(0))] += m;
            total += m;
        }
        check_degree(total);
        return UniPoly::from_roots(roots);
    }
    throw MalformedInput("polynomial needs 'coeffs' or 'roots'");
}

Json ratfunc_json(const RatFunc& f) {
    return Json{{"num", unipoly_json(f.num())}, {"den", unipoly_json(f.den())}};
}

RatFunc ratfunc_from(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw MalformedInput("rational function needs 'num' and 'den'");
    return RatFunc(unipoly_from(j.at("num")), unipoly_from(j.at("den")));
}

Json pair_json(const SymmetricPair& sp) {
    Json j{{"family", family_name(sp.family())}, {"N", sp.N()}, {"q", sp.q()}};
    if (sp.is_bcd0()) j["algebra"] = sp.orthogonal() ? "so" : "sp";
    j["id"] = sp.id();
    return j;
}

SymmetricPair pair_from(const Json& j) {
    if (j.is_string()) return SymmetricPair::from_id(j.get<std::string>());
    if (!j.is_object()) throw MalformedInput("pair must be an id string or an object");
    if (j.contains("id") && !j.contains("family"))
        return SymmetricPair::from_id(j.at("id").get<std::string>());
    Family f = family_from_name(j.at("family").get<std::string>());
    int N = j.at("N").get<int>();
    int q = j.contains("q") ? j.at("q").get<int>() : 0;
    bool orth = true;
    if (j.contains("algebra")) orth = j.at("algebra").get<std::string>() != "sp";
    return SymmetricPair::build(f, N, q, orth);
}

Json sympoly_json(const SymPoly& p, bool pretty) {
    Json roots = Json::array();
    for (const auto& [r, m] : p.roots()) roots.push_back(Json::array({rational_json(r), m}));
    Json j{{"roots", roots}, {"center", rational_json(p.center())}, {"monic", true}};
    if (pretty) j["pretty"] = p.str();
    return j;
}

SymPoly sympoly_from(const Json& j) {
    std::map<Rational, int> roots;
    int total = 0;
    for (const auto& rm : j.at("roots")) {
        int m = rm.size() > 1 ? rm.at(1).get<int>() : 1;
        roots[rational_from(rm.at(0))] += m;
        total += m;
    }
    check_degree(total);
    return SymPoly(std::move(roots), rational_from(j.at("center")));
}

Json tuple_json(const DrinfeldTuple& t, bool pretty) {
    Json j;
    j["pair"] = pair_json(t.pair);
    j["alpha"] = t.alpha ? rational_json(*t.alpha) : Json(nullptr);
    Json polys = Json::array();
    for (const auto& p : t.polys) polys.push_back(sympoly_json(p, pretty));
    j["polys"] = polys;
    if (pretty) j["pretty"] = t.str();
    return j;
}

DrinfeldTuple tuple_from(const Json& j) {
    SymmetricPair sp = pair_from(j.at("pair"));
    std::optional<Rational> alpha;
    if (j.contains("alpha") && !j.at("alpha").is_null()) alpha = rational_from(j.at("alpha"));
    std::vector<SymPoly> polys;
    if (j.contains("polys")) {
        for (const auto& p : j.at("polys")) {
            if (p.is_number_integer() && p.get<int>() == 1) {
                polys.push_back(SymPoly::one(
                    DrinfeldTuple::center_of(sp, static_cast<int>(polys.size()) + 1)));
            } else {
                polys.push_back(sympoly_from(p));
            }
        }
    }
    // Missing trailing polynomials default to 1 with the right center.
    while (polys.size() < static_cast<size_t>(sp.n()))
        polys.push_back(
            SymPoly::one(DrinfeldTuple::center_of(sp, static_cast<int>(polys.size()) + 1)));
    return DrinfeldTuple::make(std::move(sp), std::move(alpha), std::move(polys));
}

Json weight_json(const HighestWeight& w) {
    Json mu = Json::array();
    for (const auto& f : w.comps()) mu.push_back(ratfunc_json(f));
    return Json{{"pair", pair_json(w.pair())}, {"mu", mu}};
}

HighestWeight weight_from(const Json& j) {
    SymmetricPair sp = pair_from(j.at("pair"));
    std::vector<RatFunc> mu;
    for (const auto& f : j.at("mu")) mu.push_back(ratfunc_from(f));
    return HighestWeight(std::move(sp), std::move(mu));
}

namespace {

Json mp_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json::array({m.e[0], m.e[1], m.e[2], rational_json(c)}));
    return terms;
}

MultiPoly mp_from(const Json& j) {
    MultiPoly out;
    for (const auto& t : j) {
        MultiPoly term(rational_from(t.at(3)));
        for (int i = 0; i < 3; ++i) {
            int e = t.at(i).get<int>();
            check_degree(e);
            if (e > 0) term = term * MultiPoly::variable(static_cast<Var>(i), e);
        }
        out = out + term;
    }
    return out;
}

} // namespace

Json mrf_json(const MultiRatFunc& f) {
    return Json{{"num", mp_json(f.num())}, {"den", mp_json(f.den())}};
}

MultiRatFunc mrf_from(const Json& j) {
    return MultiRatFunc(mp_from(j.at("num")), mp_from(j.at("den")));
}

Json matn_json(const MatN& m) {
    Json entries = Json::array();
    for (const auto& [k, v] : m.entries())
        entries.push_back(Json::array({k.first, k.second, mrf_json(v)}));
    return Json{{"N", m.pair().N()}, {"entries", entries}};
}

MatN matn_from(const SymmetricPair& sp, const Json& j) {
    if (j.contains("N") && j.at("N").get<int>() != sp.N())
        throw MalformedInput("matrix size does not match the pair");
    MatN m(sp);
    for (const auto& e : j.at("entries"))
        m.set(e.at(0).get<int>(), e.at(1).get<int>(), mrf_from(e.at(2)));
    return m;
}

Json report_json(const IdentityReport& r) {
    Json j{{"identity", r.identity}, {"holds", r.holds}};
    if (!r.holds) {
        Json w;
        if (!r.witness.empty()) w["entry"] = r.witness;
        if (!r.witness_value.empty()) w["value"] = r.witness_value;
        j["witness"] = w;
    }
    if (!r.scalar.empty()) j["scalar"] = r.scalar;
    return j;
}

Json classification_json(const Classification& c, bool pretty) {
    Json j{{"verdict", verdict_name(c.verdict)}, {"tuple", tuple_json(c.tuple, pretty)}};
    j["violations"] = c.violations;
    return j;
}

} // namespace tyk::io
