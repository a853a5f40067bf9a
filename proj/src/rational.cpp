#include "tyk/rational.hpp"

namespace tyk {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw MalformedInput("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        return Rational(std::move(n), std::move(d));
    } catch (const std::exception& e) {
        throw MalformedInput("bad rational literal '" + s + "': " + e.what());
    }
}

std::string Rational::str() const {
    std::string out = num_.str();
    if (den_ != 1) out += "/" + den_.str();
    return out;
}

} // namespace tyk
