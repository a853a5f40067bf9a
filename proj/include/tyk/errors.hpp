#ifndef TYK_ERRORS_HPP
#define TYK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tyk {

// Base class for all domain errors. `name()` is the stable machine-readable
// identifier used by the CLI and the JSON reports.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define TYK_DEFINE_ERROR(cls)                                        \
    class cls : public Error {                                       \
    public:                                                          \
        explicit cls(const std::string& what) : Error(#cls, what) {} \
    }

TYK_DEFINE_ERROR(NonRationalRoot);
TYK_DEFINE_ERROR(ImproperAtInfinity);
TYK_DEFINE_ERROR(UnsupportedPair);
TYK_DEFINE_ERROR(DegeneratePQ);
TYK_DEFINE_ERROR(BadShiftRange);
TYK_DEFINE_ERROR(NoSolution);
TYK_DEFINE_ERROR(NotAssociable);
TYK_DEFINE_ERROR(NoSymmetricSquareRoot);
TYK_DEFINE_ERROR(StringConditionViolated);
TYK_DEFINE_ERROR(NotClassifiable);
TYK_DEFINE_ERROR(NoRationalNormalizer);
TYK_DEFINE_ERROR(MalformedInput);

#undef TYK_DEFINE_ERROR

} // namespace tyk

#endif
