#ifndef GALCOVER_ERRORS_HPP
#define GALCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace galcover {

// Base for every domain error. `name()` is the stable machine-readable
// identifier surfaced by the CLI ("error" field in JSON mode).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define GALCOVER_DEFINE_ERROR(TYPE)                                  \
    class TYPE : public Error {                                      \
    public:                                                          \
        explicit TYPE(const std::string& what) : Error(#TYPE, what) {} \
    }

GALCOVER_DEFINE_ERROR(NotPrime);
GALCOVER_DEFINE_ERROR(EqualPrimes);
GALCOVER_DEFINE_ERROR(ModulusMismatch);
GALCOVER_DEFINE_ERROR(DivisionByZero);
GALCOVER_DEFINE_ERROR(ConstantModulus);
GALCOVER_DEFINE_ERROR(DenominatorDivisibleByP);
GALCOVER_DEFINE_ERROR(ZeroPolynomial);
GALCOVER_DEFINE_ERROR(NotSquarefree);
GALCOVER_DEFINE_ERROR(MixedDegrees);
GALCOVER_DEFINE_ERROR(NotMonic);
GALCOVER_DEFINE_ERROR(NotSemisimple);
GALCOVER_DEFINE_ERROR(BudgetExceeded);
GALCOVER_DEFINE_ERROR(DimensionMismatch);
GALCOVER_DEFINE_ERROR(InvalidAction);
GALCOVER_DEFINE_ERROR(GroupTooLarge);
GALCOVER_DEFINE_ERROR(SDivisibleByP);
GALCOVER_DEFINE_ERROR(InconsistentFiltration);
GALCOVER_DEFINE_ERROR(TruncationTooShort);
GALCOVER_DEFINE_ERROR(UnsupportedParameters);
GALCOVER_DEFINE_ERROR(GenusZeroBase);
GALCOVER_DEFINE_ERROR(Overflow);

#undef GALCOVER_DEFINE_ERROR

} // namespace galcover

#endif // GALCOVER_ERRORS_HPP
