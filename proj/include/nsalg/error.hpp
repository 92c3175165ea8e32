#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsalg {

enum class ErrorCode {
    EmptyGenerators,
    NonPositiveGenerator,
    NotAMember,
    ZeroExponent,
    NotASubring,
    ZeroConductor,
    InfiniteSet,
    TrivialAlgebra,
    MultipleFrobenius,
    TooManyGaps,
    NotFrobenius,
    HalfAlreadyPresent,
    BadH,
    NotEquiGcd,
    Overflow,
    Parse,
};

/// Machine-readable name, e.g. "NOT_EQUI_GCD".
std::string_view code_name(ErrorCode code);

/// Every domain failure in the library is reported with this exception.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace nsalg
