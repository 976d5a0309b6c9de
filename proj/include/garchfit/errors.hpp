#pragma once

#include <stdexcept>
#include <string>

namespace garchfit {

/// Coarse error class used to pick the CLI exit code: data/format
/// problems exit with 2, numeric/domain problems with 3.
enum class ErrorCategory { Data = 2, Numeric = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    [[nodiscard]] ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

#define GARCHFIT_DEFINE_ERROR(Name, Category)                          \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& message)                      \
            : Error(ErrorCategory::Category, std::string(#Name ": ") + message) {} \
    }

// moments-core
GARCHFIT_DEFINE_ERROR(NonFiniteMoment, Numeric);

// param-space
GARCHFIT_DEFINE_ERROR(RejectionStall, Numeric);

// dataset-gen
GARCHFIT_DEFINE_ERROR(TooFewRows, Data);
GARCHFIT_DEFINE_ERROR(DegenerateColumn, Data);

// mlp-engine
GARCHFIT_DEFINE_ERROR(ShapeMismatch, Data);
GARCHFIT_DEFINE_ERROR(LengthMismatch, Data);
GARCHFIT_DEFINE_ERROR(NoValidationRows, Data);
GARCHFIT_DEFINE_ERROR(FormatError, Data);

// path-simulator
GARCHFIT_DEFINE_ERROR(NonStationary, Numeric);
GARCHFIT_DEFINE_ERROR(SeriesTooShort, Data);

// fit-pipeline
GARCHFIT_DEFINE_ERROR(KurtosisTooLow, Numeric);
GARCHFIT_DEFINE_ERROR(NegativeRadicand, Numeric);
GARCHFIT_DEFINE_ERROR(BetaOutOfRange, Numeric);
GARCHFIT_DEFINE_ERROR(NonStationaryPair, Numeric);
GARCHFIT_DEFINE_ERROR(MissingStatistic, Data);
GARCHFIT_DEFINE_ERROR(NoRootInRange, Numeric);

// cli-app
GARCHFIT_DEFINE_ERROR(KindMismatch, Data);

#undef GARCHFIT_DEFINE_ERROR

}  // namespace garchfit
