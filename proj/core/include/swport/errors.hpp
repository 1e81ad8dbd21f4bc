#pragma once

#include <stdexcept>
#include <string>

namespace swport {

// Base class for every error this library raises on purpose.  Each concrete
// class below corresponds to one rejectable input condition; the what() string
// always starts with the error name so a caller can print it as a one-line
// diagnostic without further formatting.
class Error : public std::runtime_error {
public:
    Error(const std::string& name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define SWPORT_DEFINE_ERROR(NAME)                                             \
    class NAME : public Error {                                               \
    public:                                                                   \
        explicit NAME(const std::string& detail) : Error(#NAME, detail) {}    \
    }

// Alignment inputs.
SWPORT_DEFINE_ERROR(EmptySequence);
SWPORT_DEFINE_ERROR(AlphabetMismatch);
SWPORT_DEFINE_ERROR(MatrixTooLarge);

// Kernel batches.
SWPORT_DEFINE_ERROR(EmptyBatch);

// Scheduling.
SWPORT_DEFINE_ERROR(NoWorkers);
SWPORT_DEFINE_ERROR(NoQueries);
SWPORT_DEFINE_ERROR(NoTargets);
SWPORT_DEFINE_ERROR(UnknownWorker);

// Performance model.
SWPORT_DEFINE_ERROR(NonPositiveTime);

// Portability metrics.
SWPORT_DEFINE_ERROR(ZeroPeak);
SWPORT_DEFINE_ERROR(MissingRecord);
SWPORT_DEFINE_ERROR(NoRecords);

// File ingestion.
SWPORT_DEFINE_ERROR(MalformedHeader);
SWPORT_DEFINE_ERROR(EmptyRecord);
SWPORT_DEFINE_ERROR(RaggedMatrix);
SWPORT_DEFINE_ERROR(UnknownSymbolDuplicate);
SWPORT_DEFINE_ERROR(ParseError);

#undef SWPORT_DEFINE_ERROR

} // namespace swport
