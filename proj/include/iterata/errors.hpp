#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace iterata {

enum class ErrorCode {
    EmptyInput,
    NotASeries,
    OutOfRange,
    NotAnElement,
    NotIncluded,
    NoComponent,
    IncompatibleEquivalence,
    BadPattern,
    InvalidFrame,
    UnknownName,
    ParseError,
    DegenerateFamily,
    Unclassified,
    EmptyRelation,
    UnknownVocabName,
    RelationSyntax,
    NoScenario,
    InvalidClause,
    MissingCadre,
    EmptyTriggerSeries,
    OverrideOutOfSlot,
    InvalidIteration,
    UnknownLabel,
    InvalidInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised by the CTI parser; position is a byte offset into the normalized input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, std::set<std::string> expected, const std::string& found);
    std::size_t position() const noexcept { return position_; }
    const std::set<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::set<std::string> expected_;
};

} // namespace iterata
