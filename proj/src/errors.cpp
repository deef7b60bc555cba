#include "iterata/errors.hpp"

namespace iterata {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotASeries: return "NotASeries";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotAnElement: return "NotAnElement";
    case ErrorCode::NotIncluded: return "NotIncluded";
    case ErrorCode::NoComponent: return "NoComponent";
    case ErrorCode::IncompatibleEquivalence: return "IncompatibleEquivalence";
    case ErrorCode::BadPattern: return "BadPattern";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::Unclassified: return "Unclassified";
    case ErrorCode::EmptyRelation: return "EmptyRelation";
    case ErrorCode::UnknownVocabName: return "UnknownVocabName";
    case ErrorCode::RelationSyntax: return "RelationSyntax";
    case ErrorCode::NoScenario: return "NoScenario";
    case ErrorCode::InvalidClause: return "InvalidClause";
    case ErrorCode::MissingCadre: return "MissingCadre";
    case ErrorCode::EmptyTriggerSeries: return "EmptyTriggerSeries";
    case ErrorCode::OverrideOutOfSlot: return "OverrideOutOfSlot";
    case ErrorCode::InvalidIteration: return "InvalidIteration";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {
std::string describe(std::size_t position, const std::set<std::string>& expected,
                     const std::string& found) {
    std::string msg = "parse error at " + std::to_string(position) + ": found '" + found + "', expected one of {";
    bool first = true;
    for (const auto& e : expected) {
        if (!first) msg += ", ";
        msg += e;
        first = false;
    }
    return msg + "}";
}
} // namespace

ParseError::ParseError(std::size_t position, std::set<std::string> expected, const std::string& found)
    : Error(ErrorCode::ParseError, describe(position, expected, found)),
      position_(position),
      expected_(std::move(expected)) {}

} // namespace iterata
