#pragma once
#include <stdexcept>
#include <string>

namespace gridcycle {

enum class Errc {
    EmptyGraph,
    NotTwoConnected,
    VertexNotOnCycle,
    NoCycle,
    PreconditionViolated,
    MissingFreeVertex,     // conversion could not find a usable free vertex (bug trap)
    NoMergeConfiguration,  // no valid merge site between two cycles (bug trap)
    BudgetExceeded,
    InvalidParameters,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::NotTwoConnected: return "NotTwoConnected";
    case Errc::VertexNotOnCycle: return "VertexNotOnCycle";
    case Errc::NoCycle: return "NoCycle";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::MissingFreeVertex: return "MissingFreeVertex";
    case Errc::NoMergeConfiguration: return "NoMergeConfiguration";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace gridcycle
