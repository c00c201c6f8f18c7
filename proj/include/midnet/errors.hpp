#ifndef MIDNET_ERRORS_HPP
#define MIDNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace midnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateLabel : Error {
    explicit DuplicateLabel(const std::string& label)
        : Error("duplicate label: " + label), label(label) {}
    std::string label;
};

struct UnknownEndpoint : Error {
    explicit UnknownEndpoint(const std::string& label)
        : Error("unknown arc endpoint: " + label), label(label) {}
    std::string label;
};

struct SelfLoop : Error {
    explicit SelfLoop(const std::string& label)
        : Error("self-loop arc at: " + label), label(label) {}
    std::string label;
};

struct DuplicateArc : Error {
    DuplicateArc(const std::string& from, const std::string& to)
        : Error("duplicate arc: " + from + " -> " + to), from(from), to(to) {}
    std::string from, to;
};

struct InvalidNode : Error {
    using Error::Error;
};

struct SameNode : Error {
    SameNode() : Error("operation requires two distinct nodes") {}
};

struct NotIntermediary : Error {
    explicit NotIntermediary(const std::string& label)
        : Error("node is not an intermediary: " + label), label(label) {}
    std::string label;
};

struct TargetInSet : Error {
    explicit TargetInSet(const std::string& label)
        : Error("contesting set contains the target node: " + label), label(label) {}
    std::string label;
};

struct NotMiddleman : Error {
    explicit NotMiddleman(const std::string& label)
        : Error("node is not a middleman: " + label), label(label) {}
    std::string label;
};

struct NotStronglyConnected : Error {
    NotStronglyConnected() : Error("network is not strongly connected") {}
};

struct ParseError : Error {
    ParseError(int line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

struct DatasetMissing : Error {
    using Error::Error;
};

struct ChecksumMismatch : Error {
    using Error::Error;
};

struct SearchBudgetExceeded : Error {
    SearchBudgetExceeded(const std::string& what, int best_lower, int best_upper)
        : Error(what), best_lower(best_lower), best_upper(best_upper) {}
    int best_lower;  // no solution exists below this size
    int best_upper;  // a valid (possibly non-minimal) solution of this size exists
};

struct NonConvergence : Error {
    NonConvergence(const std::string& solver, int iterations)
        : Error(solver + " failed to converge after " + std::to_string(iterations) +
                " iterations"),
          iterations(iterations) {}
    int iterations;
};

}  // namespace midnet

#endif
