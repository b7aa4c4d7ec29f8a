#pragma once

#include <stdexcept>
#include <string>

namespace canonlab {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list / construction rejects.
struct RejectLoop : GraphError {
    explicit RejectLoop(int v)
        : GraphError("self-loop at vertex " + std::to_string(v)), vertex(v) {}
    int vertex;
};

struct RejectRange : GraphError {
    RejectRange(int v, int n)
        : GraphError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(n) + ")"),
          vertex(v), n(n) {}
    int vertex;
    int n;
};

struct ParseError : GraphError {
    ParseError(int line, const std::string& what)
        : GraphError("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

struct CountMismatch : GraphError {
    CountMismatch(long declared, long seen)
        : GraphError("declared " + std::to_string(declared) + " edges, saw " +
                     std::to_string(seen)),
          declared(declared), seen(seen) {}
    long declared;
    long seen;
};

// Structural preconditions.
struct NotATree : GraphError {
    using GraphError::GraphError;
};

struct NotUnicyclic : GraphError {
    using GraphError::GraphError;
};

struct PureCycleComponent : GraphError {
    PureCycleComponent(int v, int length)
        : GraphError("component of vertex " + std::to_string(v) +
                     " is a bare cycle of length " + std::to_string(length)),
          vertex(v), length(length) {}
    int vertex;
    int length;
};

// Search / sampling limits.
struct TooLarge : GraphError {
    using GraphError::GraphError;
};

struct OddSum : GraphError {
    using GraphError::GraphError;
};

struct RunawayTree : GraphError {
    using GraphError::GraphError;
};

struct BadLambda : GraphError {
    using GraphError::GraphError;
};

}  // namespace canonlab
