#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "totdom/vertex_set.hpp"

namespace totdom {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad vertex id, wrong graph class, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Malformed graph6 or edge-list input. `line` is 1-based, `offset` is a 0-based byte column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t offset)
        : Error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " + what),
          line_(line),
          offset_(offset) {}

    std::size_t line() const { return line_; }
    std::size_t offset() const { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

/// The quantity is undefined on this graph, e.g. total domination with an isolated vertex.
class DomainError : public Error {
public:
    DomainError(const std::string& what, Vertex vertex) : Error(what), vertex_(vertex) {}
    Vertex vertex() const { return vertex_; }

private:
    Vertex vertex_;
};

/// The exponential oracle refuses graphs above its configured order cap.
class OracleCapError : public Error {
public:
    OracleCapError(int order, int cap)
        : Error("oracle cap exceeded: graph has " + std::to_string(order) + " vertices, cap is " +
                std::to_string(cap)),
          order_(order),
          cap_(cap) {}
    int order() const { return order_; }
    int cap() const { return cap_; }

private:
    int order_;
    int cap_;
};

/// A classifier was applied outside its graph class; carries the offending induced embedding.
class EligibilityError : public Error {
public:
    EligibilityError(const std::string& what, std::string pattern, std::vector<Vertex> embedding)
        : Error(what), pattern_(std::move(pattern)), embedding_(std::move(embedding)) {}
    const std::string& pattern() const { return pattern_; }
    const std::vector<Vertex>& embedding() const { return embedding_; }

private:
    std::string pattern_;
    std::vector<Vertex> embedding_;
};

}  // namespace totdom
