#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netsamp {

// Dense node identifier, 0..|V|-1 after loading. Original string ids live in
// a side table on the Graph.
using NodeId = std::uint32_t;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class UnknownNodeError : public Error {
public:
    explicit UnknownNodeError(NodeId v)
        : Error("unknown node id " + std::to_string(v)) {}
};

// Raised by AccessSession::query when answering would require a fresh query
// past the session budget. walk() absorbs it and flags the trace.
class BudgetExhaustedError : public Error {
public:
    BudgetExhaustedError() : Error("query budget exhausted") {}
};

class DivergenceUndefinedError : public Error {
public:
    DivergenceUndefinedError()
        : Error("KL divergence undefined: zero probability entry without smoothing") {}
};

} // namespace netsamp
