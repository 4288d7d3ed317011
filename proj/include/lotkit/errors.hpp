#pragma once

#include <stdexcept>
#include <string>

namespace lotkit {

/// Base class of every failure lotkit raises deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parser failure with a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}

    int line;
    int column;
};

class MalformedGraphError : public Error {
public:
    using Error::Error;
};

class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

class UnknownVertexError : public Error {
public:
    using Error::Error;
};

class UnknownEdgeError : public Error {
public:
    using Error::Error;
};

class UnknownGeneratorError : public Error {
public:
    using Error::Error;
};

class NonConjugationRelationError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

class NotTreeError : public Error {
public:
    using Error::Error;
};

class NotInteriorReducedError : public Error {
public:
    using Error::Error;
};

class EdgeIsCoveredError : public Error {
public:
    using Error::Error;
};

class NameClashError : public Error {
public:
    using Error::Error;
};

class InvalidSizeError : public Error {
public:
    using Error::Error;
};

class SizeTooLargeError : public Error {
public:
    using Error::Error;
};

class GraphTooLargeError : public Error {
public:
    using Error::Error;
};

}  // namespace lotkit
