#ifndef SOCREC_ERRORS_HPP
#define SOCREC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace socrec {

// Base class for all recoverable data/usage errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DuplicateRating : public Error {
public:
    DuplicateRating(const std::string& user, const std::string& item)
        : Error("duplicate rating for (" + user + ", " + item + ")") {}
    DuplicateRating(const std::string& user, const std::string& item, std::size_t line)
        : Error("line " + std::to_string(line) + ": duplicate rating for (" + user + ", " + item +
                ")") {}
};

class UnknownUser : public Error {
public:
    explicit UnknownUser(const std::string& user) : Error("unknown user: " + user) {}
};

class UnknownItem : public Error {
public:
    explicit UnknownItem(const std::string& item) : Error("unknown item: " + item) {}
};

class EmptySupport : public Error {
public:
    EmptySupport() : Error("mean requested over an empty item set") {}
};

class InvalidK : public Error {
public:
    explicit InvalidK(const std::string& what) : Error(what) {}
};

class NotClustered : public Error {
public:
    explicit NotClustered(const std::string& user)
        : Error("user not in any cluster: " + user) {}
};

class ColdStartUnresolvable : public Error {
public:
    explicit ColdStartUnresolvable(const std::string& user)
        : Error("no clustered social neighbor for user: " + user) {}
};

class InvalidConfig : public Error {
public:
    explicit InvalidConfig(const std::string& what) : Error(what) {}
};

class NotEvaluable : public Error {
public:
    NotEvaluable() : Error("user has no relevant held-out items") {}
};

} // namespace socrec

#endif
