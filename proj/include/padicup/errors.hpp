#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace padicup {

// Caller passed mismatched primes, dimensions or otherwise ill-formed input.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed textual input (rational literals, instance files). `where` names
// the offending field or line:column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

// A candidate basis or biorthogonal system failed one or more of its defining
// conditions. Every violated condition is listed, not only the first.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& items) {
        std::string out = "validation failed";
        for (const auto& item : items) {
            out += "\n  - ";
            out += item;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

// x lies outside the unit-norm, full-support set on which the entropy
// diagnostic is defined.
class MembershipError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace padicup
