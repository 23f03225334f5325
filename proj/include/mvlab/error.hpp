#pragma once

#include <stdexcept>
#include <string>

namespace mvlab {

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Two routes that must agree exactly did not, or a structural invariant broke.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed persisted data. Carries the 1-based line number (0 if not line specific).
class format_error : public std::runtime_error {
public:
    format_error(std::size_t line, const std::string& message, const std::string& source = {})
        : std::runtime_error(compose(line, message, source)), line_(line), message_(message)
    {
    }

    std::size_t line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

    // Same error attributed to a named source, e.g. a file path.
    format_error in(const std::string& source) const { return format_error(line_, message_, source); }

private:
    static std::string compose(std::size_t line, const std::string& message, const std::string& source)
    {
        std::string out = source.empty() ? std::string() : source + ": ";
        if (line != 0) {
            out += "line " + std::to_string(line) + ": ";
        }
        return out + message;
    }

    std::size_t line_;
    std::string message_;
};

} // namespace mvlab
