#pragma once

#include <string>
#include <vector>

namespace glinv {

/// Error with a machine-readable kind; the CLI maps kinds to exit codes.
class Error : public std::exception {
public:
    enum class Kind { Parse, Disconnected, NotColorable, MultiComponent, Internal };

    Error(Kind kind, std::string msg) : kind_(kind), msg_(std::move(msg)) {}
    Kind kind() const { return kind_; }
    const char* what() const noexcept override { return msg_.c_str(); }

private:
    Kind kind_;
    std::string msg_;
};

enum class Pass : char { Over = 'O', Under = 'U' };

struct GaussSymbol {
    Pass pass;
    int crossing_id;  // positive
    int sign;         // +1 or -1
};

/// One symbol sequence per component. A 0-crossing unknot component is an
/// empty sequence (written "()").
struct GaussCode {
    std::vector<std::vector<GaussSymbol>> components;

    int crossing_count() const;
};

/// Grammar: components separated by ';', symbols `[OU][1-9][0-9]*[+-]`,
/// "()" for a 0-crossing unknot component, whitespace ignored, '#' starts a
/// comment line. Throws Error::Kind::Parse with a position on bad input.
GaussCode parse_gauss_code(const std::string& text);

std::string to_string(const GaussCode& code);

}  // namespace glinv
