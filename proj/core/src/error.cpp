#include "loiqif/error.hpp"

#include <utility>

namespace loiqif {

namespace {

std::string format_parse_error(SourcePos pos, const std::string& message,
                               const std::vector<std::string>& expected)
{
    std::string out = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
    if (!expected.empty()) {
        out += " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) {
                out += i + 1 == expected.size() ? " or " : ", ";
            }
            out += expected[i];
        }
        out += ")";
    }
    return out;
}

} // namespace

ParseError::ParseError(SourcePos pos, std::string message, std::vector<std::string> expected)
    : Error(format_parse_error(pos, message, expected))
    , pos_(pos)
    , expected_(std::move(expected))
{
}

} // namespace loiqif
