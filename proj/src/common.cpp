#include "cob1/common.hpp"

#include <numeric>

namespace cob1 {

std::string mode_name(Mode m)
{
    return m == Mode::SO ? "so" : "o";
}

Mode parse_mode(const std::string& s)
{
    if (s == "so" || s == "SO")
        return Mode::SO;
    if (s == "o" || s == "O")
        return Mode::O;
    throw std::invalid_argument("unknown mode '" + s + "' (expected 'so' or 'o')");
}

namespace {

std::string join_violations(const std::vector<std::string>& violations)
{
    std::string msg = "invalid covering data";
    for (const auto& v : violations) {
        msg += "; ";
        msg += v;
    }
    return msg;
}

} // namespace

InvalidDataError::InvalidDataError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)),
      violations_(std::move(violations))
{
}

NotInImageError::NotInImageError(const std::string& what)
    : std::runtime_error(what)
{
}

} // namespace cob1
