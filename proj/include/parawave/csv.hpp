#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

namespace parawave::csv {

/// 17 significant digits, '.' as decimal separator regardless of locale.
[[nodiscard]] inline std::string number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    for (char& c : s)
        if (c == ',')
            c = '.';
    return s;
}

[[nodiscard]] inline std::string number(std::optional<double> v) { return v ? number(*v) : std::string{}; }

[[nodiscard]] inline std::string integer(std::optional<int> v) { return v ? std::to_string(*v) : std::string{}; }

/// Writes one record; fields never contain separators, so no quoting is needed.
template <class... Fields>
void row(std::ostream& os, const Fields&... fields)
{
    bool first = true;
    ((os << (first ? "" : ",") << fields, first = false), ...);
    os << '\n';
}

} // namespace parawave::csv
