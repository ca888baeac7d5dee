#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "vec.hpp"

// Generator and element grammar.
//   dimension 1:  "31,47,57"
//   general:      "1 0; 1 3; 1 5; 1 7"   (one generator per semicolon row)
//   elements:     "564"  or  "12 564"    (space separated coordinates)

namespace catena {

namespace detail {

inline std::int64_t parse_int(std::string_view tok) {
    std::int64_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
        fail(errc::bad_input, "not an integer: '" + std::string(tok) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find_first_of(seps, i);
        if (j == std::string_view::npos) j = s.size();
        std::string_view tok = s.substr(i, j - i);
        std::size_t b = tok.find_first_not_of(" \t\r\n");
        if (b != std::string_view::npos) {
            std::size_t e = tok.find_last_not_of(" \t\r\n");
            out.push_back(tok.substr(b, e - b + 1));
        }
        i = j + 1;
    }
    return out;
}

} // namespace detail

inline IntMatrix parse_generators(std::string_view text) {
    IntMatrix rows;
    if (text.find(';') != std::string_view::npos) {
        for (auto row : detail::split(text, ";")) {
            IntVector r;
            for (auto tok : detail::split(row, " \t")) r.push_back(detail::parse_int(tok));
            if (!r.empty()) rows.push_back(std::move(r));
        }
    } else if (text.find(',') != std::string_view::npos) {
        for (auto tok : detail::split(text, ","))
            rows.push_back(IntVector{detail::parse_int(tok)});
    } else {
        IntVector r;
        for (auto tok : detail::split(text, " \t")) r.push_back(detail::parse_int(tok));
        if (!r.empty()) rows.push_back(std::move(r));
    }
    if (rows.empty()) fail(errc::bad_input, "no generators given");
    return rows;
}

inline IntVector parse_element(std::string_view text, std::size_t dim) {
    IntVector x;
    for (auto tok : detail::split(text, " \t,")) x.push_back(detail::parse_int(tok));
    if (x.size() != dim)
        fail(errc::bad_input, "element has " + std::to_string(x.size()) + " coordinates, expected " +
                                  std::to_string(dim));
    return x;
}

inline std::string format_generators(const IntMatrix& rows) {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += "; ";
        out += to_string(rows[i]);
    }
    return out;
}

} // namespace catena
