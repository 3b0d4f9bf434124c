#include "dicolor/formats.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "dicolor/errors.hpp"

namespace dicolor {

namespace {

// Reads the next non-blank, non-comment line; returns false at end of input.
bool next_data_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        return true;
    }
    return false;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string tail;
    if (!(ss >> a >> b)) return false;
    if (ss >> tail) return false;
    return true;
}

} // namespace

Digraph parse_digraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_data_line(in, line, lineno)) throw ParseError(lineno, "missing header line");
    long long n, m;
    if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
        throw ParseError(lineno, "malformed header, expected \"n m\": " + line);

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, lineno))
            throw ParseError(lineno, "arc count mismatch: expected " + std::to_string(m) +
                                         " arcs, found " + std::to_string(i));
        long long u, v;
        if (!parse_two_ints(line, u, v))
            throw ParseError(lineno, "malformed arc line, expected \"u v\": " + line);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex id out of range [0, " + std::to_string(n) +
                                         "): " + line);
        if (u == v) throw ParseError(lineno, "loop arc: " + line);
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(in, line, lineno))
        throw ParseError(lineno, "arc count mismatch: data after " + std::to_string(m) +
                                     " arcs: " + line);

    std::sort(arcs.begin(), arcs.end());
    auto dup = std::adjacent_find(arcs.begin(), arcs.end());
    if (dup != arcs.end())
        throw ParseError(lineno, "duplicate arc (" + std::to_string(dup->first) + ", " +
                                     std::to_string(dup->second) + ")");
    return Digraph(static_cast<int>(n), arcs);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    d.for_each_arc([&](int u, int v) { out << u << ' ' << v << '\n'; });
}

PartialColoring parse_coloring(std::istream& in, int n, int palette_override) {
    std::string line;
    int lineno = 0;
    std::vector<int> colors(n, PartialColoring::kUncolored);
    std::vector<uint8_t> seen(n, 0);
    int max_color = -1;
    for (int i = 0; i < n; ++i) {
        if (!next_data_line(in, line, lineno))
            throw ParseError(lineno, "expected " + std::to_string(n) + " coloring lines, found " +
                                         std::to_string(i));
        std::istringstream ss(line);
        long long v;
        std::string color_tok, tail;
        if (!(ss >> v >> color_tok) || (ss >> tail))
            throw ParseError(lineno, "malformed coloring line, expected \"v c\" or \"v -\": " + line);
        if (v < 0 || v >= n)
            throw ParseError(lineno, "vertex id out of range [0, " + std::to_string(n) + "): " + line);
        if (seen[v]) throw ParseError(lineno, "vertex " + std::to_string(v) + " listed twice");
        seen[v] = 1;
        if (color_tok == "-") continue;
        try {
            size_t pos = 0;
            long long c = std::stoll(color_tok, &pos);
            if (pos != color_tok.size() || c < 0) throw std::invalid_argument("");
            colors[v] = static_cast<int>(c);
            max_color = std::max(max_color, static_cast<int>(c));
        } catch (const std::exception&) {
            throw ParseError(lineno, "malformed color value: " + color_tok);
        }
    }
    if (next_data_line(in, line, lineno))
        throw ParseError(lineno, "data after " + std::to_string(n) + " coloring lines: " + line);

    PartialColoring pc;
    pc.colors = std::move(colors);
    pc.palette_size = max_color + 1;
    if (palette_override >= 0) {
        if (palette_override < pc.palette_size)
            throw ParseError(lineno, "palette override " + std::to_string(palette_override) +
                                         " smaller than largest color " + std::to_string(max_color));
        pc.palette_size = palette_override;
    }
    return pc;
}

void write_coloring(std::ostream& out, const PartialColoring& coloring) {
    for (int v = 0; v < coloring.size(); ++v) {
        out << v << ' ';
        if (coloring.is_colored(v))
            out << coloring.colors[v];
        else
            out << '-';
        out << '\n';
    }
}

ListAssignment parse_lists(std::istream& in, int n) {
    std::string line;
    int lineno = 0;
    ListAssignment la;
    la.lists.assign(n, {});
    std::vector<uint8_t> seen(n, 0);
    int max_color = -1;
    for (int i = 0; i < n; ++i) {
        if (!next_data_line(in, line, lineno))
            throw ParseError(lineno, "expected " + std::to_string(n) + " list lines, found " +
                                         std::to_string(i));
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, "malformed list line, expected \"v: c1 c2 ...\": " + line);
        long long v;
        {
            std::istringstream ss(line.substr(0, colon));
            std::string tail;
            if (!(ss >> v) || (ss >> tail))
                throw ParseError(lineno, "malformed vertex id before ':': " + line);
        }
        if (v < 0 || v >= n)
            throw ParseError(lineno, "vertex id out of range [0, " + std::to_string(n) + "): " + line);
        if (seen[v]) throw ParseError(lineno, "vertex " + std::to_string(v) + " listed twice");
        seen[v] = 1;
        std::istringstream ss(line.substr(colon + 1));
        long long c;
        std::vector<int> list;
        while (ss >> c) {
            if (c < 0) throw ParseError(lineno, "negative color: " + line);
            list.push_back(static_cast<int>(c));
            max_color = std::max(max_color, static_cast<int>(c));
        }
        if (!ss.eof()) throw ParseError(lineno, "malformed color value: " + line);
        if (list.empty()) throw ParseError(lineno, "empty color list: " + line);
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw ParseError(lineno, "duplicate color in list: " + line);
        la.lists[v] = std::move(list);
    }
    if (next_data_line(in, line, lineno))
        throw ParseError(lineno, "data after " + std::to_string(n) + " list lines: " + line);
    la.universe = max_color + 1;
    return la;
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
    for (int v = 0; v < lists.size(); ++v) {
        out << v << ':';
        for (int c : lists.lists[v]) out << ' ' << c;
        out << '\n';
    }
}

void validate_lists(const ListAssignment& lists) {
    for (int v = 0; v < lists.size(); ++v) {
        const auto& l = lists.lists[v];
        if (l.empty())
            throw std::invalid_argument("empty color list for vertex " + std::to_string(v));
        for (size_t i = 0; i < l.size(); ++i) {
            if (l[i] < 0 || l[i] >= lists.universe)
                throw std::invalid_argument("color out of universe for vertex " + std::to_string(v));
            if (i > 0 && l[i] <= l[i - 1])
                throw std::invalid_argument("list not sorted/duplicate-free for vertex " +
                                            std::to_string(v));
        }
    }
}

} // namespace dicolor
