#include "hypotree/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hypotree {

namespace {

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

Tree parse_edge_list(const std::string& text) {
    std::vector<Edge> edges;
    int declared_n = -1;
    int max_index = -1;
    int lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string first, second, extra;
        if (!(ls >> first))
            continue; // blank
        if (first.rfind("n=", 0) == 0) {
            if (!parse_int(std::string_view(first).substr(2), declared_n) || (ls >> extra))
                throw Error(errc::parse_error, "line " + std::to_string(lineno) + ": bad header");
            continue;
        }
        int u, v;
        if (!(ls >> second) || (ls >> extra) || !parse_int(first, u) || !parse_int(second, v))
            throw Error(errc::parse_error,
                        "line " + std::to_string(lineno) + ": expected two vertex indices");
        if (u < 0 || v < 0)
            throw Error(errc::parse_error,
                        "line " + std::to_string(lineno) + ": negative vertex index");
        edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_index + 1;
    if (n <= 0)
        throw Error(errc::parse_error, "no edges and no n= header");
    return Tree(n, edges);
}

std::string serialize_edge_list(const Tree& t) {
    std::ostringstream out;
    if (t.order() == 1)
        out << "n=1\n";
    for (auto [u, v] : t.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_dot(const Tree& t) {
    std::ostringstream out;
    out << "graph tree {\n";
    if (t.order() == 1)
        out << "  0;\n";
    for (auto [u, v] : t.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace hypotree
