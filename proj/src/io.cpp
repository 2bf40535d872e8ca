#include "coverideal/io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace coverideal {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
}

graph parse_edges(const std::string& text) {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    auto vid = [&](const std::string& s) {
        auto [it, fresh] = index.emplace(s, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(s);
        return it->second;
    };
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() == 1) {
            vid(toks[0]);
        } else if (toks.size() == 2) {
            int u = vid(toks[0]), v = vid(toks[1]);
            if (u == v) parse_fail(lineno, "self-loop at '" + toks[0] + "'");
            edges.emplace_back(u, v);
        } else {
            parse_fail(lineno, "expected one or two labels, got " + std::to_string(toks.size()));
        }
    }
    // labels.size() must be read before the move below
    int n = static_cast<int>(labels.size());
    return graph(n, edges, std::move(labels));
}

int parse_int(const std::string& s, int lineno) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        parse_fail(lineno, "bad integer '" + s + "'");
    }
}

graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) parse_fail(lineno, "second p-line");
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
                parse_fail(lineno, "expected 'p edge <n> <m>'");
            n = parse_int(toks[2], lineno);
        } else if (toks[0] == "e") {
            if (n < 0) parse_fail(lineno, "e-line before p-line");
            if (toks.size() != 3) parse_fail(lineno, "expected 'e <u> <v>'");
            int u = parse_int(toks[1], lineno), v = parse_int(toks[2], lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                parse_fail(lineno, "endpoint out of range 1.." + std::to_string(n));
            if (u == v) parse_fail(lineno, "self-loop at " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
        } else {
            parse_fail(lineno, "unknown record '" + toks[0] + "'");
        }
    }
    if (n < 0) throw std::invalid_argument("dimacs input has no p-line");
    return graph(n, edges);
}

bool looks_like_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> toks = tokenize(line);
        if (toks.size() == 4 && toks[0] == "p" && (toks[1] == "edge" || toks[1] == "col"))
            return true;
    }
    return false;
}

} // namespace

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

parsed_input parse_graph(const std::string& text, graph_format f) {
    if (f == graph_format::autodetect)
        f = looks_like_dimacs(text) ? graph_format::dimacs : graph_format::edges;
    parsed_input r{f == graph_format::dimacs ? parse_dimacs(text) : parse_edges(text),
                   fnv1a64_hex(text)};
    return r;
}

parsed_input read_graph_file(const std::string& path, graph_format f) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return parse_graph(buf.str(), f);
}

std::vector<std::string> label_list(const graph& g, vertex_set s) {
    std::vector<std::string> out;
    for (int v : s) out.push_back(g.label[v]);
    return out;
}

std::string monomial_string(const graph& g, vertex_set s) {
    if (s.empty()) return "1";
    bool compact = true;
    for (const std::string& l : g.label)
        if (l.size() != 1) compact = false;
    std::string out;
    for (int v : s) {
        if (!compact && !out.empty()) out += '*';
        out += g.label[v];
    }
    return out;
}

} // namespace coverideal
