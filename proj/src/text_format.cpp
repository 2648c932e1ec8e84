#include "treetorsor/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace treetorsor {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

int parse_half_id(const std::string& tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        fail(ErrorKind::SyntaxError,
             "line " + std::to_string(line_no) + ": '" + tok + "' is not a half-edge id");
    return value;
}

} // namespace

RibbonGraph parse_graph(std::string_view text) {
    std::vector<RibbonGraph::VertexSpec> rotation;
    std::vector<RibbonGraph::EdgeSpec> pairing;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        auto tok = tokenize(line);
        if (tok.empty()) continue;
        if (tok.size() < 4 || tok[2] != ":")
            fail(ErrorKind::SyntaxError, "line " + std::to_string(line_no) +
                                             ": expected 'vertex <name> : ids...' or 'edge <name> : id id'");
        if (tok[0] == "vertex") {
            RibbonGraph::VertexSpec vs{tok[1], {}};
            for (size_t i = 3; i < tok.size(); ++i) vs.halves.push_back(parse_half_id(tok[i], line_no));
            rotation.push_back(std::move(vs));
        } else if (tok[0] == "edge") {
            if (tok.size() != 5)
                fail(ErrorKind::SyntaxError,
                     "line " + std::to_string(line_no) + ": an edge needs exactly two half-edge ids");
            pairing.push_back(RibbonGraph::EdgeSpec{tok[1], parse_half_id(tok[3], line_no),
                                                    parse_half_id(tok[4], line_no)});
        } else {
            fail(ErrorKind::SyntaxError,
                 "line " + std::to_string(line_no) + ": unknown directive '" + tok[0] + "'");
        }
    }
    return RibbonGraph::build(std::move(rotation), std::move(pairing));
}

RibbonGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::SyntaxError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string serialize_graph(const RibbonGraph& g) {
    std::ostringstream out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "vertex " << g.vertex_name(v) << " :";
        for (int h : g.rotation(v)) out << ' ' << h;
        out << '\n';
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        out << "edge " << g.edge_name(e) << " : " << g.half_at(a, e) << ' ' << g.half_at(b, e) << '\n';
    }
    return out.str();
}

Divisor parse_divisor(const RibbonGraph& g, std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);

    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);

    Divisor d = zero_divisor(g);
    const bool named = s.find('=') != std::string::npos;
    if (named) {
        for (const auto& p : parts) {
            if (p.empty()) continue;
            auto eq = p.find('=');
            if (eq == std::string::npos)
                fail(ErrorKind::SyntaxError, "divisor entry '" + p + "' is missing '='");
            d[g.vertex(p.substr(0, eq))] = std::stoll(p.substr(eq + 1));
        }
    } else {
        if (static_cast<int>(parts.size()) != g.vertex_count())
            fail(ErrorKind::SyntaxError, "positional divisor needs " + std::to_string(g.vertex_count()) +
                                             " coefficients, got " + std::to_string(parts.size()));
        for (size_t i = 0; i < parts.size(); ++i) {
            try {
                d[i] = std::stoll(parts[i]);
            } catch (const std::exception&) {
                fail(ErrorKind::SyntaxError, "'" + parts[i] + "' is not an integer");
            }
        }
    }
    return d;
}

std::string format_divisor(const RibbonGraph& g, const Divisor& d) {
    std::ostringstream out;
    out << '(';
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v) out << ',';
        out << d[v];
    }
    out << ')';
    return out.str();
}

} // namespace treetorsor
