#include "lotkit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace lotkit {

namespace {

bool ident_head(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_tail(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
    enum Kind { langle, rangle, pipe, equals, inverse, ident, end };
    Kind kind;
    std::string text;
    std::size_t offset;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::langle: return "'<'";
        case Token::rangle: return "'>'";
        case Token::pipe: return "'|'";
        case Token::equals: return "'='";
        case Token::inverse: return "'^-1'";
        case Token::ident: return "identifier";
        case Token::end: return "end of input";
    }
    return "?";
}

std::pair<int, int> line_col(std::string_view text, std::size_t offset) {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& msg) {
    auto [line, col] = line_col(text, offset);
    throw SyntaxError(msg, line, col);
}

std::vector<Token> lex_presentation(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (c == '<') { out.push_back({Token::langle, "<", i}); ++i; continue; }
        if (c == '>') { out.push_back({Token::rangle, ">", i}); ++i; continue; }
        if (c == '|') { out.push_back({Token::pipe, "|", i}); ++i; continue; }
        if (c == '=') { out.push_back({Token::equals, "=", i}); ++i; continue; }
        if (c == '^') {
            if (text.substr(i, 3) != "^-1") {
                fail_at(text, i, "expected '^-1'");
            }
            out.push_back({Token::inverse, "^-1", i});
            i += 3;
            continue;
        }
        if (ident_head(c)) {
            std::size_t start = i;
            while (i < text.size() && ident_tail(text[i])) ++i;
            out.push_back({Token::ident, std::string(text.substr(start, i - start)), start});
            continue;
        }
        fail_at(text, i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::end, "", text.size()});
    return out;
}

}  // namespace

LotPresentation parse_presentation(std::string_view text) {
    std::vector<Token> toks = lex_presentation(text);
    std::size_t pos = 0;

    auto peek = [&]() -> const Token& { return toks[pos]; };
    auto expect = [&](Token::Kind kind) -> const Token& {
        if (toks[pos].kind != kind) {
            fail_at(text, toks[pos].offset,
                    std::string("expected ") + token_name(kind) + ", found " +
                        token_name(toks[pos].kind));
        }
        return toks[pos++];
    };

    LotPresentation p;
    expect(Token::langle);

    std::unordered_set<std::string> gens;
    while (peek().kind == Token::ident) {
        const Token& t = toks[pos++];
        if (!gens.insert(t.text).second) {
            fail_at(text, t.offset, "duplicate generator '" + t.text + "'");
        }
        p.generators.push_back(t.text);
    }
    expect(Token::pipe);

    while (peek().kind == Token::ident) {
        const Token& k1 = toks[pos++];
        auto rel_fail = [&](const Token& at, const std::string& msg) {
            auto [line, col] = line_col(text, at.offset);
            throw NonConjugationRelationError("line " + std::to_string(line) + ", col " +
                                              std::to_string(col) + ": " + msg);
        };
        if (peek().kind != Token::ident) rel_fail(peek(), "relation needs the form k i k^-1 = j");
        const Token& i_tok = toks[pos++];
        if (peek().kind != Token::ident) rel_fail(peek(), "relation needs the form k i k^-1 = j");
        const Token& k2 = toks[pos++];
        if (peek().kind != Token::inverse) rel_fail(peek(), "relation needs the form k i k^-1 = j");
        ++pos;
        if (peek().kind != Token::equals) rel_fail(peek(), "relation needs the form k i k^-1 = j");
        ++pos;
        if (peek().kind != Token::ident) rel_fail(peek(), "relation needs the form k i k^-1 = j");
        const Token& j_tok = toks[pos++];

        if (k2.text != k1.text) {
            rel_fail(k2, "conjugator mismatch: '" + k1.text + "' vs '" + k2.text + "'");
        }
        if (i_tok.text == j_tok.text) {
            rel_fail(j_tok, "conjugated generator equals the result ('" + i_tok.text + "')");
        }
        for (const Token* t : {&k1, &i_tok, &j_tok}) {
            if (!gens.count(t->text)) {
                throw UnknownGeneratorError("unknown generator '" + t->text + "'");
            }
        }
        p.relations.push_back({k1.text, i_tok.text, j_tok.text});
    }

    expect(Token::rangle);
    expect(Token::end);
    return p;
}

LogGraph presentation_to_log(const LotPresentation& p) {
    GraphData data;
    data.vertices = p.generators;
    for (const auto& r : p.relations) {
        if (r.left == r.right) {
            throw NonConjugationRelationError("relation conjugates '" + r.left +
                                              "' to itself");
        }
        data.edges.push_back({r.left, r.right, r.conjugator});
    }
    return LogGraph::from_data(data);
}

LotPresentation log_to_presentation(const LogGraph& g) {
    LotPresentation p;
    p.generators = g.vertex_names();
    for (const auto& e : g.edges()) {
        p.relations.push_back({g.vertex_name(e.label), g.vertex_name(e.source),
                               g.vertex_name(e.target)});
    }
    return p;
}

LogGraph parse_lot_file(std::string_view text) {
    GraphData data;
    bool have_vertices = false;
    std::unordered_set<std::string> declared;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
        ++line_no;
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream words{std::string(line)};
        std::vector<std::string> tok;
        for (std::string w; words >> w;) tok.push_back(w);
        if (tok.empty()) continue;

        if (tok[0] == "vertices:") {
            if (have_vertices) throw SyntaxError("second 'vertices:' line", line_no, 1);
            if (tok.size() == 1) throw SyntaxError("'vertices:' needs at least one name", line_no, 1);
            for (std::size_t i = 1; i < tok.size(); ++i) {
                data.vertices.push_back(tok[i]);
                declared.insert(tok[i]);
            }
            have_vertices = true;
        } else if (tok[0] == "edge") {
            if (!have_vertices) throw SyntaxError("'edge' before 'vertices:'", line_no, 1);
            if (tok.size() != 4) {
                throw SyntaxError("'edge' needs exactly three names: edge <src> <dst> <label>",
                                  line_no, 1);
            }
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (!declared.count(tok[i])) {
                    throw SyntaxError("unknown vertex '" + tok[i] + "'", line_no, 1);
                }
            }
            data.edges.push_back({tok[1], tok[2], tok[3]});
        } else {
            throw SyntaxError("expected 'vertices:' or 'edge', found '" + tok[0] + "'", line_no, 1);
        }
    }
    if (!have_vertices) throw SyntaxError("missing 'vertices:' line", line_no, 1);
    return LogGraph::from_data(data);
}

std::string serialize_lot(const LogGraph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& name : g.vertex_names()) out << ' ' << name;
    out << '\n';
    for (const auto& e : g.edges()) {
        out << "edge " << g.vertex_name(e.source) << ' ' << g.vertex_name(e.target) << ' '
            << g.vertex_name(e.label) << '\n';
    }
    return out.str();
}

std::string export_dot(const LogGraph& g, std::span<const int> highlight) {
    std::vector<char> marked(g.vertex_count(), 0);
    for (int v : highlight) {
        if (v < 0 || v >= g.vertex_count()) {
            throw UnknownVertexError("highlight vertex index " + std::to_string(v) +
                                     " out of range");
        }
        marked[v] = 1;
    }
    std::ostringstream out;
    out << "digraph lot {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  \"" << g.vertex_name(v) << '"';
        if (marked[v]) out << " [peripheries=2]";
        out << ";\n";
    }
    for (const auto& e : g.edges()) {
        out << "  \"" << g.vertex_name(e.source) << "\" -> \"" << g.vertex_name(e.target)
            << "\" [label=\"" << g.vertex_name(e.label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace lotkit
