#pragma once

// Text format for graphs, classes, relations and check commands.
//
//   graph G1 { vertices: 3; edges: (0,1), (1,2); }
//   class K = forb(G1, G2)
//   relation R = noadd(G1, 2)
//   check member(G1, K) expect true
//   check rel(R, {0, 1}, G1) expect false
//
// '#' starts a comment that runs to the end of the line. Input is
// treated as a byte stream, so UTF-8 comments pass through untouched;
// error columns count bytes. The four statement keywords (graph, class,
// relation, check) are reserved; everything else is contextual.
//
// The printer emits one canonical spelling per construct, so
// parse-print-parse is the identity on the printed text.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aeclab/class_spec.hpp"
#include "aeclab/constructions.hpp"
#include "aeclab/graph.hpp"
#include "aeclab/relations.hpp"

namespace aeclab {

struct SourcePos {
    int line = 1;
    int col = 1;
};

struct ParseError : std::runtime_error {
    SourcePos pos;
    ParseError(SourcePos p, const std::string& msg)
        : std::runtime_error("line " + std::to_string(p.line) + ", column " +
                             std::to_string(p.col) + ": " + msg),
          pos(p) {}
};

// ---------------------------------------------------------------------------
// Syntax trees. Name references keep their position so resolution
// failures can point at the offending spot.

struct NameRef {
    std::string name;
    SourcePos pos;
};

struct ExprForm {
    enum class Op { Atom, Not, And, Or, Implies, Iff };
    Op op = Op::Atom;
    NameRef atom;                // Atom only
    std::vector<ExprForm> kids;  // operands otherwise
};

struct ForbForm {
    std::vector<NameRef> names;
};
struct ForbConForm {
    NameRef name;
};
struct CompMaxForm {
    int max_component = 1;
};
struct CompCondForm {
    int min_components = 1;
    int max_component = 1;
};
struct NotAllEmbedForm {
    std::vector<NameRef> names;
};
struct NotBothForm {
    NameRef name;
    std::vector<bool> p, q;
    SourcePos pos;  // of the form keyword, for pattern validation errors
};
struct SentenceForm {
    ExprForm expr;
};

using ClassForm = std::variant<ForbForm, ForbConForm, CompMaxForm, CompCondForm, NotAllEmbedForm,
                               NotBothForm, SentenceForm>;

struct RelForm {
    enum class Kind { Component, ComponentStrict, Induced, ForbBounded, Count, NoAdd, TypeB,
                      FcClique, FcComp };
    Kind kind = Kind::Component;
    NameRef graph;   // absent for the three parameterless kinds
    int number = 0;  // threshold or base size
};

struct GraphDefStmt {
    std::string name;
    SourcePos namepos;
    Graph graph;
};
struct ClassDefStmt {
    std::string name;
    SourcePos namepos;
    ClassForm form;
};
struct RelDefStmt {
    std::string name;
    SourcePos namepos;
    RelForm form;
};

struct MemberCheck {
    NameRef graph;
    NameRef cls;
};
struct RelCheck {
    NameRef rel;
    std::vector<int> verts;
    SourcePos setpos;
    NameRef graph;
};

struct CheckStmt {
    std::variant<MemberCheck, RelCheck> body;
    std::optional<bool> expect;
};

// Built-in graph families usable anywhere a graph name is expected:
// K<n> complete, P<n> path, C<n> cycle (n >= 3), E<n> edgeless.
inline std::optional<Graph> builtin_graph(const std::string& name) {
    if (name.size() < 2) return std::nullopt;
    char kind = name[0];
    if (kind != 'K' && kind != 'P' && kind != 'C' && kind != 'E') return std::nullopt;
    int n = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        n = n * 10 + (name[i] - '0');
        if (n > Graph::kMaxOrder) return std::nullopt;
    }
    switch (kind) {
        case 'K': return gen_complete(n);
        case 'P': return gen_path(n);
        case 'C': return n >= 3 ? std::optional<Graph>(gen_cycle(n)) : std::nullopt;
        default: return gen_edgeless(n);
    }
}

struct SpecFile {
    using Item = std::variant<GraphDefStmt, ClassDefStmt, RelDefStmt, CheckStmt>;
    std::vector<Item> items;

    const GraphDefStmt* find_graph(const std::string& name) const {
        for (const Item& it : items)
            if (const auto* g = std::get_if<GraphDefStmt>(&it))
                if (g->name == name) return g;
        return nullptr;
    }
    const ClassDefStmt* find_class(const std::string& name) const {
        for (const Item& it : items)
            if (const auto* c = std::get_if<ClassDefStmt>(&it))
                if (c->name == name) return c;
        return nullptr;
    }
    const RelDefStmt* find_rel(const std::string& name) const {
        for (const Item& it : items)
            if (const auto* r = std::get_if<RelDefStmt>(&it))
                if (r->name == name) return r;
        return nullptr;
    }

    // File definitions shadow built-ins.
    Graph resolve_graph(const NameRef& ref) const {
        if (const GraphDefStmt* g = find_graph(ref.name)) return g->graph;
        if (auto b = builtin_graph(ref.name)) return *b;
        throw ParseError(ref.pos, "unknown graph name '" + ref.name + "'");
    }
};

// ---------------------------------------------------------------------------
// Lexer

namespace detail {

enum class Tok {
    Name, Number, LBrace, RBrace, LParen, RParen, LBracket, RBracket,
    Comma, Semicolon, Colon, Equals, Bang, Amp, Pipe, Arrow, DArrow, End
};

struct Token {
    Tok kind;
    std::string text;  // Name spelling
    long value = 0;    // Number value
    SourcePos pos;
};

inline const char* token_label(Tok t) {
    switch (t) {
        case Tok::Name: return "name";
        case Tok::Number: return "number";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Semicolon: return "';'";
        case Tok::Colon: return "':'";
        case Tok::Equals: return "'='";
        case Tok::Bang: return "'!'";
        case Tok::Amp: return "'&'";
        case Tok::Pipe: return "'|'";
        case Tok::Arrow: return "'->'";
        case Tok::DArrow: return "'<->'";
        case Tok::End: return "end of input";
    }
    return "?";
}

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    SourcePos pos;
    size_t i = 0;
    auto advance = [&](size_t k) {
        for (size_t j = 0; j < k; ++j, ++i) {
            if (text[i] == '\n') {
                ++pos.line;
                pos.col = 1;
            } else {
                ++pos.col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        SourcePos here = pos;
        auto push = [&](Tok kind, size_t width) {
            out.push_back(Token{kind, {}, 0, here});
            advance(width);
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back(Token{Tok::Name, std::string(text.substr(i, j - i)), 0, here});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            long v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                v = v * 10 + (text[j] - '0');
                if (v > 1000000000L) throw ParseError(here, "number too large");
                ++j;
            }
            out.push_back(Token{Tok::Number, {}, v, here});
            advance(j - i);
            continue;
        }
        switch (c) {
            case '{': push(Tok::LBrace, 1); break;
            case '}': push(Tok::RBrace, 1); break;
            case '(': push(Tok::LParen, 1); break;
            case ')': push(Tok::RParen, 1); break;
            case '[': push(Tok::LBracket, 1); break;
            case ']': push(Tok::RBracket, 1); break;
            case ',': push(Tok::Comma, 1); break;
            case ';': push(Tok::Semicolon, 1); break;
            case ':': push(Tok::Colon, 1); break;
            case '=': push(Tok::Equals, 1); break;
            case '!': push(Tok::Bang, 1); break;
            case '&': push(Tok::Amp, 1); break;
            case '|': push(Tok::Pipe, 1); break;
            case '-':
                if (i + 1 < text.size() && text[i + 1] == '>') {
                    push(Tok::Arrow, 2);
                } else {
                    throw ParseError(here, "expected '->'");
                }
                break;
            case '<':
                if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
                    push(Tok::DArrow, 3);
                } else {
                    throw ParseError(here, "expected '<->'");
                }
                break;
            default:
                throw ParseError(here, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back(Token{Tok::End, {}, 0, pos});
    return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    SpecFile parse_file() {
        SpecFile file;
        while (peek().kind != Tok::End) file.items.push_back(parse_item());
        validate(file);
        return file;
    }

    // A single graph statement covering the whole input.
    GraphDefStmt parse_single_graph() {
        Token kw = expect_name();
        if (kw.text != "graph") throw ParseError(kw.pos, "expected 'graph'");
        GraphDefStmt def = parse_graph_body();
        expect(Tok::End);
        return def;
    }

    // A bare relation or class form (used for command-line literals).
    RelForm parse_single_rel() {
        RelForm form = parse_rel_form();
        expect(Tok::End);
        return form;
    }
    ClassForm parse_single_class() {
        ClassForm form = parse_class_form();
        expect(Tok::End);
        return form;
    }

private:
    const Token& peek(int ahead = 0) const { return toks_[std::min(at_ + ahead, toks_.size() - 1)]; }

    Token next() { return toks_[std::min(at_++, toks_.size() - 1)]; }

    Token expect(Tok kind) {
        Token t = next();
        if (t.kind != kind)
            throw ParseError(t.pos, std::string("expected ") + token_label(kind));
        return t;
    }

    Token expect_name() {
        Token t = next();
        if (t.kind != Tok::Name) throw ParseError(t.pos, "expected name");
        return t;
    }

    static bool is_keyword(const std::string& s) {
        return s == "graph" || s == "class" || s == "relation" || s == "check";
    }

    Token expect_fresh_name() {
        Token t = expect_name();
        if (is_keyword(t.text)) throw ParseError(t.pos, "'" + t.text + "' is a keyword");
        return t;
    }

    NameRef name_ref() {
        Token t = expect_fresh_name();
        return NameRef{t.text, t.pos};
    }

    int expect_number(long lo, long hi, const char* what) {
        Token t = next();
        if (t.kind != Tok::Number) throw ParseError(t.pos, std::string("expected ") + what);
        if (t.value < lo || t.value > hi)
            throw ParseError(t.pos, std::string(what) + " out of range " + std::to_string(lo) +
                                        ".." + std::to_string(hi));
        return static_cast<int>(t.value);
    }

    SpecFile::Item parse_item() {
        Token kw = expect_name();
        if (kw.text == "graph") return parse_graph_body();
        if (kw.text == "class") return parse_class_def();
        if (kw.text == "relation") return parse_rel_def();
        if (kw.text == "check") return parse_check();
        throw ParseError(kw.pos, "expected 'graph', 'class', 'relation' or 'check'");
    }

    GraphDefStmt parse_graph_body() {
        GraphDefStmt def;
        Token name = expect_fresh_name();
        def.name = name.text;
        def.namepos = name.pos;
        expect(Tok::LBrace);
        Token vkw = expect_name();
        if (vkw.text != "vertices") throw ParseError(vkw.pos, "expected 'vertices'");
        expect(Tok::Colon);
        int order = expect_number(0, Graph::kMaxOrder, "vertex count");
        def.graph = Graph(order);
        expect(Tok::Semicolon);
        Token ekw = expect_name();
        if (ekw.text != "edges") throw ParseError(ekw.pos, "expected 'edges'");
        expect(Tok::Colon);
        if (peek().kind != Tok::Semicolon) {
            while (true) {
                expect(Tok::LParen);
                Token ut = next();
                if (ut.kind != Tok::Number) throw ParseError(ut.pos, "expected vertex index");
                expect(Tok::Comma);
                Token vt = next();
                if (vt.kind != Tok::Number) throw ParseError(vt.pos, "expected vertex index");
                expect(Tok::RParen);
                long u = ut.value, v = vt.value;
                if (u >= order) throw ParseError(ut.pos, "vertex index out of range");
                if (v >= order) throw ParseError(vt.pos, "vertex index out of range");
                if (u == v) throw ParseError(ut.pos, "loop edges are not allowed");
                if (def.graph.has_edge(static_cast<int>(u), static_cast<int>(v)))
                    throw ParseError(ut.pos, "duplicate edge");
                def.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
                if (peek().kind != Tok::Comma) break;
                next();
            }
        }
        expect(Tok::Semicolon);
        expect(Tok::RBrace);
        return def;
    }

    ClassDefStmt parse_class_def() {
        ClassDefStmt def;
        Token name = expect_fresh_name();
        def.name = name.text;
        def.namepos = name.pos;
        expect(Tok::Equals);
        def.form = parse_class_form();
        return def;
    }

    ClassForm parse_class_form() {
        Token kw = expect_name();
        const std::string& f = kw.text;
        if (f == "forb") return ForbForm{parse_name_list()};
        if (f == "forbcon") {
            expect(Tok::LParen);
            NameRef g = name_ref();
            expect(Tok::RParen);
            return ForbConForm{g};
        }
        if (f == "compmax") {
            expect(Tok::LParen);
            int n = expect_number(1, Graph::kMaxOrder, "component bound");
            expect(Tok::RParen);
            return CompMaxForm{n};
        }
        if (f == "compcond") {
            expect(Tok::LParen);
            int k = expect_number(1, Graph::kMaxOrder, "component count");
            expect(Tok::Comma);
            int n = expect_number(1, Graph::kMaxOrder, "component bound");
            expect(Tok::RParen);
            return CompCondForm{k, n};
        }
        if (f == "notallembed") return NotAllEmbedForm{parse_name_list()};
        if (f == "notboth") {
            NotBothForm form;
            form.pos = kw.pos;
            expect(Tok::LParen);
            form.name = name_ref();
            expect(Tok::Comma);
            form.p = parse_bit_list();
            expect(Tok::Comma);
            form.q = parse_bit_list();
            expect(Tok::RParen);
            return form;
        }
        if (f == "sentence") {
            expect(Tok::LParen);
            ExprForm e = parse_expr();
            expect(Tok::RParen);
            return SentenceForm{std::move(e)};
        }
        throw ParseError(kw.pos, "unknown class form '" + f + "'");
    }

    std::vector<NameRef> parse_name_list() {
        std::vector<NameRef> names;
        expect(Tok::LParen);
        if (peek().kind != Tok::RParen) {
            names.push_back(name_ref());
            while (peek().kind == Tok::Comma) {
                next();
                names.push_back(name_ref());
            }
        }
        expect(Tok::RParen);
        return names;
    }

    std::vector<bool> parse_bit_list() {
        std::vector<bool> bits;
        expect(Tok::LBracket);
        if (peek().kind != Tok::RBracket) {
            while (true) {
                Token t = next();
                if (t.kind != Tok::Number || (t.value != 0 && t.value != 1))
                    throw ParseError(t.pos, "expected 0 or 1");
                bits.push_back(t.value == 1);
                if (peek().kind != Tok::Comma) break;
                next();
            }
        }
        expect(Tok::RBracket);
        return bits;
    }

    // iff <- imp ('<->' iff)?   (right associative, lowest precedence)
    ExprForm parse_expr() { return parse_iff(); }

    ExprForm parse_iff() {
        ExprForm lhs = parse_imp();
        if (peek().kind == Tok::DArrow) {
            next();
            ExprForm rhs = parse_iff();
            ExprForm e;
            e.op = ExprForm::Op::Iff;
            e.kids.push_back(std::move(lhs));
            e.kids.push_back(std::move(rhs));
            return e;
        }
        return lhs;
    }

    ExprForm parse_imp() {
        ExprForm lhs = parse_or();
        if (peek().kind == Tok::Arrow) {
            next();
            ExprForm rhs = parse_imp();
            ExprForm e;
            e.op = ExprForm::Op::Implies;
            e.kids.push_back(std::move(lhs));
            e.kids.push_back(std::move(rhs));
            return e;
        }
        return lhs;
    }

    ExprForm parse_or() {
        ExprForm lhs = parse_and();
        while (peek().kind == Tok::Pipe) {
            next();
            ExprForm rhs = parse_and();
            ExprForm e;
            e.op = ExprForm::Op::Or;
            e.kids.push_back(std::move(lhs));
            e.kids.push_back(std::move(rhs));
            lhs = std::move(e);
        }
        return lhs;
    }

    ExprForm parse_and() {
        ExprForm lhs = parse_unary();
        while (peek().kind == Tok::Amp) {
            next();
            ExprForm rhs = parse_unary();
            ExprForm e;
            e.op = ExprForm::Op::And;
            e.kids.push_back(std::move(lhs));
            e.kids.push_back(std::move(rhs));
            lhs = std::move(e);
        }
        return lhs;
    }

    ExprForm parse_unary() {
        if (peek().kind == Tok::Bang) {
            next();
            ExprForm e;
            e.op = ExprForm::Op::Not;
            e.kids.push_back(parse_unary());
            return e;
        }
        if (peek().kind == Tok::LParen) {
            next();
            ExprForm e = parse_expr();
            expect(Tok::RParen);
            return e;
        }
        Token t = expect_name();
        if (t.text != "embeds") throw ParseError(t.pos, "expected 'embeds'");
        expect(Tok::LParen);
        NameRef g = name_ref();
        expect(Tok::RParen);
        ExprForm e;
        e.op = ExprForm::Op::Atom;
        e.atom = std::move(g);
        return e;
    }

    RelDefStmt parse_rel_def() {
        RelDefStmt def;
        Token name = expect_fresh_name();
        def.name = name.text;
        def.namepos = name.pos;
        expect(Tok::Equals);
        def.form = parse_rel_form();
        return def;
    }

    RelForm parse_rel_form() {
        Token kw = expect_name();
        const std::string& f = kw.text;
        RelForm form;
        auto graph_arg = [&]() {
            expect(Tok::LParen);
            form.graph = name_ref();
            expect(Tok::RParen);
        };
        auto graph_number_args = [&](const char* what, long lo) {
            expect(Tok::LParen);
            form.graph = name_ref();
            expect(Tok::Comma);
            form.number = expect_number(lo, Graph::kMaxOrder, what);
            expect(Tok::RParen);
        };
        if (f == "component") {
            form.kind = RelForm::Kind::Component;
        } else if (f == "component_strict") {
            form.kind = RelForm::Kind::ComponentStrict;
        } else if (f == "induced") {
            form.kind = RelForm::Kind::Induced;
        } else if (f == "forb_bounded") {
            form.kind = RelForm::Kind::ForbBounded;
            graph_number_args("threshold", 0);
        } else if (f == "count") {
            form.kind = RelForm::Kind::Count;
            graph_arg();
        } else if (f == "noadd") {
            form.kind = RelForm::Kind::NoAdd;
            graph_number_args("base size", 0);
        } else if (f == "typeb") {
            form.kind = RelForm::Kind::TypeB;
            graph_number_args("base size", 0);
        } else if (f == "fc_clique") {
            form.kind = RelForm::Kind::FcClique;
            graph_arg();
        } else if (f == "fc_comp") {
            form.kind = RelForm::Kind::FcComp;
            graph_arg();
        } else {
            throw ParseError(kw.pos, "unknown relation '" + f + "'");
        }
        return form;
    }

    CheckStmt parse_check() {
        CheckStmt stmt;
        Token kw = expect_name();
        if (kw.text == "member") {
            MemberCheck c;
            expect(Tok::LParen);
            c.graph = name_ref();
            expect(Tok::Comma);
            c.cls = name_ref();
            expect(Tok::RParen);
            stmt.body = std::move(c);
        } else if (kw.text == "rel") {
            RelCheck c;
            expect(Tok::LParen);
            c.rel = name_ref();
            expect(Tok::Comma);
            c.setpos = peek().pos;
            expect(Tok::LBrace);
            if (peek().kind != Tok::RBrace) {
                while (true) {
                    int v = expect_number(0, Graph::kMaxOrder - 1, "vertex index");
                    for (int w : c.verts)
                        if (w == v) throw ParseError(c.setpos, "duplicate vertex in set");
                    c.verts.push_back(v);
                    if (peek().kind != Tok::Comma) break;
                    next();
                }
            }
            expect(Tok::RBrace);
            expect(Tok::Comma);
            c.graph = name_ref();
            expect(Tok::RParen);
            stmt.body = std::move(c);
        } else {
            throw ParseError(kw.pos, "expected 'member' or 'rel'");
        }
        if (peek().kind == Tok::Name && peek().text == "expect") {
            next();
            Token b = expect_name();
            if (b.text == "true")
                stmt.expect = true;
            else if (b.text == "false")
                stmt.expect = false;
            else
                throw ParseError(b.pos, "expected 'true' or 'false'");
        }
        return stmt;
    }

    // Post-parse pass: unique names, resolvable references, parameters
    // consistent with the graphs they mention.
    void validate(const SpecFile& file) {
        std::map<std::string, SourcePos> defined;
        auto define = [&](const std::string& name, SourcePos pos) {
            if (defined.count(name)) throw ParseError(pos, "duplicate name '" + name + "'");
            defined.emplace(name, pos);
        };
        for (const SpecFile::Item& item : file.items) {
            if (const auto* g = std::get_if<GraphDefStmt>(&item)) define(g->name, g->namepos);
            if (const auto* c = std::get_if<ClassDefStmt>(&item)) define(c->name, c->namepos);
            if (const auto* r = std::get_if<RelDefStmt>(&item)) define(r->name, r->namepos);
        }
        auto check_graph_ref = [&](const NameRef& ref) { (void)file.resolve_graph(ref); };
        for (const SpecFile::Item& item : file.items) {
            if (const auto* c = std::get_if<ClassDefStmt>(&item)) {
                std::visit(
                    [&](const auto& form) {
                        using T = std::decay_t<decltype(form)>;
                        if constexpr (std::is_same_v<T, ForbForm> ||
                                      std::is_same_v<T, NotAllEmbedForm>) {
                            for (const NameRef& n : form.names) check_graph_ref(n);
                        } else if constexpr (std::is_same_v<T, ForbConForm>) {
                            check_graph_ref(form.name);
                        } else if constexpr (std::is_same_v<T, NotBothForm>) {
                            Graph g = file.resolve_graph(form.name);
                            if (static_cast<int>(form.p.size()) != g.order() ||
                                static_cast<int>(form.q.size()) != g.order())
                                throw ParseError(form.pos,
                                                 "type patterns must have one bit per vertex of '" +
                                                     form.name.name + "'");
                            if (form.p == form.q)
                                throw ParseError(form.pos, "the two type patterns must differ");
                        } else if constexpr (std::is_same_v<T, SentenceForm>) {
                            walk_expr(form.expr, check_graph_ref);
                        }
                    },
                    c->form);
            } else if (const auto* r = std::get_if<RelDefStmt>(&item)) {
                if (r->form.kind != RelForm::Kind::Component &&
                    r->form.kind != RelForm::Kind::ComponentStrict &&
                    r->form.kind != RelForm::Kind::Induced)
                    check_graph_ref(r->form.graph);
            } else if (const auto* k = std::get_if<CheckStmt>(&item)) {
                if (const auto* mc = std::get_if<MemberCheck>(&k->body)) {
                    check_graph_ref(mc->graph);
                    if (!file.find_class(mc->cls.name))
                        throw ParseError(mc->cls.pos, "unknown class name '" + mc->cls.name + "'");
                } else {
                    const auto& rc = std::get<RelCheck>(k->body);
                    if (!file.find_rel(rc.rel.name))
                        throw ParseError(rc.rel.pos, "unknown relation name '" + rc.rel.name + "'");
                    Graph g = file.resolve_graph(rc.graph);
                    for (int v : rc.verts)
                        if (v >= g.order())
                            throw ParseError(rc.setpos, "vertex " + std::to_string(v) +
                                                            " out of range for '" + rc.graph.name +
                                                            "'");
                }
            }
        }
    }

    template <typename F>
    static void walk_expr(const ExprForm& e, F&& f) {
        if (e.op == ExprForm::Op::Atom) {
            f(e.atom);
            return;
        }
        for (const ExprForm& kid : e.kids) walk_expr(kid, f);
    }

    std::vector<Token> toks_;
    size_t at_ = 0;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Entry points

inline SpecFile parse_spec(std::string_view text) { return detail::Parser(text).parse_file(); }

// One graph statement; the whole input must be that statement.
inline GraphDefStmt parse_graph_text(std::string_view text) {
    return detail::Parser(text).parse_single_graph();
}

// ---------------------------------------------------------------------------
// Resolution to semantic values

inline SentenceExpr resolve_expr(const SpecFile& file, const ExprForm& e) {
    if (e.op == ExprForm::Op::Atom)
        return SentenceExpr::atom(e.atom.name, file.resolve_graph(e.atom));
    SentenceExpr out;
    switch (e.op) {
        case ExprForm::Op::Not: out.op = SentenceExpr::Op::Not; break;
        case ExprForm::Op::And: out.op = SentenceExpr::Op::And; break;
        case ExprForm::Op::Or: out.op = SentenceExpr::Op::Or; break;
        case ExprForm::Op::Implies: out.op = SentenceExpr::Op::Implies; break;
        case ExprForm::Op::Iff: out.op = SentenceExpr::Op::Iff; break;
        case ExprForm::Op::Atom: break;  // handled above
    }
    for (const ExprForm& kid : e.kids) out.kids.push_back(resolve_expr(file, kid));
    return out;
}

inline ClassSpec resolve_class(const SpecFile& file, const ClassForm& form) {
    return std::visit(
        [&](const auto& f) -> ClassSpec {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ForbForm>) {
                ForbClass c;
                for (const NameRef& n : f.names) c.family.push_back(file.resolve_graph(n));
                return c;
            } else if constexpr (std::is_same_v<T, ForbConForm>) {
                return ForbConClass{file.resolve_graph(f.name)};
            } else if constexpr (std::is_same_v<T, CompMaxForm>) {
                return CompMaxClass{f.max_component};
            } else if constexpr (std::is_same_v<T, CompCondForm>) {
                return CompCondClass{f.min_components, f.max_component};
            } else if constexpr (std::is_same_v<T, NotAllEmbedForm>) {
                NotAllEmbedClass c;
                for (const NameRef& n : f.names) c.family.push_back(file.resolve_graph(n));
                return c;
            } else if constexpr (std::is_same_v<T, NotBothForm>) {
                return NotBothTypesClass{file.resolve_graph(f.name), f.p, f.q};
            } else {
                return SentenceClass{resolve_expr(file, f.expr)};
            }
        },
        form);
}

// strict_component applies the strict reading to the plain 'component'
// literal; 'component_strict' is strict regardless.
inline SubmodelRelation resolve_rel(const SpecFile& file, const RelForm& form,
                                    bool strict_component = false) {
    switch (form.kind) {
        case RelForm::Kind::Component: return ComponentRel{strict_component};
        case RelForm::Kind::ComponentStrict: return ComponentRel{true};
        case RelForm::Kind::Induced: return InducedSubRel{};
        case RelForm::Kind::ForbBounded:
            return ForbBoundedRel{file.resolve_graph(form.graph), form.number};
        case RelForm::Kind::Count: return CountPreservingRel{file.resolve_graph(form.graph)};
        case RelForm::Kind::NoAdd: return NoAddRel{file.resolve_graph(form.graph), form.number};
        case RelForm::Kind::TypeB:
            return TypeBoundedRel{file.resolve_graph(form.graph), form.number};
        case RelForm::Kind::FcClique: return ForbConCliqueRel{file.resolve_graph(form.graph)};
        case RelForm::Kind::FcComp: return ForbConComponentRel{file.resolve_graph(form.graph)};
    }
    throw InputError("unreachable relation kind");
}

// Command-line literals, resolved against an optional spec file plus the
// built-in families.
inline SubmodelRelation parse_relation_literal(std::string_view text, const SpecFile& env,
                                               bool strict_component = false) {
    return resolve_rel(env, detail::Parser(text).parse_single_rel(), strict_component);
}

inline ClassSpec parse_class_literal(std::string_view text, const SpecFile& env) {
    return resolve_class(env, detail::Parser(text).parse_single_class());
}

// ---------------------------------------------------------------------------
// Canonical printing

inline std::string format_graph(const std::string& name, const Graph& g) {
    std::ostringstream out;
    out << "graph " << name << " { vertices: " << g.order() << "; edges:";
    auto edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        out << (i ? ", " : " ") << '(' << edges[i].first << ',' << edges[i].second << ')';
    out << "; }";
    return out.str();
}

inline std::string format_vertex_list(const std::vector<int>& verts) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < verts.size(); ++i) out << (i ? ", " : "") << verts[i];
    out << '}';
    return out.str();
}

namespace detail {

// Precedence: atoms and '!' bind tightest, then '&', '|', '->', '<->'.
inline int expr_prec(ExprForm::Op op) {
    switch (op) {
        case ExprForm::Op::Atom: return 5;
        case ExprForm::Op::Not: return 4;
        case ExprForm::Op::And: return 3;
        case ExprForm::Op::Or: return 2;
        case ExprForm::Op::Implies: return 1;
        case ExprForm::Op::Iff: return 0;
    }
    return 5;
}

inline void print_expr(std::ostringstream& out, const ExprForm& e, int min_prec) {
    int prec = expr_prec(e.op);
    bool parens = prec < min_prec;
    if (parens) out << '(';
    switch (e.op) {
        case ExprForm::Op::Atom: out << "embeds(" << e.atom.name << ')'; break;
        case ExprForm::Op::Not:
            out << '!';
            print_expr(out, e.kids[0], 4);
            break;
        case ExprForm::Op::And:
        case ExprForm::Op::Or: {
            const char* sym = e.op == ExprForm::Op::And ? " & " : " | ";
            print_expr(out, e.kids[0], prec);  // left associative
            out << sym;
            print_expr(out, e.kids[1], prec + 1);
            break;
        }
        case ExprForm::Op::Implies:
        case ExprForm::Op::Iff: {
            const char* sym = e.op == ExprForm::Op::Implies ? " -> " : " <-> ";
            print_expr(out, e.kids[0], prec + 1);  // right associative
            out << sym;
            print_expr(out, e.kids[1], prec);
            break;
        }
    }
    if (parens) out << ')';
}

inline void print_name_list(std::ostringstream& out, const std::vector<NameRef>& names) {
    out << '(';
    for (size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i].name;
    out << ')';
}

inline void print_bits(std::ostringstream& out, const std::vector<bool>& bits) {
    out << '[';
    for (size_t i = 0; i < bits.size(); ++i) out << (i ? ", " : "") << (bits[i] ? 1 : 0);
    out << ']';
}

}  // namespace detail

inline std::string format_class_form(const ClassForm& form) {
    std::ostringstream out;
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ForbForm>) {
                out << "forb";
                detail::print_name_list(out, f.names);
            } else if constexpr (std::is_same_v<T, ForbConForm>) {
                out << "forbcon(" << f.name.name << ')';
            } else if constexpr (std::is_same_v<T, CompMaxForm>) {
                out << "compmax(" << f.max_component << ')';
            } else if constexpr (std::is_same_v<T, CompCondForm>) {
                out << "compcond(" << f.min_components << ", " << f.max_component << ')';
            } else if constexpr (std::is_same_v<T, NotAllEmbedForm>) {
                out << "notallembed";
                detail::print_name_list(out, f.names);
            } else if constexpr (std::is_same_v<T, NotBothForm>) {
                out << "notboth(" << f.name.name << ", ";
                detail::print_bits(out, f.p);
                out << ", ";
                detail::print_bits(out, f.q);
                out << ')';
            } else {
                out << "sentence(";
                detail::print_expr(out, f.expr, 0);
                out << ')';
            }
        },
        form);
    return out.str();
}

inline std::string format_rel_form(const RelForm& form) {
    std::ostringstream out;
    switch (form.kind) {
        case RelForm::Kind::Component: out << "component"; break;
        case RelForm::Kind::ComponentStrict: out << "component_strict"; break;
        case RelForm::Kind::Induced: out << "induced"; break;
        case RelForm::Kind::ForbBounded:
            out << "forb_bounded(" << form.graph.name << ", " << form.number << ')';
            break;
        case RelForm::Kind::Count: out << "count(" << form.graph.name << ')'; break;
        case RelForm::Kind::NoAdd:
            out << "noadd(" << form.graph.name << ", " << form.number << ')';
            break;
        case RelForm::Kind::TypeB:
            out << "typeb(" << form.graph.name << ", " << form.number << ')';
            break;
        case RelForm::Kind::FcClique: out << "fc_clique(" << form.graph.name << ')'; break;
        case RelForm::Kind::FcComp: out << "fc_comp(" << form.graph.name << ')'; break;
    }
    return out.str();
}

inline std::string print_spec(const SpecFile& file) {
    std::ostringstream out;
    for (const SpecFile::Item& item : file.items) {
        std::visit(
            [&](const auto& it) {
                using T = std::decay_t<decltype(it)>;
                if constexpr (std::is_same_v<T, GraphDefStmt>) {
                    out << format_graph(it.name, it.graph);
                } else if constexpr (std::is_same_v<T, ClassDefStmt>) {
                    out << "class " << it.name << " = " << format_class_form(it.form);
                } else if constexpr (std::is_same_v<T, RelDefStmt>) {
                    out << "relation " << it.name << " = " << format_rel_form(it.form);
                } else {
                    out << "check ";
                    if (const auto* mc = std::get_if<MemberCheck>(&it.body)) {
                        out << "member(" << mc->graph.name << ", " << mc->cls.name << ')';
                    } else {
                        const auto& rc = std::get<RelCheck>(it.body);
                        out << "rel(" << rc.rel.name << ", " << format_vertex_list(rc.verts)
                            << ", " << rc.graph.name << ')';
                    }
                    if (it.expect) out << " expect " << (*it.expect ? "true" : "false");
                }
            },
            item);
        out << '\n';
    }
    return out.str();
}

}  // namespace aeclab
