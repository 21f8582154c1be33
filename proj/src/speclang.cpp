#include "padfit/speclang.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "padfit/builders.hpp"
#include "padfit/combinators.hpp"
#include "padfit/error.hpp"

namespace padfit::speclang {

namespace {

enum class Tok { Ident, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourcePos pos;
};

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::Punct: return "'" + t.text + "'";
    case Tok::End: return "end of input";
    }
    return "?";
}

[[noreturn]] void syntax_error(const SourcePos& pos, const std::string& msg) {
    throw Error(ErrorCode::SyntaxError, msg, pos.line, pos.column);
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            Token t;
            t.pos = {line_, column_};
            if (at_end()) {
                out.push_back(std::move(t));
                return out;
            }
            const char c = peek();
            if (ident_start(c)) {
                t.kind = Tok::Ident;
                while (!at_end() && ident_char(peek())) {
                    t.text += advance();
                }
            } else if (c == '-' && peek(1) == '>') {
                t.kind = Tok::Punct;
                t.text = "->";
                advance();
                advance();
            } else if (std::string_view("{}():;*-,").find(c) != std::string_view::npos) {
                t.kind = Tok::Punct;
                t.text = std::string(1, advance());
            } else {
                std::ostringstream msg;
                if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f) {
                    msg << "unexpected byte 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(c));
                } else {
                    msg << "unexpected character '" << c << "'";
                }
                syntax_error(t.pos, msg.str());
            }
            out.push_back(std::move(t));
        }
    }

private:
    static bool ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
    static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

    bool at_end() const { return i_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const { return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0'; }

    char advance() {
        const char c = text_[i_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_blank() {
        while (!at_end()) {
            const char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') {
                    advance();
                }
            } else {
                return;
            }
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    int line_ = 1;
    int column_ = 1;
};

const std::unordered_map<std::string_view, Expr::Kind>& call_forms() {
    static const std::unordered_map<std::string_view, Expr::Kind> forms{
        {"maybe", Expr::Kind::Maybe},     {"choose1", Expr::Kind::Choose1}, {"atmost1", Expr::Kind::AtMost1},
        {"combo", Expr::Kind::Combo},     {"pairs", Expr::Kind::Pairs},     {"dpad8", Expr::Kind::Dpad8},
        {"stick4", Expr::Kind::Stick4},   {"face2", Expr::Kind::Face2},     {"face4", Expr::Kind::Face4},
        {"face6", Expr::Kind::Face6},     {"triggers", Expr::Kind::Triggers},
    };
    return forms;
}

struct RawMapping {
    Ident name;
    Ident controller;
    Ident game;
    std::vector<std::pair<Ident, Ident>> pairs;
};

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

    Expr expr_only() {
        Expr e = expr();
        if (cur().kind != Tok::End) {
            fail("end of input");
        }
        return e;
    }

    Document document() {
        Document doc;
        std::vector<RawMapping> raw;
        while (cur().kind != Tok::End) {
            if (is_word("controller")) {
                advance();
                auto fam = family_block("inputs", "allow");
                if (doc.find_controller(fam.first.name)) {
                    duplicate(fam.first);
                }
                doc.controllers.push_back(std::move(fam.second));
            } else if (is_word("game")) {
                advance();
                auto fam = family_block("actions", "require");
                if (doc.find_game(fam.first.name)) {
                    duplicate(fam.first);
                }
                doc.games.push_back(std::move(fam.second));
            } else if (is_word("mapping")) {
                advance();
                raw.push_back(mapping_block());
            } else {
                fail("'controller', 'game' or 'mapping'");
            }
        }
        resolve(doc, raw);
        return doc;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    Token advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool is_word(std::string_view w) const { return cur().kind == Tok::Ident && cur().text == w; }
    bool is_punct(std::string_view p) const { return cur().kind == Tok::Punct && cur().text == p; }

    [[noreturn]] void fail(const std::string& expected) const {
        syntax_error(cur().pos, "expected " + expected + ", found " + describe(cur()));
    }

    [[noreturn]] static void duplicate(const Ident& id) {
        throw Error(ErrorCode::DuplicateName, id.name, id.pos.line, id.pos.column);
    }

    void expect_punct(std::string_view p) {
        if (!is_punct(p)) {
            fail("'" + std::string(p) + "'");
        }
        advance();
    }

    void expect_word(std::string_view w) {
        if (!is_word(w)) {
            fail("'" + std::string(w) + "'");
        }
        advance();
    }

    Ident ident() {
        if (cur().kind != Tok::Ident) {
            fail("identifier");
        }
        Token t = advance();
        return Ident{std::move(t.text), t.pos};
    }

    // IDENT { IDENT } up to (not including) `close`.
    std::vector<Ident> idlist(std::string_view close) {
        std::vector<Ident> ids;
        ids.push_back(ident());
        while (!is_punct(close)) {
            ids.push_back(ident());
        }
        return ids;
    }

    std::pair<Ident, NamedFamily> family_block(std::string_view list_kw, std::string_view expr_kw) {
        Ident name = ident();
        expect_punct("{");
        const SourcePos list_pos = cur().pos;
        expect_word(list_kw);
        expect_punct(":");
        std::vector<Ident> ids = idlist(";");
        expect_punct(";");
        expect_word(expr_kw);
        expect_punct(":");
        Expr e = expr();
        expect_punct(";");
        expect_punct("}");

        std::vector<std::string> constants;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (ids[j].name == ids[i].name) {
                    throw Error(ErrorCode::DuplicateConstant, ids[i].name, ids[i].pos.line, ids[i].pos.column);
                }
            }
            constants.push_back(ids[i].name);
        }
        UniverseRef u;
        try {
            u = new_universe(name.name, std::move(constants));
        } catch (const Error& err) {
            throw err.at(list_pos.line, list_pos.column);
        }
        PredicateSet fam = eval_expr(e, u);
        return {name, NamedFamily{name.name, std::move(fam)}};
    }

    RawMapping mapping_block() {
        RawMapping m;
        m.name = ident();
        expect_word("from");
        m.controller = ident();
        expect_word("to");
        m.game = ident();
        expect_punct("{");
        while (!is_punct("}")) {
            Ident src = ident();
            expect_punct("->");
            m.pairs.emplace_back(src, ident());
            while (is_punct(",")) {
                advance();
                m.pairs.emplace_back(src, ident());
            }
            expect_punct(";");
        }
        expect_punct("}");
        return m;
    }

    static void resolve(Document& doc, const std::vector<RawMapping>& raw) {
        for (const auto& r : raw) {
            if (doc.find_mapping(r.name.name)) {
                duplicate(r.name);
            }
            const NamedFamily* c = doc.find_controller(r.controller.name);
            if (!c) {
                throw Error(ErrorCode::UnknownReference, r.name.name + ": no controller " + r.controller.name,
                            r.controller.pos.line, r.controller.pos.column);
            }
            const NamedFamily* g = doc.find_game(r.game.name);
            if (!g) {
                throw Error(ErrorCode::UnknownReference, r.name.name + ": no game " + r.game.name,
                            r.game.pos.line, r.game.pos.column);
            }
            std::vector<Mapping::IndexPair> pairs;
            for (const auto& [s, t] : r.pairs) {
                auto si = c->universe()->index_of(s.name);
                if (!si) {
                    throw Error(ErrorCode::UnknownConstant, "input " + s.name, s.pos.line, s.pos.column);
                }
                auto ti = g->universe()->index_of(t.name);
                if (!ti) {
                    throw Error(ErrorCode::UnknownConstant, "action " + t.name, t.pos.line, t.pos.column);
                }
                pairs.emplace_back(*si, *ti);
            }
            try {
                doc.mappings.push_back(NamedMapping{r.name.name, r.controller.name, r.game.name,
                                                    Mapping(c->universe(), g->universe(), std::move(pairs))});
            } catch (const Error& err) {
                throw err.at(r.name.pos.line, r.name.pos.column);
            }
        }
    }

    Expr expr() {
        Expr first = term();
        if (!is_word("or")) {
            return first;
        }
        Expr e;
        e.kind = Expr::Kind::Or;
        e.pos = first.pos;
        e.children.push_back(std::move(first));
        while (is_word("or")) {
            advance();
            e.children.push_back(term());
        }
        return e;
    }

    Expr term() {
        Expr first = factor();
        if (!is_punct("*")) {
            return first;
        }
        Expr e;
        e.kind = Expr::Kind::Simultaneously;
        e.pos = first.pos;
        e.children.push_back(std::move(first));
        while (is_punct("*")) {
            advance();
            e.children.push_back(factor());
        }
        return e;
    }

    Expr factor() {
        Expr e;
        e.pos = cur().pos;
        if (is_punct("(")) {
            advance();
            e.kind = Expr::Kind::Paren;
            e.children.push_back(expr());
            expect_punct(")");
            return e;
        }
        if (cur().kind != Tok::Ident) {
            fail("expression");
        }
        if (is_word("none")) {
            advance();
            e.kind = Expr::Kind::None;
            return e;
        }
        if (is_word("sets")) {
            advance();
            e.kind = Expr::Kind::Sets;
            expect_punct("{");
            while (is_punct("{")) {
                advance();
                std::vector<Ident> ids;
                while (!is_punct("}")) {
                    ids.push_back(ident());
                }
                advance();
                e.sets.push_back(std::move(ids));
            }
            expect_punct("}");
            return e;
        }
        auto it = call_forms().find(cur().text);
        if (it == call_forms().end()) {
            fail("expression");
        }
        e.kind = it->second;
        advance();
        expect_punct("(");
        if (e.kind == Expr::Kind::Pairs) {
            do {
                Ident a = ident();
                expect_punct("-");
                e.edges.emplace_back(std::move(a), ident());
            } while (!is_punct(")"));
        } else {
            e.args = idlist(")");
        }
        expect_punct(")");
        return e;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::vector<std::string> names(const std::vector<Ident>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (const auto& i : ids) {
        out.push_back(i.name);
    }
    return out;
}

std::string_view form_name(Expr::Kind k) {
    for (const auto& [name, kind] : call_forms()) {
        if (kind == k) {
            return name;
        }
    }
    return "expression";
}

void require_arity(const Expr& e, std::size_t n) {
    if (e.args.size() != n) {
        throw Error(ErrorCode::ArityMismatch,
                    std::string(form_name(e.kind)) + " takes " + std::to_string(n) + " arguments, got " +
                        std::to_string(e.args.size()),
                    e.pos.line, e.pos.column);
    }
}

void require_known(const Ident& id, const Universe& u) {
    if (!u.index_of(id.name)) {
        throw Error(ErrorCode::UnknownConstant, id.name + " (universe '" + u.name() + "')", id.pos.line,
                    id.pos.column);
    }
}

PredicateSet eval_node(const Expr& e, const UniverseRef& u) {
    using K = Expr::Kind;
    for (const auto& a : e.args) {
        require_known(a, *u);
    }
    for (const auto& s : e.sets) {
        for (const auto& a : s) {
            require_known(a, *u);
        }
    }
    for (const auto& [a, b] : e.edges) {
        require_known(a, *u);
        require_known(b, *u);
    }
    const std::vector<std::string> args = names(e.args);

    switch (e.kind) {
    case K::Or: {
        PredicateSet acc = eval_expr(e.children.front(), u);
        for (std::size_t i = 1; i < e.children.size(); ++i) {
            acc = union_or(acc, eval_expr(e.children[i], u));
        }
        return acc;
    }
    case K::Simultaneously: {
        PredicateSet acc = eval_expr(e.children.front(), u);
        for (std::size_t i = 1; i < e.children.size(); ++i) {
            acc = simultaneously(acc, eval_expr(e.children[i], u));
        }
        return acc;
    }
    case K::Paren: return eval_expr(e.children.front(), u);
    case K::None: return no_input(u);
    case K::Maybe: require_arity(e, 1); return maybe(u, args[0]);
    case K::Choose1: return choose1(u, args);
    case K::AtMost1: return at_most_1(u, args);
    case K::Combo: return combo(u, args);
    case K::Sets: {
        std::vector<std::vector<std::string>> sets;
        for (const auto& s : e.sets) {
            sets.push_back(names(s));
        }
        return predicate_from_sets(u, sets);
    }
    case K::Pairs: {
        std::vector<NameEdge> edges;
        for (const auto& [a, b] : e.edges) {
            edges.emplace_back(a.name, b.name);
        }
        return from_press_graph(press_graph_from_pairs(u, edges));
    }
    case K::Dpad8: require_arity(e, 4); return dpad8(u, args[0], args[1], args[2], args[3]);
    case K::Stick4: require_arity(e, 4); return stick4(u, args[0], args[1], args[2], args[3]);
    case K::Face2: return from_press_graph(face_layout(u, FaceKind::Two, args));
    case K::Face4: return from_press_graph(face_layout(u, FaceKind::Four, args));
    case K::Face6: return from_press_graph(face_layout(u, FaceKind::Six, args));
    case K::Triggers: require_arity(e, 2); return trigger_pair(u, args[0], args[1]);
    }
    throw Error(ErrorCode::SyntaxError, "unknown expression kind", e.pos.line, e.pos.column);
}

template <typename T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
    for (const auto& item : items) {
        if (item.name == name) {
            return &item;
        }
    }
    return nullptr;
}

void print_family(std::ostream& os, std::string_view kind, std::string_view list_kw, std::string_view expr_kw,
                  const NamedFamily& f) {
    const Universe& u = *f.universe();
    os << kind << ' ' << f.name << " {\n  " << list_kw << ':';
    for (const auto& c : u.constants()) {
        os << ' ' << c;
    }
    os << ";\n  " << expr_kw << ": sets {";
    for (Word w : f.family.members()) {
        os << "\n    {";
        bool first = true;
        for (const auto& n : u.names_of(w)) {
            os << (first ? "" : " ") << n;
            first = false;
        }
        os << '}';
    }
    os << (f.family.empty() ? " };\n}\n" : "\n  };\n}\n");
}

} // namespace

Expr parse_expr(std::string_view text) {
    return Parser(text).expr_only();
}

PredicateSet eval_expr(const Expr& e, const UniverseRef& u) {
    try {
        return eval_node(e, u);
    } catch (const Error& err) {
        if (err.line() > 0) {
            throw;
        }
        throw err.at(e.pos.line, e.pos.column);
    }
}

const NamedFamily* Document::find_controller(std::string_view name) const {
    return find_named(controllers, name);
}

const NamedFamily* Document::find_game(std::string_view name) const {
    return find_named(games, name);
}

const NamedMapping* Document::find_mapping(std::string_view name) const {
    return find_named(mappings, name);
}

Document parse_document(std::string_view text) {
    return Parser(text).document();
}

Document load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string print_mapping(const std::string& name, const std::string& controller, const std::string& game,
                          const Mapping& m) {
    std::ostringstream os;
    os << "mapping " << name << " from " << controller << " to " << game << " {\n";
    const auto pairs = m.pairs();
    for (std::size_t i = 0; i < pairs.size();) {
        const std::size_t src = pairs[i].first;
        os << "  " << m.source()->constant(src) << " ->";
        bool first = true;
        for (; i < pairs.size() && pairs[i].first == src; ++i) {
            os << (first ? " " : ", ") << m.target()->constant(pairs[i].second);
            first = false;
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string print_document(const Document& doc) {
    std::ostringstream os;
    bool first = true;
    auto gap = [&] {
        if (!first) {
            os << '\n';
        }
        first = false;
    };
    for (const auto& c : doc.controllers) {
        gap();
        print_family(os, "controller", "inputs", "allow", c);
    }
    for (const auto& g : doc.games) {
        gap();
        print_family(os, "game", "actions", "require", g);
    }
    for (const auto& m : doc.mappings) {
        gap();
        os << print_mapping(m.name, m.controller, m.game, m.mapping);
    }
    return os.str();
}

} // namespace padfit::speclang
