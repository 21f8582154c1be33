#pragma once

// Text format for controllers, games and mappings (`.pad` files).
//
//   controller pad { inputs: dleft dright dup ddown a b;
//                    allow: dpad8(dleft dright dup ddown) * face2(a b); }
//   game jumpman   { actions: left right up down jump run;
//                    require: atmost1(left right) * atmost1(up down) * maybe(jump) * maybe(run); }
//   mapping m from pad to jumpman { dleft -> left; a -> jump; b -> run, jump; }
//
// `*` is simultaneously and binds tighter than `or`. `#` starts a comment.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padfit/mapping.hpp"
#include "padfit/universe.hpp"

namespace padfit::speclang {

struct SourcePos {
    int line = 1;
    int column = 1;
};

struct Ident {
    std::string name;
    SourcePos pos;
};

struct Expr {
    enum class Kind {
        Or,
        Simultaneously,
        None,
        Maybe,
        Choose1,
        AtMost1,
        Combo,
        Sets,
        Pairs,
        Dpad8,
        Stick4,
        Face2,
        Face4,
        Face6,
        Triggers,
        Paren,
    };

    Kind kind = Kind::None;
    SourcePos pos;
    // Or and Simultaneously: operands left to right. Paren: the inner expr.
    std::vector<Expr> children;
    // Arguments of the call forms.
    std::vector<Ident> args;
    // Sets: one identifier list per listed set.
    std::vector<std::vector<Ident>> sets;
    // Pairs: a-b edges.
    std::vector<std::pair<Ident, Ident>> edges;
};

Expr parse_expr(std::string_view text);

PredicateSet eval_expr(const Expr& e, const UniverseRef& u);

struct NamedFamily {
    std::string name;
    PredicateSet family;

    const UniverseRef& universe() const noexcept { return family.universe(); }
    friend bool operator==(const NamedFamily&, const NamedFamily&) = default;
};

struct NamedMapping {
    std::string name;
    std::string controller;
    std::string game;
    Mapping mapping;

    friend bool operator==(const NamedMapping&, const NamedMapping&) = default;
};

struct Document {
    // Declaration order within each category.
    std::vector<NamedFamily> controllers;
    std::vector<NamedFamily> games;
    std::vector<NamedMapping> mappings;

    const NamedFamily* find_controller(std::string_view name) const;
    const NamedFamily* find_game(std::string_view name) const;
    const NamedMapping* find_mapping(std::string_view name) const;

    friend bool operator==(const Document&, const Document&) = default;
};

// Throws padfit::Error carrying the line and column of the failure.
Document parse_document(std::string_view text);

Document load_document(const std::filesystem::path& path);

// Renders families as explicit `sets { ... }` listings; parsing the output
// gives back an equal Document.
std::string print_document(const Document& doc);

// One `mapping` block.
std::string print_mapping(const std::string& name, const std::string& controller, const std::string& game,
                          const Mapping& m);

} // namespace padfit::speclang
