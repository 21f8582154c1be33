#include "padfit/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "padfit/enumerate.hpp"
#include "padfit/error.hpp"
#include "padfit/proplogic.hpp"
#include "padfit/speclang.hpp"
#include "padfit/validity.hpp"

namespace padfit::cli {

namespace {

using speclang::Document;
using speclang::NamedFamily;
using speclang::NamedMapping;

// A name that does not resolve in the loaded document.
struct ReferenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const NamedFamily& controller_named(const Document& doc, const std::string& name) {
    if (auto* c = doc.find_controller(name)) {
        return *c;
    }
    throw ReferenceError("no controller named '" + name + "'");
}

const NamedFamily& game_named(const Document& doc, const std::string& name) {
    if (auto* g = doc.find_game(name)) {
        return *g;
    }
    throw ReferenceError("no game named '" + name + "'");
}

const NamedMapping& mapping_named(const Document& doc, const std::string& name) {
    if (auto* m = doc.find_mapping(name)) {
        return *m;
    }
    throw ReferenceError("no mapping named '" + name + "'");
}

const NamedFamily& family_named(const Document& doc, const std::string& which, const std::string& name) {
    return which == "controller" ? controller_named(doc, name) : game_named(doc, name);
}

struct TripletArgs {
    std::string file;
    std::string controller;
    std::string game;
    std::string mapping;
    std::string engine = "set";
};

ValidityReport check(const TripletArgs& a, const Document& doc) {
    const NamedFamily& c = controller_named(doc, a.controller);
    const NamedFamily& g = game_named(doc, a.game);
    const NamedMapping& m = mapping_named(doc, a.mapping);
    if (m.controller != a.controller || m.game != a.game) {
        throw ReferenceError("mapping '" + a.mapping + "' goes from " + m.controller + " to " + m.game);
    }
    return check_triplet(c.family, g.family, m.mapping, a.engine == "dnf" ? Engine::Dnf : Engine::Set);
}

void print_report(std::ostream& out, const ValidityReport& r, const Universe& game, bool sizes) {
    out << (r.valid ? "VALID" : "INVALID") << '\n';
    if (sizes) {
        out << "controller combos: " << r.controller_size << ", mapped: " << r.mapped_size
            << ", required: " << r.required_size << '\n';
    }
    for (Word w : r.missing) {
        out << "missing: " << format_set(game, w) << '\n';
    }
    for (const auto& a : r.unmapped_targets) {
        out << "unmapped action: " << a << '\n';
    }
    for (const auto& i : r.unmapped_sources) {
        out << "unmapped input: " << i << '\n';
    }
}

int cmd_validate(const TripletArgs& a, std::ostream& out, bool explain) {
    const Document doc = speclang::load_document(a.file);
    const ValidityReport r = check(a, doc);
    print_report(out, r, *game_named(doc, a.game).universe(), explain);
    return r.valid ? kSuccess : kInvalid;
}

int cmd_minimize(const std::string& file, const std::string& which, const std::string& name, std::ostream& out) {
    const Document doc = speclang::load_document(file);
    const NamedFamily& f = family_named(doc, which, name);
    out << format_dnf(qm_minimize(predicate_to_dnf(f.family))) << '\n';
    return kSuccess;
}

int cmd_show(const std::string& file, const std::string& which, const std::string& name, std::ostream& out) {
    const Document doc = speclang::load_document(file);
    const NamedFamily& f = family_named(doc, which, name);
    for (Word w : f.family.members()) {
        out << format_set(*f.universe(), w) << '\n';
    }
    return kSuccess;
}

int cmd_enumerate(const std::string& file, const std::string& controller, const std::string& game,
                  std::size_t limit, std::ostream& out) {
    const Document doc = speclang::load_document(file);
    const NamedFamily& c = controller_named(doc, controller);
    const NamedFamily& g = game_named(doc, game);
    if (g.universe()->size() > c.universe()->size()) {
        throw ReferenceError("game '" + game + "' has more actions than controller '" + controller +
                             "' has inputs");
    }
    const EnumerationResult r = parallel::enumerate_injective(c.family, g.family, limit);
    for (std::size_t i = 0; i < r.first.size(); ++i) {
        const Mapping m = assignment_mapping(c.universe(), g.universe(), r.first[i]);
        out << speclang::print_mapping("m" + std::to_string(i + 1), controller, game, m) << '\n';
    }
    out << "valid mappings: " << r.valid_count << '\n';
    return r.valid_count > 0 ? kSuccess : kInvalid;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Controller / game / button-mapping compatibility checker", "padfit"};
    app.require_subcommand(1);

    TripletArgs triplet;
    std::string which;
    std::string name;
    std::size_t limit = 10;

    auto add_triplet = [&](CLI::App* sub) {
        sub->add_option("file", triplet.file, "Spec file (.pad)")->required();
        sub->add_option("controller", triplet.controller, "Controller name")->required();
        sub->add_option("game", triplet.game, "Game name")->required();
        sub->add_option("mapping", triplet.mapping, "Mapping name")->required();
        sub->add_option("--engine", triplet.engine, "Coverage engine")
            ->check(CLI::IsMember({"set", "dnf"}))
            ->capture_default_str();
    };
    auto add_named = [&](CLI::App* sub) {
        sub->add_option("file", triplet.file, "Spec file (.pad)")->required();
        sub->add_option("which", which, "controller or game")
            ->required()
            ->check(CLI::IsMember({"controller", "game"}));
        sub->add_option("name", name, "Block name")->required();
    };

    auto* validate = app.add_subcommand("validate", "Check a controller/game/mapping triple");
    add_triplet(validate);
    auto* explain = app.add_subcommand("explain", "Full validity report with family sizes");
    add_triplet(explain);
    auto* minimize = app.add_subcommand("minimize", "Print a minimized formula for a controller or game");
    add_named(minimize);
    auto* show = app.add_subcommand("show", "List the combinations of a controller or game");
    add_named(show);
    auto* enumerate = app.add_subcommand("enumerate", "List valid one-button-per-action mappings");
    enumerate->add_option("file", triplet.file, "Spec file (.pad)")->required();
    enumerate->add_option("controller", triplet.controller, "Controller name")->required();
    enumerate->add_option("game", triplet.game, "Game name")->required();
    enumerate->add_option("--limit", limit, "Maximum mappings to print")->capture_default_str();

    try {
        // CLI11 consumes its argument vector from the back.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "padfit: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(triplet, out, false);
        }
        if (explain->parsed()) {
            return cmd_validate(triplet, out, true);
        }
        if (minimize->parsed()) {
            return cmd_minimize(triplet.file, which, name, out);
        }
        if (show->parsed()) {
            return cmd_show(triplet.file, which, name, out);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(triplet.file, triplet.controller, triplet.game, limit, out);
        }
    } catch (const Error& e) {
        err << triplet.file << ": " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "padfit: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace padfit::cli
