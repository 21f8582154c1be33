#include "padfit/universe.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "padfit/error.hpp"

namespace padfit {

bool is_identifier(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(text.front())) {
        return false;
    }
    return std::all_of(text.begin() + 1, text.end(), [&](char c) { return alpha(c) || digit(c); });
}

UniverseRef Universe::create(std::string name, std::vector<std::string> constants) {
    if (constants.empty()) {
        throw Error(ErrorCode::EmptyUniverse, "universe '" + name + "' has no constants");
    }
    if (constants.size() > kMaxConstants) {
        throw Error(ErrorCode::UniverseTooLarge,
                    std::to_string(constants.size()) + " constants in '" + name + "', limit is 64");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& c : constants) {
        if (!is_identifier(c)) {
            throw Error(ErrorCode::InvalidIdentifier, "'" + c + "'");
        }
        if (!seen.insert(c).second) {
            throw Error(ErrorCode::DuplicateConstant, c);
        }
    }
    return UniverseRef(new Universe(std::move(name), std::move(constants)));
}

Word Universe::mask() const noexcept {
    return size() >= 64 ? ~Word{0} : (Word{1} << size()) - 1;
}

std::optional<std::size_t> Universe::index_of(std::string_view constant) const {
    // Universes are at most 64 wide; a linear scan beats a hash map here.
    for (std::size_t i = 0; i < constants_.size(); ++i) {
        if (constants_[i] == constant) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Universe::require_index(std::string_view constant) const {
    if (auto i = index_of(constant)) {
        return *i;
    }
    throw Error(ErrorCode::UnknownConstant, std::string(constant) + " (universe '" + name_ + "')");
}

std::vector<std::string> Universe::names_of(Word bits) const {
    std::vector<std::string> out;
    for (Word rest = bits & mask(); rest != 0; rest &= rest - 1) {
        out.push_back(constants_[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    return out;
}

bool same_universe(const UniverseRef& a, const UniverseRef& b) {
    if (a == b) {
        return true;
    }
    return a && b && *a == *b;
}

void require_same_universe(const UniverseRef& a, const UniverseRef& b) {
    if (!same_universe(a, b)) {
        throw Error(ErrorCode::UniverseMismatch,
                    "'" + (a ? a->name() : std::string("?")) + "' vs '" +
                        (b ? b->name() : std::string("?")) + "'");
    }
}

UniverseRef new_universe(std::string name, std::vector<std::string> constants) {
    return Universe::create(std::move(name), std::move(constants));
}

InputSet::InputSet(UniverseRef universe, Word bits) : universe_(std::move(universe)), bits_(bits) {
    if ((bits_ & ~universe_->mask()) != 0) {
        throw Error(ErrorCode::UnknownConstant, "bit outside universe '" + universe_->name() + "'");
    }
}

std::size_t InputSet::size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
}

InputSet input_set(const UniverseRef& u, std::span<const std::string> names) {
    Word bits = 0;
    for (const auto& n : names) {
        bits |= Word{1} << u->require_index(n);
    }
    return InputSet(u, bits);
}

InputSet input_set(const UniverseRef& u, std::initializer_list<std::string_view> names) {
    Word bits = 0;
    for (auto n : names) {
        bits |= Word{1} << u->require_index(n);
    }
    return InputSet(u, bits);
}

void canonicalize(std::vector<Word>& words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

PredicateSet::PredicateSet(UniverseRef universe, std::vector<Word> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
    const Word outside = ~universe_->mask();
    for (Word w : members_) {
        if ((w & outside) != 0) {
            throw Error(ErrorCode::UnknownConstant, "member outside universe '" + universe_->name() + "'");
        }
    }
    canonicalize(members_);
}

bool PredicateSet::contains(Word bits) const {
    return std::binary_search(members_.begin(), members_.end(), bits);
}

Word PredicateSet::support() const noexcept {
    Word s = 0;
    for (Word w : members_) {
        s |= w;
    }
    return s;
}

PredicateSet predicate_from_sets(const UniverseRef& u,
                                 const std::vector<std::vector<std::string>>& sets) {
    std::vector<Word> words;
    words.reserve(sets.size());
    for (const auto& s : sets) {
        words.push_back(input_set(u, s).bits());
    }
    return PredicateSet(u, std::move(words));
}

std::string format_set(const Universe& u, Word bits) {
    std::string out = "{";
    bool first = true;
    for (const auto& n : u.names_of(bits)) {
        if (!first) {
            out += ", ";
        }
        out += n;
        first = false;
    }
    out += "}";
    return out;
}

} // namespace padfit
