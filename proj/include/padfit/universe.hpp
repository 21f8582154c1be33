#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace padfit {

// One simultaneous combination of constants: bit i is set iff constant i of
// the owning universe is held.
using Word = std::uint64_t;

inline constexpr std::size_t kMaxConstants = 64;

bool is_identifier(std::string_view text);

class Universe;
using UniverseRef = std::shared_ptr<const Universe>;

// An ordered set of named constants. Constant i occupies bit i for the
// lifetime of the universe. Instances are immutable and shared by reference.
class Universe {
public:
    static UniverseRef create(std::string name, std::vector<std::string> constants);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& constants() const noexcept { return constants_; }
    std::size_t size() const noexcept { return constants_.size(); }

    // All valid bits of this universe set.
    Word mask() const noexcept;

    std::optional<std::size_t> index_of(std::string_view constant) const;
    // Throws UnknownConstant.
    std::size_t require_index(std::string_view constant) const;

    const std::string& constant(std::size_t index) const { return constants_.at(index); }

    // Names of the set bits of `bits`, in universe order.
    std::vector<std::string> names_of(Word bits) const;

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.name_ == b.name_ && a.constants_ == b.constants_;
    }

private:
    Universe(std::string name, std::vector<std::string> constants)
        : name_(std::move(name)), constants_(std::move(constants)) {}

    std::string name_;
    std::vector<std::string> constants_;
};

// Structural equality of two handles; identical pointers short-circuit.
bool same_universe(const UniverseRef& a, const UniverseRef& b);
// Throws UniverseMismatch unless same_universe(a, b).
void require_same_universe(const UniverseRef& a, const UniverseRef& b);

UniverseRef new_universe(std::string name, std::vector<std::string> constants);

class InputSet {
public:
    InputSet(UniverseRef universe, Word bits);

    const UniverseRef& universe() const noexcept { return universe_; }
    Word bits() const noexcept { return bits_; }
    bool contains(std::size_t index) const noexcept { return (bits_ >> index) & 1u; }
    std::size_t size() const noexcept;
    std::vector<std::string> names() const { return universe_->names_of(bits_); }

    friend bool operator==(const InputSet& a, const InputSet& b) {
        return a.bits_ == b.bits_ && same_universe(a.universe_, b.universe_);
    }

private:
    UniverseRef universe_;
    Word bits_;
};

InputSet input_set(const UniverseRef& u, std::span<const std::string> names);
InputSet input_set(const UniverseRef& u, std::initializer_list<std::string_view> names);

// The family of input sets for which a predicate holds, in canonical form:
// members ascending by numeric word value, no duplicates. An empty family is
// the always-false predicate.
class PredicateSet {
public:
    explicit PredicateSet(UniverseRef universe) : universe_(std::move(universe)) {}
    // Sorts, deduplicates and bound-checks `members`.
    PredicateSet(UniverseRef universe, std::vector<Word> members);

    const UniverseRef& universe() const noexcept { return universe_; }
    std::span<const Word> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    bool contains(Word bits) const;
    InputSet member(std::size_t i) const { return InputSet(universe_, members_.at(i)); }
    // Union of all members: every constant the predicate mentions.
    Word support() const noexcept;

    friend bool operator==(const PredicateSet& a, const PredicateSet& b) {
        return a.members_ == b.members_ && same_universe(a.universe_, b.universe_);
    }

private:
    UniverseRef universe_;
    std::vector<Word> members_;
};

PredicateSet predicate_from_sets(const UniverseRef& u,
                                 const std::vector<std::vector<std::string>>& sets);

// Sorts and deduplicates in place.
void canonicalize(std::vector<Word>& words);

// "{a, b}" in universe order; "{}" for the empty set.
std::string format_set(const Universe& u, Word bits);

} // namespace padfit
