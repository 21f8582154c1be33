#pragma once

#include <compare>

#include "padfit/universe.hpp"

namespace padfit {

// A conjunction of literals. Bit i of `care` says variable i appears; bit i
// of `values` gives its polarity. Variables outside `care` are don't-cares.
struct Cube {
    Word care = 0;
    Word values = 0;

    constexpr bool covers(Word assignment) const noexcept { return (assignment & care) == values; }

    // Canonical order: by care mask, then by values.
    friend constexpr auto operator<=>(const Cube&, const Cube&) = default;
};

} // namespace padfit
