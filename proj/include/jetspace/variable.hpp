#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "jetspace/errors.hpp"

namespace jetspace {

enum class Family : std::uint8_t { a = 0, b = 1, c = 2, aux = 3 };

char family_letter(Family f);

// Packed id whose numeric order realizes the canonical variable ranking:
// aux > c > b > a, then primary index ascending within a family (so c6 > c2),
// then secondary (wedge) index ascending. Aux primaries are interner ids; the
// interner is pre-seeded with x, y, z, t, s, u so that z > y > x.
struct VariableId {
    std::uint64_t packed = 0;

    auto operator<=>(const VariableId&) const = default;

    Family family() const { return static_cast<Family>(packed >> 62); }
    std::uint32_t primary() const { return static_cast<std::uint32_t>((packed >> 32) & 0x3fffffffULL); }
    bool is_aux() const { return family() == Family::aux; }
    bool is_wedge() const { return !is_aux() && (packed & 0xffffffffULL) != 0; }
    std::optional<std::uint32_t> secondary() const {
        std::uint32_t low = static_cast<std::uint32_t>(packed & 0xffffffffULL);
        if (low == 0) return std::nullopt;
        return low - 1;
    }
    const std::string& aux_name() const;
    std::string to_string() const;
};

VariableId jet_variable(Family f, std::uint32_t index);
VariableId wedge_variable(Family f, std::uint32_t index, std::uint32_t level);
VariableId aux_variable(const std::string& name);

std::ostream& operator<<(std::ostream& os, const VariableId& v);

// Pre-seeded aux variables.
VariableId var_x();
VariableId var_y();
VariableId var_z();
VariableId var_t();
VariableId var_s();
VariableId var_u();

}  // namespace jetspace
