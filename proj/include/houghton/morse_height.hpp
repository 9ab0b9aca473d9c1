#ifndef HOUGHTON_MORSE_HEIGHT_HPP
#define HOUGHTON_MORSE_HEIGHT_HPP

#include <compare>
#include <cstdint>
#include <optional>

#include "houghton/character.hpp"
#include "houghton/injection.hpp"

namespace houghton {

/// Lexicographic Morse height (chi, f). Integer chi coefficients give the
/// Morse gap epsilon = 1 exactly.
struct MorseHeight {
    std::int64_t chi_value = 0;
    std::int64_t f_value = 0;

    friend auto operator<=>(const MorseHeight&, const MorseHeight&) = default;
};

inline MorseHeight morse_height(const Character& chi, const EventualInjection& v)
{
    return {chi.eval(v), v.deficiency_f()};
}

/// Height when no character is supplied: plain f (the Bestvina-Brady case).
inline MorseHeight morse_height(const std::optional<Character>& chi, const EventualInjection& v)
{
    if (chi) return morse_height(*chi, v);
    return {0, v.deficiency_f()};
}

} // namespace houghton

#endif
