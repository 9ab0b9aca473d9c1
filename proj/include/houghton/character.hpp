#ifndef HOUGHTON_CHARACTER_HPP
#define HOUGHTON_CHARACTER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "houghton/injection.hpp"

namespace houghton {

/// Integer character a_1*chi_1 + ... + a_n*chi_n of H_n, extended to the
/// monoid M_n by the same formula. The all-equal coefficient vector is the
/// zero character and is rejected at construction. Coefficients are only
/// meaningful up to a shift by (a,...,a) on bijections; the Morse machinery
/// always pins the representative via standard forms.
class Character {
public:
    /// Throws ZeroCharacterError if all coefficients are equal.
    static Character make(std::vector<std::int64_t> coeffs);

    int n() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t coeff(int ray) const;

    std::int64_t eval(const EventualInjection& phi) const;

    /// Coefficients shifted so max = 0.
    Character standard_form() const;

    /// Sorted standard form plus the (1-based, stable) sorting permutation:
    /// perm[k] = original index of the k-th sorted coefficient.
    std::pair<Character, std::vector<int>> ascending_standard_form() const;

    /// m(chi): number of coefficients strictly below the maximum.
    int m_of_chi() const;

    bool is_ascending_standard() const;

    std::string to_string() const;

    friend bool operator==(const Character&, const Character&) = default;

private:
    explicit Character(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}
    std::vector<std::int64_t> coeffs_;
};

/// True iff [chi] lies in the complement of Sigma^m(H_n), i.e. m(chi) <= m.
bool sigma_complement_membership(const Character& chi, int m);

} // namespace houghton

#endif
