#include "houghton/character.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "houghton/errors.hpp"

namespace houghton {

Character Character::make(std::vector<std::int64_t> coeffs)
{
    if (coeffs.empty()) throw ZeroCharacterError("character needs at least one coefficient");
    if (std::all_of(coeffs.begin(), coeffs.end(), [&](std::int64_t a) { return a == coeffs[0]; }))
        throw ZeroCharacterError("all-equal coefficients represent the zero character");
    return Character(std::move(coeffs));
}

std::int64_t Character::coeff(int ray) const
{
    if (ray < 1 || ray > n()) throw IndexError("Character::coeff: ray index out of range");
    return coeffs_[ray - 1];
}

std::int64_t Character::eval(const EventualInjection& phi) const
{
    if (phi.n() != n()) throw DimensionError("chi_eval: mismatched ray counts");
    std::int64_t v = 0;
    for (int i = 0; i < n(); ++i) v += coeffs_[i] * phi.translations()[i];
    return v;
}

Character Character::standard_form() const
{
    const std::int64_t mx = *std::max_element(coeffs_.begin(), coeffs_.end());
    std::vector<std::int64_t> shifted = coeffs_;
    for (auto& a : shifted) a -= mx;
    return Character(std::move(shifted));
}

std::pair<Character, std::vector<int>> Character::ascending_standard_form() const
{
    const Character std_form = standard_form();
    std::vector<int> perm(n());
    std::iota(perm.begin(), perm.end(), 1);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return std_form.coeffs_[a - 1] < std_form.coeffs_[b - 1];
    });
    std::vector<std::int64_t> sorted(n());
    for (int k = 0; k < n(); ++k) sorted[k] = std_form.coeffs_[perm[k] - 1];
    return {Character(std::move(sorted)), perm};
}

int Character::m_of_chi() const
{
    const std::int64_t mx = *std::max_element(coeffs_.begin(), coeffs_.end());
    return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                          [&](std::int64_t a) { return a < mx; }));
}

bool Character::is_ascending_standard() const
{
    return std::is_sorted(coeffs_.begin(), coeffs_.end()) && coeffs_.back() == 0;
}

std::string Character::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << coeffs_[i];
    os << ")";
    return os.str();
}

bool sigma_complement_membership(const Character& chi, int m)
{
    if (m < 1 || m > chi.n() - 1)
        throw IndexError("sigma_complement_membership: m out of range [1..n-1]");
    return chi.m_of_chi() <= m;
}

} // namespace houghton
