#ifndef HOUGHTON_INJECTION_HPP
#define HOUGHTON_INJECTION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "houghton/ray_point.hpp"

namespace houghton {

/// Restriction of an eventual translation to a single ray: the finite
/// exceptional prefix plus the translation amount. Complete invariant of the
/// restricted map, used as the blanket-separation certificate.
struct RayGerm {
    std::int32_t translation = 0;
    std::vector<RayPoint> prefix; // images of positions 1..B on this ray

    friend bool operator==(const RayGerm&, const RayGerm&) = default;

    std::string to_string() const;
};

/// An injection [n] x N -> [n] x N that is an eventual translation on each
/// ray, in canonical form:
///
///   * translations m_i and per-ray support bounds B_i >= 0,
///   * positions x <= B_i on ray i map to the stored exception targets,
///   * positions x >  B_i map to (i, x + m_i),
///   * each B_i is minimal (the entry at B_i is never the pure translation
///     value), exception targets stored ray-major with positions ascending.
///
/// Values are immutable after construction; all operations return fresh
/// canonical values. The deficiency (points missing from the image) equals
/// the sum of the translations.
class EventualInjection {
public:
    /// Canonicalizes and validates. Throws InvalidInjection on any violation
    /// of injectivity or well-definedness.
    static EventualInjection from_parts(int n, std::vector<std::int32_t> translations,
                                        std::vector<std::int32_t> support_bounds,
                                        std::vector<RayPoint> exception_targets);

    static EventualInjection identity(int n);
    static EventualInjection generator_t(int ray, int n);
    static EventualInjection transposition_tau(int ray, int n);

    /// Parses the canonical text encoding, e.g.
    /// `n=2; m=1,0; B=0,0; exc=` or `n=2; m=0,0; B=2,0; exc=(1,1)->(1,2);(1,2)->(1,1)`.
    static EventualInjection parse(const std::string& text);

    int n() const { return n_; }
    const std::vector<std::int32_t>& translations() const { return m_; }
    const std::vector<std::int32_t>& support_bounds() const { return bounds_; }
    const std::vector<RayPoint>& exception_targets() const { return targets_; }

    std::int32_t chi_component(int ray) const;
    std::int64_t deficiency_f() const;
    bool is_bijection() const { return deficiency_f() == 0; }

    RayPoint apply(RayPoint p) const;

    /// this followed by `second` (the paper's `this ∘ second`, maps acting on
    /// the right).
    EventualInjection compose(const EventualInjection& second) const;

    /// t_ray ∘ this: the upper neighbour of this vertex along `ray`.
    EventualInjection up(int ray) const;

    /// All psi with this = t_ray ∘ psi, ordered by the missing point each one
    /// assigns as the image of (ray, 1). Exactly deficiency_f() of them.
    std::vector<EventualInjection> down_options(int ray) const;

    /// Points of [n] x N not in the image, ascending. Size = deficiency_f().
    std::vector<RayPoint> missing_points() const;

    RayGerm ray_germ(int ray) const;

    /// Canonical text encoding (the wire format of all file formats).
    std::string to_text() const;

    /// Compact byte key; lexicographic byte order is THE canonical vertex
    /// order used for all deterministic enumeration (orders by translations,
    /// then support bounds, then exception targets).
    std::string key() const;

    friend bool operator==(const EventualInjection&, const EventualInjection&) = default;

private:
    EventualInjection() = default;

    int n_ = 0;
    std::vector<std::int32_t> m_;
    std::vector<std::int32_t> bounds_;
    std::vector<RayPoint> targets_; // ray-major, position ascending
    std::vector<std::int32_t> offset_; // offset_[i] = start of ray i+1's targets

    void rebuild_offsets();
    void canonicalize();
    void validate() const;
};

/// compose(first, second) applies `first` then `second`.
inline EventualInjection compose(const EventualInjection& first, const EventualInjection& second)
{
    return first.compose(second);
}

std::size_t hash_value(const EventualInjection& phi);

} // namespace houghton

template <>
struct std::hash<houghton::EventualInjection> {
    size_t operator()(const houghton::EventualInjection& phi) const noexcept
    {
        return houghton::hash_value(phi);
    }
};

#endif
