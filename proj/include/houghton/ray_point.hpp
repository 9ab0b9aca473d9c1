#ifndef HOUGHTON_RAY_POINT_HPP
#define HOUGHTON_RAY_POINT_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace houghton {

/// A point (ray, pos) of the disjoint union of n rays of naturals.
/// Rays are numbered 1..n, positions start at 1. Ordered lexicographically.
struct RayPoint {
    std::int32_t ray = 1;
    std::int32_t pos = 1;

    friend auto operator<=>(const RayPoint&, const RayPoint&) = default;

    std::string to_string() const
    {
        return "(" + std::to_string(ray) + "," + std::to_string(pos) + ")";
    }
};

} // namespace houghton

template <>
struct std::hash<houghton::RayPoint> {
    size_t operator()(const houghton::RayPoint& p) const noexcept
    {
        return (static_cast<size_t>(p.ray) << 32) ^ static_cast<size_t>(static_cast<uint32_t>(p.pos));
    }
};

#endif
