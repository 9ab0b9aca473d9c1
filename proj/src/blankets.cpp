#include "houghton/blankets.hpp"

namespace houghton {

CubicalComplex blanket_subcomplex(const CubicalComplex& X, DirMask K)
{
    return full_subcomplex(X, [&](const EventualInjection& v) {
        for (int i = 0; i < X.n(); ++i)
            if ((K & (DirMask(1) << i)) && v.translations()[i] > 0) return false;
        return true;
    });
}

std::vector<Blanket> blanket_components(const CubicalComplex& X, DirMask K)
{
    const CubicalComplex sub = blanket_subcomplex(X, K);
    std::vector<Blanket> out;
    int index = 0;
    for (auto& comp : connected_components(sub)) {
        Blanket b;
        b.K = K;
        b.index = index++;
        b.label = sub.uni->verts[comp.front()].to_text();
        b.vertices = std::move(comp);
        out.push_back(std::move(b));
    }
    return out;
}

RayGerm ray_germ_invariant(const EventualInjection& v, int ray)
{
    return v.ray_germ(ray);
}

} // namespace houghton
