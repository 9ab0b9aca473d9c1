#include <algorithm>
#include <deque>
#include <set>

#include "houghton/cubical_complex.hpp"
#include "houghton/errors.hpp"

namespace houghton {

RegionSpec RegionSpec::defaults(int n)
{
    RegionSpec spec;
    spec.n = n;
    spec.f_bound = 3 * n - 3;
    spec.window = 2;
    return spec;
}

void RegionSpec::validate() const
{
    if (n < 2 || n > 4) throw ConfigError("region: n must be in [2,4]");
    if (window < 2) throw ConfigError("region: window must be >= 2");
    if (f_bound < 0) throw ConfigError("region: f bound must be >= 0");
    if (chi && chi->n() != n) throw ConfigError("region: character dimension mismatch");
}

bool RegionSpec::in_window(const EventualInjection& v) const
{
    for (int i = 0; i < n; ++i) {
        if (v.support_bounds()[i] > window) return false;
        if (std::abs(v.translations()[i]) > window) return false;
    }
    for (const RayPoint& t : v.exception_targets())
        if (t.pos > window) return false;
    return true;
}

bool RegionSpec::keeps(const EventualInjection& v) const
{
    if (!in_window(v)) return false;
    if (v.deficiency_f() > f_bound) return false;
    if (chi && chi->eval(v) < chi_threshold) return false;
    return true;
}

std::pair<const VertexId*, const VertexId*> VertexUniverse::down_of(VertexId v, int ray) const
{
    const std::size_t slot = static_cast<std::size_t>(v) * n + ray - 1;
    return {down_dat.data() + down_off[slot], down_dat.data() + down_off[slot + 1]};
}

VertexId VertexUniverse::id_of(const EventualInjection& v) const
{
    auto it = index.find(v.key());
    return it == index.end() ? -1 : it->second;
}

VertexId VertexUniverse::vertex_at(VertexId base, DirMask mask) const
{
    VertexId w = base;
    for (int i = 0; i < n && w >= 0; ++i)
        if (mask & (DirMask(1) << i)) w = up_of(w, i + 1);
    return w;
}

void VertexUniverse::build_down_csr()
{
    const std::size_t slots = verts.size() * static_cast<std::size_t>(n);
    down_off.assign(slots + 1, 0);
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (int i = 0; i < n; ++i) {
            const VertexId u = up[v * n + i];
            if (u >= 0) ++down_off[static_cast<std::size_t>(u) * n + i + 1];
        }
    for (std::size_t s = 0; s < slots; ++s) down_off[s + 1] += down_off[s];
    down_dat.assign(down_off.back(), -1);
    std::vector<std::int64_t> fill(down_off.begin(), down_off.end() - 1);
    // Vertex ids ascend within each slot because v sweeps in id order.
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (int i = 0; i < n; ++i) {
            const VertexId u = up[v * n + i];
            if (u >= 0) down_dat[fill[static_cast<std::size_t>(u) * n + i]++] = static_cast<VertexId>(v);
        }
}

namespace {

struct UniverseBuilder {
    std::shared_ptr<VertexUniverse> uni = std::make_shared<VertexUniverse>();

    VertexId intern(const EventualInjection& v)
    {
        const std::string key = v.key();
        auto it = uni->index.find(key);
        if (it != uni->index.end()) return it->second;
        const VertexId id = static_cast<VertexId>(uni->verts.size());
        uni->verts.push_back(v);
        uni->index.emplace(key, id);
        return id;
    }
};

CubicalComplex finish(std::shared_ptr<VertexUniverse> uni, const RegionSpec& spec)
{
    uni->build_down_csr();
    CubicalComplex X;
    X.uni = std::move(uni);
    X.spec = spec;
    X.member.assign(X.uni->verts.size(), 0);
    for (std::size_t v = 0; v < X.uni->verts.size(); ++v)
        X.member[v] = spec.keeps(X.uni->verts[v]) ? 1 : 0;
    X.seal();
    return X;
}

} // namespace

CubicalComplex enumerate_region(const std::vector<EventualInjection>& seeds, const RegionSpec& spec)
{
    spec.validate();
    if (seeds.empty()) throw ConfigError("enumerate_region: empty seed list");
    for (const auto& s : seeds) {
        if (s.n() != spec.n) throw ConfigError("enumerate_region: seed has wrong ray count");
        if (!spec.keeps(s)) throw ConfigError("enumerate_region: seed violates the region predicates");
    }

    UniverseBuilder b;
    b.uni->n = spec.n;
    b.uni->window = spec.window;

    std::vector<EventualInjection> sorted_seeds = seeds;
    std::sort(sorted_seeds.begin(), sorted_seeds.end(),
              [](const EventualInjection& x, const EventualInjection& y) { return x.key() < y.key(); });

    auto& uni = *b.uni;
    std::deque<VertexId> queue;
    auto discover = [&](const EventualInjection& v) -> VertexId {
        const auto before = uni.verts.size();
        const VertexId id = b.intern(v);
        if (uni.verts.size() > before) {
            queue.push_back(id);
            uni.up.resize(uni.verts.size() * static_cast<std::size_t>(spec.n), -1);
        }
        return id;
    };
    for (const auto& s : sorted_seeds) discover(s);

    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        if (uni.size() > spec.max_vertices)
            throw ConfigError("enumerate_region: traversal exceeded the size guard");
        const EventualInjection inj = uni.verts[v]; // copy: vector may reallocate
        for (int i = 1; i <= spec.n; ++i) {
            const EventualInjection u = inj.up(i);
            if (spec.in_window(u))
                uni.up[static_cast<std::size_t>(v) * spec.n + i - 1] = discover(u);
            for (const EventualInjection& d : inj.down_options(i))
                if (spec.in_window(d)) discover(d);
        }
    }

    return finish(b.uni, spec);
}

CubicalComplex descending_star_region(const std::vector<EventualInjection>& seeds, const RegionSpec& spec)
{
    spec.validate();
    if (seeds.empty()) throw ConfigError("descending_star_region: empty seed list");
    for (const auto& s : seeds) {
        if (s.n() != spec.n) throw ConfigError("descending_star_region: seed has wrong ray count");
        if (s.deficiency_f() > spec.f_bound)
            throw ConfigError("descending_star_region: seed violates the f bound");
    }

    UniverseBuilder b;
    b.uni->n = spec.n;
    b.uni->window = spec.window;
    auto& uni = *b.uni;

    std::vector<EventualInjection> sorted_seeds = seeds;
    std::sort(sorted_seeds.begin(), sorted_seeds.end(),
              [](const EventualInjection& x, const EventualInjection& y) { return x.key() < y.key(); });

    // Lower corners along every direction subset: at most one descent per
    // direction, so every cube with f-maximum at a seed keeps all corners in
    // the set.
    for (const auto& s : sorted_seeds) {
        std::vector<EventualInjection> frontier = {s};
        b.intern(s);
        for (int i = 1; i <= spec.n; ++i) {
            // frontier after processing direction i holds corners along all
            // subsets of {1..i}
            std::vector<EventualInjection> next = frontier;
            for (const auto& w : frontier)
                for (const auto& d : w.down_options(i)) {
                    b.intern(d);
                    next.push_back(d);
                }
            frontier = std::move(next);
            if (uni.size() > spec.max_vertices)
                throw ConfigError("descending_star_region: closure exceeded the size guard");
        }
    }

    uni.up.assign(uni.verts.size() * static_cast<std::size_t>(spec.n), -1);
    for (std::size_t v = 0; v < uni.verts.size(); ++v)
        for (int i = 1; i <= spec.n; ++i) {
            const EventualInjection u = uni.verts[v].up(i);
            uni.up[v * spec.n + i - 1] = uni.id_of(u);
        }

    RegionSpec keep_all = spec;
    keep_all.chi.reset();
    CubicalComplex X;
    uni.build_down_csr();
    X.uni = b.uni;
    X.spec = keep_all;
    X.member.assign(uni.verts.size(), 1);
    X.seal();
    return X;
}

} // namespace houghton
