#include "houghton/simplicial_complex.hpp"

#include <algorithm>

#include "houghton/errors.hpp"

namespace houghton {

int SimplicialComplex::add_vertex(const std::string& label)
{
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(labels_.size());
    labels_.push_back(label);
    index_.emplace(label, id);
    return id;
}

int SimplicialComplex::vertex_id(const std::string& label) const
{
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

void SimplicialComplex::insert_simplex(std::vector<int> verts)
{
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= vertex_slots()) throw IndexError("insert_simplex: unknown vertex id");
    if (verts.empty()) return;
    if (faces_.count(verts)) return;
    // Close downward: all subsets.
    const std::size_t k = verts.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
        std::vector<int> face;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i)) face.push_back(verts[i]);
        faces_.insert(std::move(face));
    }
}

bool SimplicialComplex::has_face(std::vector<int> verts) const
{
    std::sort(verts.begin(), verts.end());
    return faces_.count(verts) > 0;
}

std::vector<std::vector<int>> SimplicialComplex::maximal_faces() const
{
    std::vector<std::vector<int>> out;
    for (const auto& f : faces_) {
        bool maximal = true;
        // A face is maximal iff no coface with one extra vertex exists.
        for (int v : present_vertices()) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            std::vector<int> g = f;
            g.insert(std::lower_bound(g.begin(), g.end(), v), v);
            if (faces_.count(g)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(f);
    }
    return out;
}

int SimplicialComplex::dim() const
{
    int d = -1;
    for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::int64_t> SimplicialComplex::face_counts() const
{
    std::vector<std::int64_t> counts(dim() + 1, 0);
    for (const auto& f : faces_) ++counts[f.size() - 1];
    return counts;
}

std::vector<int> SimplicialComplex::present_vertices() const
{
    std::vector<int> out;
    for (const auto& f : faces_)
        if (f.size() == 1) out.push_back(f[0]);
    return out;
}

bool SimplicialComplex::adjacent(int a, int b) const
{
    if (a == b) return false;
    std::vector<int> e = {std::min(a, b), std::max(a, b)};
    return faces_.count(e) > 0;
}

namespace {

bool extend_clique(const SimplicialComplex& L, const std::vector<int>& verts,
                   std::vector<int>& clique, std::size_t next)
{
    if (clique.size() >= 3 && !L.has_face(clique)) return false;
    for (std::size_t i = next; i < verts.size(); ++i) {
        const int v = verts[i];
        bool ok = true;
        for (int u : clique)
            if (!L.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        clique.push_back(v);
        const bool good = extend_clique(L, verts, clique, i + 1);
        clique.pop_back();
        if (!good) return false;
    }
    return true;
}

} // namespace

bool is_flag(const SimplicialComplex& L)
{
    const std::vector<int> verts = L.present_vertices();
    std::vector<int> clique;
    return extend_clique(L, verts, clique, 0);
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& L)
{
    // Vertex order = label lex order.
    std::vector<int> present = L.present_vertices();
    std::sort(present.begin(), present.end(),
              [&](int a, int b) { return L.label(a) < L.label(b); });
    std::vector<int> rank(L.vertex_slots(), -1);
    for (std::size_t i = 0; i < present.size(); ++i) rank[present[i]] = static_cast<int>(i);

    const int top = std::max(L.dim(), 0);
    // Cells per degree, as sorted rank tuples.
    std::vector<std::vector<std::vector<int>>> cells(top + 1);
    for (const auto& f : L.faces()) {
        std::vector<int> t;
        t.reserve(f.size());
        for (int v : f) t.push_back(rank[v]);
        std::sort(t.begin(), t.end());
        cells[f.size() - 1].push_back(std::move(t));
    }
    std::vector<std::map<std::vector<int>, int>> index(top + 1);
    std::vector<std::int64_t> dims(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        std::sort(cells[k].begin(), cells[k].end());
        dims[k] = static_cast<std::int64_t>(cells[k].size());
        for (std::size_t i = 0; i < cells[k].size(); ++i)
            index[k].emplace(cells[k][i], static_cast<int>(i));
    }

    std::vector<SparseMat<std::int64_t>> boundaries;
    for (int k = 1; k <= top; ++k) {
        SparseMat<std::int64_t> d(static_cast<int>(dims[k - 1]), static_cast<int>(dims[k]));
        for (std::size_t c = 0; c < cells[k].size(); ++c) {
            const auto& simplex = cells[k][c];
            int sign = 1;
            for (std::size_t j = 0; j < simplex.size(); ++j) {
                std::vector<int> face = simplex;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                d.add_to(index[k - 1].at(face), static_cast<int>(c), sign);
                sign = -sign;
            }
        }
        boundaries.push_back(std::move(d));
    }
    return ChainComplex(std::move(dims), std::move(boundaries));
}

} // namespace houghton
