#include "houghton/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "houghton/errors.hpp"

namespace houghton {

namespace {

[[noreturn]] void fail_line(std::size_t lineno, const std::string& why)
{
    throw ParseError("line " + std::to_string(lineno) + ": " + why);
}

std::string mask_bits(DirMask mask, int n)
{
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (mask & (DirMask(1) << i)) s[i] = '1';
    return s;
}

} // namespace

void export_complex(std::ostream& os, const CubicalComplex& X)
{
    const int n = X.n();
    os << "houghton-complex v1 n=" << n << "\n";
    // Ids are re-numbered densely over members so files stand alone.
    std::vector<VertexId> remap(X.member.size(), -1);
    std::vector<VertexId> order;
    for (std::size_t v = 0; v < X.member.size(); ++v)
        if (X.member[v]) {
            remap[v] = static_cast<VertexId>(order.size());
            order.push_back(static_cast<VertexId>(v));
        }
    for (std::size_t i = 0; i < order.size(); ++i)
        os << "v " << i << " " << X.uni->verts[order[i]].to_text() << "\n";
    const DirMask all = full_mask(n);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (DirMask K = 1; K <= all; ++K)
            if ((X.cube_bits[order[i]] >> K) & 1)
                os << "c " << i << " " << mask_bits(K, n) << "\n";
}

std::string export_complex_string(const CubicalComplex& X)
{
    std::ostringstream os;
    export_complex(os, X);
    return os.str();
}

CubicalComplex import_complex(std::istream& is)
{
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(is, line)) throw ParseError("empty complex file");
    ++lineno;
    int n = 0;
    if (std::sscanf(line.c_str(), "houghton-complex v1 n=%d", &n) != 1)
        fail_line(lineno, "bad header '" + line + "'");
    if (n < 2 || n > 4) fail_line(lineno, "unsupported ray count");

    auto uni = std::make_shared<VertexUniverse>();
    uni->n = n;
    std::vector<std::pair<VertexId, DirMask>> cube_lines;
    std::vector<std::size_t> cube_linenos;

    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == 'v') {
            long id = -1;
            int consumed = 0;
            if (std::sscanf(line.c_str(), "v %ld %n", &id, &consumed) != 1)
                fail_line(lineno, "bad vertex line");
            if (id != static_cast<long>(uni->verts.size()))
                fail_line(lineno, "vertex ids must be dense and ascending");
            const std::string text = line.substr(consumed);
            EventualInjection v = [&] {
                try {
                    return EventualInjection::parse(text);
                } catch (const std::exception& e) {
                    fail_line(lineno, e.what());
                }
            }();
            if (v.n() != n) fail_line(lineno, "vertex has wrong ray count");
            if (v.to_text() != text) fail_line(lineno, "encoding is not canonical");
            if (!uni->index.emplace(v.key(), static_cast<VertexId>(uni->verts.size())).second)
                fail_line(lineno, "duplicate vertex encoding");
            uni->verts.push_back(std::move(v));
        } else if (line[0] == 'c') {
            long base = -1;
            char bits[32] = {0};
            if (std::sscanf(line.c_str(), "c %ld %31s", &base, bits) != 2)
                fail_line(lineno, "bad cube line");
            if (base < 0 || base >= static_cast<long>(uni->verts.size()))
                fail_line(lineno, "cube base id out of range");
            const std::string b = bits;
            if (static_cast<int>(b.size()) != n) fail_line(lineno, "dirmask must have n bits");
            DirMask mask = 0;
            for (int i = 0; i < n; ++i) {
                if (b[i] == '1')
                    mask |= DirMask(1) << i;
                else if (b[i] != '0')
                    fail_line(lineno, "dirmask must be 0/1 bits");
            }
            if (mask == 0) fail_line(lineno, "cube line must span at least one direction");
            cube_lines.push_back({static_cast<VertexId>(base), mask});
            cube_linenos.push_back(lineno);
        } else {
            fail_line(lineno, "unknown record '" + line.substr(0, 1) + "'");
        }
    }

    // Up pointers within the imported vertex set.
    uni->up.assign(uni->verts.size() * static_cast<std::size_t>(n), -1);
    int max_f = 0, max_w = 2;
    for (std::size_t v = 0; v < uni->verts.size(); ++v) {
        const auto& inj = uni->verts[v];
        max_f = std::max<int>(max_f, static_cast<int>(inj.deficiency_f()));
        for (int i = 0; i < n; ++i) {
            max_w = std::max(max_w, inj.support_bounds()[i]);
            max_w = std::max(max_w, std::abs(inj.translations()[i]));
        }
        for (const RayPoint& t : inj.exception_targets()) max_w = std::max(max_w, t.pos);
        for (int i = 1; i <= n; ++i)
            uni->up[v * n + i - 1] = uni->id_of(inj.up(i));
    }
    uni->build_down_csr();

    CubicalComplex X;
    X.uni = uni;
    X.spec.n = n;
    X.spec.f_bound = max_f;
    X.spec.window = max_w;
    X.member.assign(uni->verts.size(), 1);
    X.cube_bits.assign(uni->verts.size(), 1);
    for (std::size_t k = 0; k < cube_lines.size(); ++k) {
        const auto [base, mask] = cube_lines[k];
        if ((X.cube_bits[base] >> mask) & 1) fail_line(cube_linenos[k], "duplicate cube");
        // All corners must exist among the imported vertices.
        for (DirMask sub = mask;; sub = (sub - 1) & mask) {
            if (uni->vertex_at(base, sub) < 0)
                fail_line(cube_linenos[k], "cube corner missing from vertex set");
            if (sub == 0) break;
        }
        X.cube_bits[base] |= DirMask(1) << mask;
    }
    // Face closure.
    for (std::size_t k = 0; k < cube_lines.size(); ++k) {
        const auto [base, mask] = cube_lines[k];
        for (int i = 0; i < n; ++i) {
            const DirMask bit = DirMask(1) << i;
            if (!(mask & bit)) continue;
            const DirMask rest = static_cast<DirMask>(mask ^ bit);
            if (rest == 0) continue;
            const VertexId top = uni->up_of(static_cast<VertexId>(base), i + 1);
            if (!((X.cube_bits[base] >> rest) & 1) || top < 0 || !((X.cube_bits[top] >> rest) & 1))
                fail_line(cube_linenos[k], "cube set is not face-closed");
        }
    }
    return X;
}

CubicalComplex import_complex_string(const std::string& text)
{
    std::istringstream is(text);
    return import_complex(is);
}

void export_nerve(std::ostream& os, const Nerve& L, int n)
{
    os << "houghton-nerve v1 n=" << n << "\n";
    const auto present = L.complex.present_vertices();
    for (int v : present) os << "v " << v << " " << L.complex.label(v) << "\n";
    for (int v : present)
        os << "label " << v << " type=" << L.vertex_piece[v].first
           << " alpha=" << L.vertex_piece[v].second << "\n";
    for (const auto& f : L.complex.maximal_faces()) {
        os << "s";
        for (int v : f) os << " " << v;
        os << "\n";
    }
}

Nerve import_nerve(std::istream& is)
{
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line)) throw ParseError("empty nerve file");
    ++lineno;
    int n = 0;
    if (std::sscanf(line.c_str(), "houghton-nerve v1 n=%d", &n) != 1)
        fail_line(lineno, "bad header '" + line + "'");

    Nerve L;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            int id;
            std::string label;
            if (!(ls >> id >> label)) fail_line(lineno, "bad vertex line");
            if (id != L.complex.add_vertex(label)) fail_line(lineno, "vertex ids must be dense");
            L.complex.insert_simplex({id});
            L.vertex_piece.resize(L.complex.vertex_slots(), {0, 0});
        } else if (tag == "label") {
            int id, type, alpha;
            std::string t, a;
            if (!(ls >> id >> t >> a) || std::sscanf(t.c_str(), "type=%d", &type) != 1 ||
                std::sscanf(a.c_str(), "alpha=%d", &alpha) != 1)
                fail_line(lineno, "bad label line");
            if (id < 0 || id >= L.complex.vertex_slots()) fail_line(lineno, "label id out of range");
            L.vertex_piece[id] = {type, alpha};
        } else if (tag == "s") {
            std::vector<int> verts;
            int v;
            while (ls >> v) {
                if (v < 0 || v >= L.complex.vertex_slots())
                    fail_line(lineno, "simplex vertex out of range");
                verts.push_back(v);
            }
            if (verts.empty()) fail_line(lineno, "empty simplex line");
            L.complex.insert_simplex(verts);
        } else {
            fail_line(lineno, "unknown record '" + tag + "'");
        }
    }
    return L;
}

void dump_matrix(std::ostream& os, int degree, const SparseMat<std::int64_t>& M)
{
    os << "deg " << degree << " " << M.rows() << " " << M.cols() << "\n";
    M.for_each([&](int r, int c, std::int64_t v) { os << r << " " << c << " " << v << "\n"; });
}

} // namespace houghton
