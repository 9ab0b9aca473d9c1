#ifndef HOUGHTON_SIMPLICIAL_COMPLEX_HPP
#define HOUGHTON_SIMPLICIAL_COMPLEX_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "houghton/chain_complex.hpp"

namespace houghton {

/// Finite abstract simplicial complex with labelled vertices. The face set is
/// kept downward closed; vertices are present only once their singleton face
/// is inserted.
class SimplicialComplex {
public:
    int add_vertex(const std::string& label);
    int vertex_id(const std::string& label) const; // -1 if unknown
    const std::string& label(int v) const { return labels_[v]; }
    int vertex_slots() const { return static_cast<int>(labels_.size()); }

    /// Inserts the simplex and all its faces. Vertex ids must exist.
    void insert_simplex(std::vector<int> verts);

    bool has_face(std::vector<int> verts) const;
    const std::set<std::vector<int>>& faces() const { return faces_; }
    std::vector<std::vector<int>> maximal_faces() const;

    bool empty() const { return faces_.empty(); }
    int dim() const;
    std::vector<std::int64_t> face_counts() const; // by dimension

    std::vector<int> present_vertices() const;
    bool adjacent(int a, int b) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::set<std::vector<int>> faces_; // each sorted ascending
};

/// Every pairwise-adjacent vertex set spans a simplex.
bool is_flag(const SimplicialComplex& L);

/// Ordered-simplex boundary with alternating signs; the cell basis orders
/// vertices lexicographically by label.
ChainComplex simplicial_chain_complex(const SimplicialComplex& L);

} // namespace houghton

#endif
