#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagfold/graph.hpp"

namespace flagfold {

/// Face as sorted indices into the owning complex's token table.
using Face = std::vector<int>;
/// Face named by vertex tokens (order irrelevant on input).
using TokenFace = std::vector<std::string>;

class ComplexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when full face enumeration would exceed the configured cap.
class FaceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultFaceCap = 1000000;

/// Finite abstract simplicial complex stored by facets.
///
/// Vertices are string tokens held in a sorted table; faces are sorted
/// index vectors into it. Facets are pairwise non-contained; isolated
/// vertices are 0-dimensional facets. Immutable value type.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds from a facet list; containments are pruned, duplicates merged.
    static SimplicialComplex from_facets(const std::vector<TokenFace>& facets);

    bool empty() const { return facets_.empty(); }
    std::size_t vertex_count() const { return tokens_.size(); }
    /// Max facet dimension; -1 when empty.
    int dim() const;

    const std::vector<std::string>& tokens() const { return tokens_; }
    const std::vector<Face>& facets() const { return facets_; }
    std::vector<TokenFace> facet_tokens() const;

    const std::string& token(int index) const { return tokens_.at(index); }
    /// Index of a token, or -1.
    int token_index(const std::string& token) const;
    bool has_vertex(const std::string& token) const { return token_index(token) >= 0; }

    /// Face membership: is the (sorted-index) face contained in some facet?
    bool has_face(const Face& face) const;
    bool has_face(const TokenFace& face) const;
    /// Sorted index face from tokens; throws ComplexError on unknown tokens.
    Face to_face(const TokenFace& face) const;
    TokenFace to_tokens(const Face& face) const;

    /// All nonempty faces, sorted by (dimension, lexicographic indices).
    /// Throws FaceCapExceeded past `cap` faces.
    std::vector<Face> all_faces(std::size_t cap = kDefaultFaceCap) const;
    /// Face counts per dimension 0..dim().
    std::vector<std::size_t> face_counts(std::size_t cap = kDefaultFaceCap) const;

    /// Subcomplex of all faces contained in `keep` (tokens keep their names).
    SimplicialComplex induced(const std::set<std::string>& keep) const;
    /// Removes v and every face containing it.
    SimplicialComplex delete_vertex(const std::string& token) const;
    /// Cones `apex` (a fresh token) over the subcomplex with the given
    /// facets; the base facets must be faces of this complex.
    SimplicialComplex cone_over(const std::string& apex,
                                const std::vector<TokenFace>& base_facets) const;

    /// Structural equality: same tokens, same facets.
    bool operator==(const SimplicialComplex& other) const {
        return tokens_ == other.tokens_ && facets_ == other.facets_;
    }
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

private:
    int token_index_unchecked(const std::string& token) const;

    std::vector<std::string> tokens_;
    std::vector<Face> facets_;
};

/// Flag complex of G: facets are the maximal cliques (Bron-Kerbosch with
/// pivoting), tokens are the vertices' display names.
SimplicialComplex clique_complex(const Graph& g);

/// Graph on the token table: vertex i = token index i, labeled with the
/// token; edges are the 1-faces.
Graph one_skeleton(const SimplicialComplex& k);

struct FlagCheck {
    bool flag = true;
    /// A smallest minimal non-face of size >= 3 when not flag.
    std::optional<TokenFace> witness;
};
FlagCheck is_flag(const SimplicialComplex& k);

/// link_K(v) = { F : v not in F, F u {v} in K }, stored by facets.
SimplicialComplex link(const SimplicialComplex& k, const std::string& token);

struct FreeFacePair {
    TokenFace tau;    // contained in exactly one facet
    TokenFace sigma;  // that facet
    bool elementary;  // dim tau == dim sigma - 1
};
/// All (tau, sigma) with sigma the unique facet properly containing tau.
std::vector<FreeFacePair> free_faces(const SimplicialComplex& k);

/// Removes every alpha with tau <= alpha <= sigma; (tau, sigma) must be free.
SimplicialComplex collapse_step(const SimplicialComplex& k, const TokenFace& tau,
                                const TokenFace& sigma);
/// Inverse of collapse_step: re-adds the interval [tau, sigma]; both
/// endpoints must be absent and the pair must be free in the result.
SimplicialComplex expand_step(const SimplicialComplex& k, const TokenFace& tau,
                              const TokenFace& sigma);

struct CollapseTrace {
    std::vector<FreeFacePair> steps;
    SimplicialComplex result;
};
/// Greedy elementary collapsing (highest-dimensional free pair first,
/// deterministic tiebreak) until no elementary free pair remains.
CollapseTrace greedy_collapse(const SimplicialComplex& k);
/// True iff greedy collapsing ends at a single vertex.
bool greedily_collapsible(const SimplicialComplex& k);

/// Barycentric subdivision: order complex of the face poset. The vertex
/// token of a face is its tokens joined with '.'.
SimplicialComplex barycentric(const SimplicialComplex& k);
/// Token given to the barycenter of `face` by barycentric().
std::string barycenter_token(const TokenFace& face);

/// Prefix carried by subdivision vertices inside cyl().
extern const std::string kCylBarycentricPrefix;

/// Mapping cylinder complex on V(K) u V(Bd K): sigma is a simplex iff its
/// K-part is a face of K, its Bd-part is a chain of the face poset, and
/// every chain element contains the K-part. Bd vertices are prefixed with
/// kCylBarycentricPrefix to keep the union disjoint.
SimplicialComplex cyl(const SimplicialComplex& k);

// Text format: one facet per line, whitespace-separated vertex tokens,
// '#' comments; writers emit facets sorted.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex_text(const std::string& text);
SimplicialComplex parse_complex_file(const std::string& path);
void write_complex(std::ostream& out, const SimplicialComplex& k);
std::string complex_to_text(const SimplicialComplex& k);

}  // namespace flagfold
