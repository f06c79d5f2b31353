#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagfold/complex.hpp"
#include "flagfold/moves.hpp"

namespace flagfold {

/// Contractibility certification for a general complex, layered like the
/// graph certifier: greedy collapse to a point (Yes), reduced homology
/// refutation (No), then one barycentric subdivision handed to the graph
/// certifier via its flag 1-skeleton, else Unknown.
Verdict certify_complex_contractible(const SimplicialComplex& k, const Budget& budget = {});

/// Vertex move on a complex, certified through the link.
struct ComplexMove {
    enum class Kind { LinkDeleteVertex, LinkAddVertex };

    Kind kind;
    std::string vertex;                  // deleted, or the fresh apex added
    std::vector<TokenFace> link_facets;  // LinkAddVertex: the link to cone over
};

struct ComplexMoveOutcome {
    Verdict link_verdict;
    std::optional<SimplicialComplex> result;

    bool applied() const { return result.has_value(); }
};

/// Deletion removes the vertex and all cofaces; addition cones a fresh
/// vertex over the given link subcomplex. Applied only when the relevant
/// link certifies contractible; No is a rejection with witness, Unknown an
/// inconclusive rejection.
ComplexMoveOutcome link_vertex_move(const SimplicialComplex& k, const ComplexMove& m,
                                    const Budget& budget = {});

struct LinkDeletionSequence {
    bool found = false;
    std::vector<std::string> deletions;  // vertices in deletion order
    std::string diagnostics;
};

/// Backtracking search for an order of certified link-vertex deletions
/// from K down to `target` (which must be the subcomplex induced on a
/// vertex subset). Unknown on budget exhaustion.
LinkDeletionSequence find_link_deletion_sequence(const SimplicialComplex& k,
                                                 const SimplicialComplex& target,
                                                 const Budget& budget = {});

}  // namespace flagfold
