#include "flagfold/fixtures.hpp"

namespace flagfold::fixtures {

namespace {

TokenFace tokens_of(std::initializer_list<int> vs) {
    TokenFace f;
    for (int v : vs) f.push_back(std::to_string(v));
    return f;
}

SimplicialComplex from_int_facets(const std::vector<std::vector<int>>& facets) {
    std::vector<TokenFace> fs;
    for (const auto& facet : facets) {
        TokenFace f;
        for (int v : facet) f.push_back(std::to_string(v));
        fs.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(fs);
}

}  // namespace

SimplicialComplex full_simplex(int n) {
    TokenFace f;
    for (int v = 0; v <= n; ++v) f.push_back(std::to_string(v));
    return SimplicialComplex::from_facets({f});
}

SimplicialComplex simplex_boundary(int n) {
    std::vector<TokenFace> fs;
    for (int skip = 0; skip <= n; ++skip) {
        TokenFace f;
        for (int v = 0; v <= n; ++v)
            if (v != skip) f.push_back(std::to_string(v));
        fs.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(fs);
}

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_facets({tokens_of({0, 1}), tokens_of({1, 2}), tokens_of({0, 2})});
}

SimplicialComplex torus_7() {
    std::vector<std::vector<int>> fs;
    for (int i = 0; i < 7; ++i) {
        fs.push_back({i, (i + 1) % 7, (i + 3) % 7});
        fs.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return from_int_facets(fs);
}

SimplicialComplex rp2_6() {
    return from_int_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

SimplicialComplex dunce_hat() {
    // Quotient of a 9-gon disk (boundary word w w w^-1 over the rim 0-1-2)
    // with a pentagonal interior ring 3..7; 17 triangles, 24 edges, no free
    // face, trivial reduced homology.
    return from_int_facets({{0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {0, 2, 5}, {0, 2, 6},
                            {0, 2, 7}, {1, 2, 3}, {1, 2, 4}, {1, 2, 6}, {0, 3, 4},
                            {2, 4, 5}, {1, 5, 6}, {0, 6, 7}, {2, 3, 7}, {3, 4, 5},
                            {3, 5, 6}, {3, 6, 7}});
}

}  // namespace flagfold::fixtures
