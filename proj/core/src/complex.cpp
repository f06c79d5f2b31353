#include "flagfold/complex.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace flagfold {

namespace {

bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
    Face out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<TokenFace>& facets) {
    SimplicialComplex k;
    std::set<std::string> toks;
    for (const auto& f : facets)
        for (const auto& t : f) {
            if (t.empty()) throw ComplexError("empty vertex token");
            toks.insert(t);
        }
    k.tokens_.assign(toks.begin(), toks.end());

    std::set<Face> unique;
    for (const auto& f : facets) {
        if (f.empty()) throw ComplexError("empty facet");
        std::set<int> idx;
        for (const auto& t : f) idx.insert(k.token_index_unchecked(t));
        unique.insert(Face(idx.begin(), idx.end()));
    }
    for (const auto& f : unique) {
        bool maximal = true;
        for (const auto& g : unique)
            if (f != g && face_subset(f, g)) {
                maximal = false;
                break;
            }
        if (maximal) k.facets_.push_back(f);
    }
    std::sort(k.facets_.begin(), k.facets_.end());
    return k;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<TokenFace> SimplicialComplex::facet_tokens() const {
    std::vector<TokenFace> out;
    for (const auto& f : facets_) out.push_back(to_tokens(f));
    return out;
}

int SimplicialComplex::token_index(const std::string& token) const {
    auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token);
    if (it == tokens_.end() || *it != token) return -1;
    return static_cast<int>(it - tokens_.begin());
}

int SimplicialComplex::token_index_unchecked(const std::string& token) const {
    return static_cast<int>(
        std::lower_bound(tokens_.begin(), tokens_.end(), token) - tokens_.begin());
}

bool SimplicialComplex::has_face(const Face& face) const {
    if (face.empty()) return false;
    for (const auto& f : facets_)
        if (face_subset(face, f)) return true;
    return false;
}

bool SimplicialComplex::has_face(const TokenFace& face) const {
    std::set<int> idx;
    for (const auto& t : face) {
        int i = token_index(t);
        if (i < 0) return false;
        idx.insert(i);
    }
    return has_face(Face(idx.begin(), idx.end()));
}

Face SimplicialComplex::to_face(const TokenFace& face) const {
    std::set<int> idx;
    for (const auto& t : face) {
        int i = token_index(t);
        if (i < 0) throw ComplexError("unknown vertex token '" + t + "'");
        idx.insert(i);
    }
    return Face(idx.begin(), idx.end());
}

TokenFace SimplicialComplex::to_tokens(const Face& face) const {
    TokenFace out;
    for (int i : face) out.push_back(tokens_.at(i));
    return out;
}

std::vector<Face> SimplicialComplex::all_faces(std::size_t cap) const {
    std::set<Face> seen;
    for (const auto& facet : facets_) {
        std::size_t k = facet.size();
        if (k >= 8 * sizeof(std::size_t) - 1 || ((std::size_t{1} << k) - 1) > cap)
            throw FaceCapExceeded("facet alone exceeds face cap");
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            Face f;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b)) f.push_back(facet[b]);
            seen.insert(std::move(f));
            if (seen.size() > cap) throw FaceCapExceeded("face enumeration exceeds cap");
        }
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<std::size_t> SimplicialComplex::face_counts(std::size_t cap) const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(dim() + 1, 0)), 0);
    for (const auto& f : all_faces(cap)) ++counts[f.size() - 1];
    return counts;
}

SimplicialComplex SimplicialComplex::induced(const std::set<std::string>& keep) const {
    std::vector<TokenFace> fs;
    for (const auto& facet : facets_) {
        TokenFace restricted;
        for (int i : facet)
            if (keep.count(tokens_[i])) restricted.push_back(tokens_[i]);
        if (!restricted.empty()) fs.push_back(std::move(restricted));
    }
    return from_facets(fs);
}

SimplicialComplex SimplicialComplex::delete_vertex(const std::string& token) const {
    if (!has_vertex(token)) throw ComplexError("unknown vertex token '" + token + "'");
    std::set<std::string> keep(tokens_.begin(), tokens_.end());
    keep.erase(token);
    return induced(keep);
}

SimplicialComplex SimplicialComplex::cone_over(const std::string& apex,
                                               const std::vector<TokenFace>& base_facets) const {
    if (has_vertex(apex)) throw ComplexError("cone apex '" + apex + "' already present");
    for (const auto& b : base_facets)
        if (!has_face(b)) throw ComplexError("cone base facet is not a face of the complex");
    std::vector<TokenFace> fs = facet_tokens();
    if (base_facets.empty()) {
        fs.push_back({apex});
    } else {
        for (const auto& b : base_facets) {
            TokenFace f = b;
            f.push_back(apex);
            fs.push_back(std::move(f));
        }
    }
    return from_facets(fs);
}

SimplicialComplex clique_complex(const Graph& g) {
    std::vector<VertexSet> cliques;
    // Bron-Kerbosch with max-degree pivot.
    std::function<void(VertexSet, VertexSet, VertexSet)> bk =
        [&](VertexSet r, VertexSet p, VertexSet x) {
            if (p.empty() && x.empty()) {
                cliques.push_back(r);
                return;
            }
            Vertex pivot = -1;
            std::size_t best = 0;
            VertexSet both = p;
            both.insert(x.begin(), x.end());
            for (Vertex u : both) {
                std::size_t cnt = 0;
                for (Vertex v : p)
                    if (g.has_edge(u, v)) ++cnt;
                if (pivot == -1 || cnt > best) {
                    pivot = u;
                    best = cnt;
                }
            }
            VertexSet candidates;
            for (Vertex v : p)
                if (!g.has_edge(pivot, v)) candidates.insert(v);
            for (Vertex v : candidates) {
                VertexSet r2 = r;
                r2.insert(v);
                VertexSet p2, x2;
                for (Vertex w : p)
                    if (g.has_edge(v, w)) p2.insert(w);
                for (Vertex w : x)
                    if (g.has_edge(v, w)) x2.insert(w);
                bk(std::move(r2), std::move(p2), std::move(x2));
                p.erase(v);
                x.insert(v);
            }
        };
    bk({}, g.vertices(), {});

    std::vector<TokenFace> facets;
    for (const auto& c : cliques) {
        if (c.empty()) continue;  // empty graph yields one empty "clique"
        TokenFace f;
        for (Vertex v : c) f.push_back(g.display_name(v));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

Graph one_skeleton(const SimplicialComplex& k) {
    Graph g = Graph::on_vertices(static_cast<int>(k.vertex_count()));
    for (std::size_t i = 0; i < k.vertex_count(); ++i)
        g.set_label(static_cast<Vertex>(i), k.tokens()[i]);
    for (const auto& facet : k.facets())
        for (std::size_t a = 0; a < facet.size(); ++a)
            for (std::size_t b = a + 1; b < facet.size(); ++b)
                if (!g.has_edge(facet[a], facet[b])) g = g.add_edge(facet[a], facet[b]);
    return g;
}

FlagCheck is_flag(const SimplicialComplex& k) {
    Graph skel = one_skeleton(k);
    // Smallest clique of the skeleton that is not a face is a minimal
    // non-face: all of its proper subsets are smaller cliques, hence faces.
    std::vector<Face> cliques;
    std::function<void(Face, int)> grow = [&](Face clique, int start) {
        for (int v = start; v < static_cast<int>(k.vertex_count()); ++v) {
            bool joined = true;
            for (int u : clique)
                if (!skel.has_edge(u, v)) {
                    joined = false;
                    break;
                }
            if (!joined) continue;
            Face next = clique;
            next.push_back(v);
            if (next.size() >= 3) cliques.push_back(next);
            if (cliques.size() > kDefaultFaceCap)
                throw FaceCapExceeded("clique enumeration exceeds cap");
            grow(next, v + 1);
        }
    };
    grow({}, 0);
    std::sort(cliques.begin(), cliques.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (const auto& c : cliques)
        if (!k.has_face(c)) return FlagCheck{false, k.to_tokens(c)};
    return FlagCheck{true, std::nullopt};
}

SimplicialComplex link(const SimplicialComplex& k, const std::string& token) {
    int v = k.token_index(token);
    if (v < 0) throw ComplexError("unknown vertex token '" + token + "'");
    std::vector<TokenFace> fs;
    for (const auto& facet : k.facets()) {
        if (!std::binary_search(facet.begin(), facet.end(), v)) continue;
        TokenFace rest;
        for (int i : facet)
            if (i != v) rest.push_back(k.token(i));
        if (!rest.empty()) fs.push_back(std::move(rest));
    }
    return SimplicialComplex::from_facets(fs);
}

namespace {

// Count of facets containing `face`.
int containing_facets(const SimplicialComplex& k, const Face& face) {
    int n = 0;
    for (const auto& f : k.facets())
        if (face_subset(face, f)) ++n;
    return n;
}

}  // namespace

std::vector<FreeFacePair> free_faces(const SimplicialComplex& k) {
    std::vector<FreeFacePair> out;
    for (const auto& sigma : k.facets()) {
        std::size_t n = sigma.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
            Face tau;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (std::size_t{1} << b)) tau.push_back(sigma[b]);
            if (containing_facets(k, tau) == 1)
                out.push_back(FreeFacePair{k.to_tokens(tau), k.to_tokens(sigma),
                                           tau.size() + 1 == sigma.size()});
        }
    }
    std::sort(out.begin(), out.end(), [](const FreeFacePair& a, const FreeFacePair& b) {
        return std::tie(a.tau, a.sigma) < std::tie(b.tau, b.sigma);
    });
    return out;
}

SimplicialComplex collapse_step(const SimplicialComplex& k, const TokenFace& tau,
                                const TokenFace& sigma) {
    Face t = k.to_face(tau);
    Face s = k.to_face(sigma);
    if (!face_subset(t, s) || t == s) throw ComplexError("tau must be a proper face of sigma");
    auto facets = k.facets();
    if (std::find(facets.begin(), facets.end(), s) == facets.end())
        throw ComplexError("sigma is not a facet");
    if (containing_facets(k, t) != 1) throw ComplexError("tau is not free");

    std::vector<TokenFace> fs;
    for (const auto& f : facets)
        if (f != s) fs.push_back(k.to_tokens(f));
    // Maximal survivors inside sigma are sigma minus one vertex of tau.
    for (int drop : t) {
        TokenFace f;
        for (int i : s)
            if (i != drop) f.push_back(k.token(i));
        if (!f.empty()) fs.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(fs);
}

SimplicialComplex expand_step(const SimplicialComplex& k, const TokenFace& tau,
                              const TokenFace& sigma) {
    std::set<std::string> t(tau.begin(), tau.end());
    std::set<std::string> s(sigma.begin(), sigma.end());
    if (!std::includes(s.begin(), s.end(), t.begin(), t.end()) || t == s)
        throw ComplexError("tau must be a proper subset of sigma");
    // The collapse removed the whole interval [tau, sigma]; its inverse
    // requires both endpoints absent and everything below the interval present.
    if (k.has_face(tau)) throw ComplexError("tau is already a face");
    if (k.has_face(sigma)) throw ComplexError("sigma is already a face");
    // Every face of sigma avoiding tau must already be present; the maximal
    // such are sigma minus one vertex of tau.
    for (const auto& drop : t) {
        TokenFace f;
        for (const auto& tok : s)
            if (tok != drop) f.push_back(tok);
        if (!f.empty() && !k.has_face(f))
            throw ComplexError("expansion would add faces outside the interval");
    }
    std::vector<TokenFace> fs = k.facet_tokens();
    fs.emplace_back(s.begin(), s.end());
    SimplicialComplex out = SimplicialComplex::from_facets(fs);
    if (containing_facets(out, out.to_face(sigma)) != 1 ||
        containing_facets(out, out.to_face(tau)) != 1)
        throw ComplexError("pair is not free after expansion");
    return out;
}

CollapseTrace greedy_collapse(const SimplicialComplex& k) {
    CollapseTrace trace;
    trace.result = k;
    for (;;) {
        // Elementary free pairs only: tau of codimension 1 in its unique facet.
        std::optional<FreeFacePair> pick;
        for (const auto& sigma : trace.result.facets()) {
            if (sigma.size() < 2) continue;
            for (std::size_t skip = 0; skip < sigma.size(); ++skip) {
                Face tau;
                for (std::size_t i = 0; i < sigma.size(); ++i)
                    if (i != skip) tau.push_back(sigma[i]);
                if (containing_facets(trace.result, tau) != 1) continue;
                FreeFacePair cand{trace.result.to_tokens(tau), trace.result.to_tokens(sigma), true};
                bool better = !pick || cand.sigma.size() > pick->sigma.size() ||
                              (cand.sigma.size() == pick->sigma.size() &&
                               std::tie(cand.sigma, cand.tau) < std::tie(pick->sigma, pick->tau));
                if (better) pick = cand;
            }
        }
        if (!pick) break;
        trace.result = collapse_step(trace.result, pick->tau, pick->sigma);
        trace.steps.push_back(*pick);
    }
    return trace;
}

bool greedily_collapsible(const SimplicialComplex& k) {
    const SimplicialComplex end = greedy_collapse(k).result;
    return end.facets().size() == 1 && end.facets()[0].size() == 1;
}

std::string barycenter_token(const TokenFace& face) {
    std::set<std::string> sorted(face.begin(), face.end());
    std::string out;
    for (const auto& t : sorted) {
        if (!out.empty()) out += '.';
        out += t;
    }
    return out;
}

SimplicialComplex barycentric(const SimplicialComplex& k) {
    // Maximal chains of the face poset are full flags inside a facet.
    std::vector<TokenFace> chains;
    for (const auto& facet : k.facets()) {
        TokenFace base = k.to_tokens(facet);
        std::vector<std::string> perm = base;
        std::sort(perm.begin(), perm.end());
        do {
            TokenFace chain;
            TokenFace prefix;
            for (const auto& t : perm) {
                prefix.push_back(t);
                chain.push_back(barycenter_token(prefix));
            }
            chains.push_back(chain);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::from_facets(chains);
}

const std::string kCylBarycentricPrefix = "b:";

SimplicialComplex cyl(const SimplicialComplex& k) {
    if (k.empty()) throw ComplexError("cyl of the empty complex");
    std::vector<Face> faces = k.all_faces();

    std::vector<TokenFace> candidates;
    // Candidate facets: (face F of K, possibly empty) x (maximal chain of
    // faces all containing F). Condition (3) is the containment filter.
    std::vector<Face> bottoms = faces;
    bottoms.push_back({});  // pure-subdivision simplices
    for (const auto& bottom : bottoms) {
        std::vector<Face> above;
        for (const auto& f : faces)
            if (face_subset(bottom, f)) above.push_back(f);
        // Enumerate maximal chains within `above` (ordered by inclusion).
        std::function<void(std::vector<Face>)> extend = [&](std::vector<Face> chain) {
            const Face& top = chain.back();
            bool extended = false;
            for (const auto& f : above)
                if (f.size() == top.size() + 1 && face_subset(top, f)) {
                    auto next = chain;
                    next.push_back(f);
                    extend(std::move(next));
                    extended = true;
                }
            if (extended) return;
            TokenFace simplex = k.to_tokens(bottom);
            for (const auto& f : chain)
                simplex.push_back(kCylBarycentricPrefix + barycenter_token(k.to_tokens(f)));
            candidates.push_back(std::move(simplex));
        };
        // Chains start at the smallest faces above `bottom`, which is
        // `bottom` itself when nonempty, else any vertex.
        if (!bottom.empty()) {
            extend({bottom});
        } else {
            for (const auto& f : above)
                if (f.size() == 1) extend({f});
        }
    }
    return SimplicialComplex::from_facets(candidates);
}

SimplicialComplex parse_complex(std::istream& in) {
    std::vector<TokenFace> facets;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        TokenFace f;
        std::string tok;
        while (ls >> tok) f.push_back(tok);
        std::set<std::string> uniq(f.begin(), f.end());
        if (uniq.size() != f.size())
            throw ComplexError("line " + std::to_string(line_no) + ": repeated vertex in facet");
        if (!f.empty()) facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex parse_complex_text(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in);
}

SimplicialComplex parse_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ComplexError("cannot open " + path);
    return parse_complex(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& k) {
    for (const auto& facet : k.facets()) {
        bool first = true;
        for (int i : facet) {
            if (!first) out << ' ';
            out << k.token(i);
            first = false;
        }
        out << '\n';
    }
}

std::string complex_to_text(const SimplicialComplex& k) {
    std::ostringstream out;
    write_complex(out, k);
    return out.str();
}

}  // namespace flagfold
