#include "flagfold/homology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace flagfold {

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw ComplexError("matrix dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (other.at(k, j) != 0) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const BigInt& x : data_)
        if (x != 0) return false;
    return true;
}

namespace {

std::vector<std::vector<Face>> faces_by_dim(const SimplicialComplex& k, std::size_t cap) {
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(std::max(k.dim() + 1, 0)));
    for (const auto& f : k.all_faces(cap)) out[f.size() - 1].push_back(f);
    return out;
}

}  // namespace

IntMatrix boundary_matrix(const SimplicialComplex& k, int d, std::size_t face_cap) {
    if (d < 1 || d > k.dim()) throw ComplexError("boundary dimension out of range");
    auto faces = faces_by_dim(k, face_cap);
    const auto& rows = faces[d - 1];
    const auto& cols = faces[d];
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

    IntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Face& sigma = cols[j];
        int sign = 1;
        for (std::size_t drop = 0; drop < sigma.size(); ++drop) {
            Face tau;
            for (std::size_t i = 0; i < sigma.size(); ++i)
                if (i != drop) tau.push_back(sigma[i]);
            m.at(row_index.at(tau), j) = sign;
            sign = -sign;
        }
    }
    return m;
}

SmithResult smith_normal_form(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<BigInt> diagonal;
    std::size_t r = 0;

    auto abs_of = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };

    while (r < rows && r < cols) {
        // Pivot: smallest |entry| in the trailing submatrix, ties broken by
        // fewest nonzeros in its row + column, then by position.
        std::size_t pi = 0, pj = 0;
        BigInt best = 0;
        std::size_t best_fill = 0;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = r; j < cols; ++j) {
                const BigInt& x = m.at(i, j);
                if (x == 0) continue;
                BigInt a = abs_of(x);
                std::size_t fill = 0;
                if (best == 0 || a <= best) {
                    for (std::size_t jj = r; jj < cols; ++jj)
                        if (m.at(i, jj) != 0) ++fill;
                    for (std::size_t ii = r; ii < rows; ++ii)
                        if (m.at(ii, j) != 0) ++fill;
                }
                if (best == 0 || a < best || (a == best && fill < best_fill)) {
                    best = a;
                    best_fill = fill;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;

        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pi, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, r), m.at(i, pj));

        // Clear row r and column r; swapping in a smaller remainder each
        // round terminates by descent on |pivot|.
        for (;;) {
            bool dirty = false;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m.at(i, r) == 0) continue;
                BigInt q = m.at(i, r) / m.at(r, r);
                if (q != 0)
                    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(r, j);
                if (m.at(i, r) != 0) {
                    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(i, j));
                    dirty = true;
                }
            }
            for (std::size_t j = r + 1; j < cols; ++j) {
                if (m.at(r, j) == 0) continue;
                BigInt q = m.at(r, j) / m.at(r, r);
                if (q != 0)
                    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) -= q * m.at(i, r);
                if (m.at(r, j) != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, r), m.at(i, j));
                    dirty = true;
                }
            }
            if (!dirty) break;
        }
        if (m.at(r, r) < 0)
            for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
        diagonal.push_back(m.at(r, r));
        ++r;
    }

    // Normalize the diagonal to a divisibility chain: on a diagonal matrix,
    // (d_i, d_j) -> (gcd, lcm) is realizable by unimodular operations.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diagonal.size(); ++i)
            for (std::size_t j = i + 1; j < diagonal.size(); ++j)
                if (diagonal[j] % diagonal[i] != 0) {
                    BigInt g = boost::multiprecision::gcd(diagonal[i], diagonal[j]);
                    BigInt l = diagonal[i] / g * diagonal[j];
                    diagonal[i] = g;
                    diagonal[j] = l;
                    changed = true;
                }
    }
    std::sort(diagonal.begin(), diagonal.end());
    return SmithResult{std::move(diagonal)};
}

bool HomologyProfile::trivial() const {
    for (int b : betti)
        if (b != 0) return false;
    return torsion.empty();
}

bool HomologyProfile::operator==(const HomologyProfile& other) const {
    if (reduced != other.reduced || torsion != other.torsion) return false;
    std::size_t n = std::max(betti.size(), other.betti.size());
    for (std::size_t d = 0; d < n; ++d) {
        int a = d < betti.size() ? betti[d] : 0;
        int b = d < other.betti.size() ? other.betti[d] : 0;
        if (a != b) return false;
    }
    return true;
}

std::string HomologyProfile::to_string() const {
    std::ostringstream out;
    out << (reduced ? "reduced betti (" : "betti (");
    for (std::size_t i = 0; i < betti.size(); ++i) out << (i ? "," : "") << betti[i];
    out << ")";
    if (!torsion.empty()) {
        out << " torsion";
        for (const auto& [d, f] : torsion) out << " H" << d << ":Z/" << f;
    }
    return out.str();
}

HomologyProfile homology(const SimplicialComplex& k, bool reduced, std::size_t face_cap) {
    if (k.empty()) throw ComplexError("homology of the empty complex");
    const int dim = k.dim();
    auto faces = faces_by_dim(k, face_cap);

    std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
    std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(dim) + 2);
    rank[0] = reduced ? 1 : 0;  // augmentation map
    for (int d = 1; d <= dim; ++d) {
        SmithResult snf = smith_normal_form(boundary_matrix(k, d, face_cap));
        rank[static_cast<std::size_t>(d)] = snf.rank();
        factors[static_cast<std::size_t>(d)] = snf.invariant_factors;
    }

    HomologyProfile profile;
    profile.reduced = reduced;
    for (int d = 0; d <= dim; ++d) {
        auto du = static_cast<std::size_t>(d);
        std::size_t n_d = faces[du].size();
        profile.betti.push_back(static_cast<int>(n_d - rank[du] - rank[du + 1]));
        for (const BigInt& f : factors[du + 1])
            if (f > 1) profile.torsion.emplace_back(d, f);
    }
    return profile;
}

long long euler_characteristic(const SimplicialComplex& k, std::size_t face_cap) {
    long long chi = 0;
    int sign = 1;
    for (std::size_t count : k.face_counts(face_cap)) {
        chi += sign * static_cast<long long>(count);
        sign = -sign;
    }
    return chi;
}

Presentation pi1_presentation(const SimplicialComplex& k, std::size_t face_cap) {
    if (k.empty()) throw ComplexError("pi1 of the empty complex");
    Graph skel = one_skeleton(k);
    const int n = static_cast<int>(skel.vertex_count());

    // Breadth-first spanning tree from vertex 0 (least token).
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::deque<int> queue{0};
    parent[0] = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : skel.neighbors(v))
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
    }
    for (int v = 0; v < n; ++v)
        if (parent[static_cast<std::size_t>(v)] == -2)
            throw ComplexError("pi1 requires a connected complex");

    auto is_tree_edge = [&](int u, int v) {
        return parent[static_cast<std::size_t>(u)] == v || parent[static_cast<std::size_t>(v)] == u;
    };

    Presentation p;
    std::map<std::pair<int, int>, int> gen_index;  // (u,v) with u < v -> 1-based
    for (auto [u, v] : skel.edges())
        if (!is_tree_edge(u, v)) {
            gen_index[{u, v}] = static_cast<int>(p.generators.size()) + 1;
            p.generators.push_back(k.tokens()[static_cast<std::size_t>(u)] + "--" +
                                   k.tokens()[static_cast<std::size_t>(v)]);
        }

    // Signed generator for the directed edge u -> v; 0 for tree edges.
    auto letter = [&](int u, int v) -> int {
        auto it = gen_index.find({std::min(u, v), std::max(u, v)});
        if (it == gen_index.end()) return 0;
        return u < v ? it->second : -it->second;
    };

    for (const auto& f : k.all_faces(face_cap)) {
        if (f.size() != 3) continue;
        int a = f[0], b = f[1], c = f[2];
        std::vector<int> word;
        for (int x : {letter(a, b), letter(b, c), letter(c, a)})
            if (x != 0) word.push_back(x);
        p.relators.push_back(std::move(word));
    }
    return p;
}

SmithResult abelianization(const Presentation& p, std::size_t* free_rank_out) {
    IntMatrix m(p.relators.size(), p.generators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (int g : p.relators[i]) {
            std::size_t j = static_cast<std::size_t>(std::abs(g)) - 1;
            m.at(i, j) += (g > 0 ? 1 : -1);
        }
    SmithResult snf = smith_normal_form(std::move(m));
    if (free_rank_out) *free_rank_out = p.generators.size() - snf.rank();
    return snf;
}

namespace {

void free_cyclic_reduce(std::vector<int>& word) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> out;
        for (int g : word) {
            if (!out.empty() && out.back() == -g) {
                out.pop_back();
                changed = true;
            } else {
                out.push_back(g);
            }
        }
        while (out.size() >= 2 && out.front() == -out.back()) {
            out.erase(out.begin());
            out.pop_back();
            changed = true;
        }
        word = std::move(out);
    }
}

// Canonical representative under rotation and inversion, for dedup.
std::vector<int> word_canon(const std::vector<int>& word) {
    std::vector<int> best;
    auto consider = [&](std::vector<int> w) {
        for (std::size_t s = 0; s < std::max<std::size_t>(w.size(), 1); ++s) {
            std::vector<int> rot(w.begin() + static_cast<long>(s), w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(s));
            if (best.empty() || rot < best) best = rot;
        }
    };
    if (word.empty()) return {};
    consider(word);
    std::vector<int> inv;
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv.push_back(-*it);
    consider(inv);
    return best;
}

}  // namespace

TrivializeOutcome try_trivialize(Presentation p, std::size_t max_passes) {
    auto relators = p.relators;
    std::size_t n_gens = p.generators.size();

    for (std::size_t pass = 0; pass < max_passes; ++pass) {
        bool changed = false;

        for (auto& w : relators) free_cyclic_reduce(w);
        relators.erase(std::remove_if(relators.begin(), relators.end(),
                                      [](const std::vector<int>& w) { return w.empty(); }),
                       relators.end());

        // Relator subsumption: duplicates up to rotation/inversion.
        {
            std::set<std::vector<int>> seen;
            std::vector<std::vector<int>> kept;
            for (auto& w : relators) {
                auto c = word_canon(w);
                if (seen.insert(c).second) kept.push_back(std::move(w));
                else changed = true;
            }
            relators = std::move(kept);
        }

        // Occurrence counts per generator.
        std::map<int, std::size_t> occurrences;
        for (const auto& w : relators)
            for (int g : w) ++occurrences[std::abs(g)];

        // A trivial generator (relator of length 1) disappears everywhere.
        for (std::size_t i = 0; i < relators.size(); ++i)
            if (relators[i].size() == 1) {
                int dead = std::abs(relators[i][0]);
                for (auto& w : relators)
                    w.erase(std::remove_if(w.begin(), w.end(),
                                           [&](int g) { return std::abs(g) == dead; }),
                            w.end());
                occurrences.erase(dead);
                --n_gens;
                changed = true;
                break;
            }

        if (!changed) {
            // Tietze: a generator occurring exactly once overall is defined
            // by its relator; both can be removed.
            for (const auto& [gen, count] : occurrences)
                if (count == 1) {
                    for (std::size_t i = 0; i < relators.size(); ++i) {
                        bool holds = std::any_of(relators[i].begin(), relators[i].end(),
                                                 [&](int g) { return std::abs(g) == gen; });
                        if (holds) {
                            // Remaining letters stay relator-free, so their
                            // occurrence counts drop in the next pass.
                            relators.erase(relators.begin() + static_cast<long>(i));
                            break;
                        }
                    }
                    --n_gens;
                    changed = true;
                    break;
                }
        }

        if (!changed) break;
        if (n_gens == 0 && relators.empty()) return TrivializeOutcome::Trivial;
    }
    if (n_gens == 0 && relators.empty()) return TrivializeOutcome::Trivial;
    return TrivializeOutcome::Unknown;
}

}  // namespace flagfold
