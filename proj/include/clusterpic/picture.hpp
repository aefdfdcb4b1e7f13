#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clusterpic/morphism.hpp"
#include "clusterpic/smith.hpp"

namespace clusterpic {

// ---------------------------------------------------------------------------
// Picture-group presentation.
// ---------------------------------------------------------------------------

// One letter of a relation word: the generator x_{root} to the power exp.
struct Letter {
    int root = 0;
    int exp = 1;  // +1 or -1
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse_word(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->root, -it->exp});
    return out;
}

// Representative of the relation's class under cyclic rotation and inversion:
// the lexicographically least rotation of the word or its inverse.
inline Word canonical_word(const Word& w) {
    Word best = w;
    for (const Word& base : {w, inverse_word(w)})
        for (size_t k = 0; k < base.size(); ++k) {
            Word rot(base.begin() + k, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + k);
            if (rot < best) best = rot;
        }
    return best;
}

struct Presentation {
    int generators = 0;           // one symbol x_alpha per positive root id
    std::vector<Word> relations;  // canonical representatives, sorted
};

inline std::string word_name(const Model& m, const Word& w) {
    std::string s;
    for (const Letter& l : w) {
        if (!s.empty()) s += " ";
        s += "x[" + m.names[l.root] + "]";
        if (l.exp < 0) s += "^-1";
    }
    return s;
}

// One relation per ordered pair of hom-orthogonal roots (alpha, beta) with
// ext(M_beta, M_alpha) = 0: the word
//     x_alpha x_beta (x_beta x_{gamma_1} ... x_{gamma_m} x_alpha)^{-1}
// where beta, gamma_1, ..., gamma_m, alpha are the roots of the rank-2
// subsystem spanned by alpha and beta in increasing order of the coefficient
// ratio a/b for gamma = a*alpha + b*beta.  Pairs with vanishing extensions in
// both directions yield the plain commutator from either order; duplicates
// collapse under the rotation/inversion equivalence.
inline Presentation presentation(const Model& m) {
    Presentation p;
    p.generators = (int)m.roots.size();
    std::set<Word> rels;
    int nroots = (int)m.roots.size();
    for (int a = 0; a < nroots; ++a)
        for (int b = a + 1; b < nroots; ++b) {
            const DimVec& da = m.roots[a];
            const DimVec& db = m.roots[b];
            if (hom_dim(m, da, db) != 0 || hom_dim(m, db, da) != 0) continue;
            for (auto [al, be] : {std::pair{a, b}, std::pair{b, a}}) {
                if (ext_dim(m, m.roots[be], m.roots[al]) != 0) continue;
                std::vector<DimVec> chain = rank2_chain(m, m.roots[al], m.roots[be]);
                Word w{{al, +1}, {be, +1}};
                for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                    w.push_back({m.root_id(*it), -1});
                rels.insert(canonical_word(w));
            }
        }
    p.relations.assign(rels.begin(), rels.end());
    return p;
}

// Rank of the abelianized picture group: generator count minus the rank of
// the exponent-sum matrix of the relations.
inline int abelianization_rank(const Presentation& p) {
    BigMat rel(p.relations.size(), std::vector<mpz_class>(p.generators, 0));
    for (size_t i = 0; i < p.relations.size(); ++i)
        for (const Letter& l : p.relations[i]) rel[i][l.root] += l.exp;
    return p.generators - smith_normal_form(std::move(rel)).rank;
}

// ---------------------------------------------------------------------------
// Stasheff comparison for straight type A.
// ---------------------------------------------------------------------------

namespace detail {

// Straight-orientation spec string for A_{n-1}: vertices 1 > 2 > ... > n-1.
inline std::string straight_a_spec(int n) {
    std::string s = "A" + std::to_string(n - 1) + ":";
    for (int v = 1; v <= n - 1; ++v) s += (v == 1 ? " " : ">") + std::to_string(v);
    return s;
}

}  // namespace detail

// Checks that presentation(A_{n-1}) is exactly the Stasheff group Sta_n:
// generators x_ij for 0 <= i < j <= n-1 (the root supported on the interval
// (i, j] of vertices), relations
//   x_ik = [x_ij, x_jk]   with [a, b] = b^{-1} a b a^{-1}   for i < j < k,
//   commutators for pairs of disjoint or strictly nested intervals.
// Returns true on an exact match of relation classes; on mismatch fills
// *diff_out (when given) with the symmetric difference.
inline bool check_stasheff(int n, std::string* diff_out = nullptr) {
    if (n < 2) throw invalid_argument_error("check_stasheff: need n >= 2");
    Model m = build_model(detail::straight_a_spec(n));
    Presentation p = presentation(m);

    // Root <-> interval dictionary.
    std::map<std::pair<int, int>, int> gen;  // (i, j) -> root id
    for (int r = 0; r < (int)m.roots.size(); ++r) {
        const DimVec& d = m.roots[r];
        int lo = -1, hi = -1;
        for (int v = 0; v < m.n(); ++v)
            if (d[v]) {
                if (lo < 0) lo = v;
                hi = v;
            }
        gen[{lo, hi + 1}] = r;  // support (i, j] with 0-indexed vertices
    }

    std::set<Word> expected;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (std::pair{i, j} >= std::pair{k, l}) continue;
                    if (j == k) {  // adjacent: pentagon x_il relation
                        Word w{{gen.at({i, l}), -1},
                               {gen.at({j, l}), -1},
                               {gen.at({i, j}), +1},
                               {gen.at({j, l}), +1},
                               {gen.at({i, j}), -1}};
                        expected.insert(canonical_word(w));
                    } else if (l < i || j < k            // disjoint with a gap
                               || (i < k && l < j)) {    // strictly nested
                        Word w{{gen.at({i, j}), +1},
                               {gen.at({k, l}), +1},
                               {gen.at({i, j}), -1},
                               {gen.at({k, l}), -1}};
                        expected.insert(canonical_word(w));
                    }
                }

    std::set<Word> actual(p.relations.begin(), p.relations.end());
    if (actual == expected) return true;
    if (diff_out) {
        std::string diff;
        for (const Word& w : actual)
            if (!expected.count(w)) diff += "unexpected: " + word_name(m, w) + "\n";
        for (const Word& w : expected)
            if (!actual.count(w)) diff += "missing: " + word_name(m, w) + "\n";
        *diff_out = diff;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Cubical chain complex of the cluster morphism category.
// ---------------------------------------------------------------------------

struct ChainComplex {
    // basis[k] = all rank-k morphisms, sorted; degree 0 = identity morphisms.
    std::vector<std::vector<ClusterMorphism>> basis;
    // boundary[k] = columns of the map C_k -> C_{k-1}; boundary[0] is empty.
    std::vector<SparseCols> boundary;

    long long euler_characteristic() const {
        long long chi = 0;
        int sign = 1;
        for (const auto& b : basis) {
            chi += sign * (long long)b.size();
            sign = -sign;
        }
        return chi;
    }
};

namespace detail {

// The projection of component t into perp(w, {t_i}): the unique object there
// whose signed dimension vector is congruent to t's modulo dim(root of t_i).
inline ClusterObject project_component(const Model& m, const Wide& face_dom,
                                       const DimVec& axis_dim, const ClusterObject& t) {
    std::optional<ClusterObject> hit;
    for (const ClusterObject& cand : objects_of(m, face_dom)) {
        if (!in_zspan({axis_dim}, sub(signed_dim(m, cand), signed_dim(m, t)))) continue;
        if (hit) throw invariant_violation("project_component: projection is not unique");
        hit = cand;
    }
    if (!hit) throw invariant_violation("project_component: no projection found");
    return *hit;
}

inline int permutation_sign(std::vector<ClusterObject> v) {
    int sign = 1;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[j] < v[i]) sign = -sign;
    return sign;
}

}  // namespace detail

// Boundary of the k-cube [T]: W -> W' with canonically ordered components
// t_1 < ... < t_k:
//   d[T] = sum_i (-1)^{i-1} ( [T/t_i]: perp(W, t_i) -> W'  -  [T\t_i]: W -> perp(W, T\t_i) )
// where the residual face's components are the projections of the t_j into
// perp(W, t_i), with the orientation sign of re-sorting them canonically.
inline ChainComplex cubical_complex(const Model& m) {
    ChainComplex c;
    for (const ClusterMorphism& f : all_morphisms(m)) {
        if ((int)c.basis.size() <= f.rank()) c.basis.resize(f.rank() + 1);
        c.basis[f.rank()].push_back(f);
    }
    std::vector<std::map<ClusterMorphism, int>> index(c.basis.size());
    for (size_t k = 0; k < c.basis.size(); ++k) {
        std::sort(c.basis[k].begin(), c.basis[k].end());
        for (size_t i = 0; i < c.basis[k].size(); ++i) index[k][c.basis[k][i]] = (int)i;
    }

    c.boundary.resize(c.basis.size());
    for (size_t k = 1; k < c.basis.size(); ++k) {
        c.boundary[k].reserve(c.basis[k].size());
        for (const ClusterMorphism& f : c.basis[k]) {
            std::map<int, long long> column;
            for (int i = 0; i < (int)f.T.size(); ++i) {
                int sign = (i % 2 == 0) ? +1 : -1;  // (-1)^{i-1} with 1-based i

                std::vector<ClusterObject> rest;
                for (int j = 0; j < (int)f.T.size(); ++j)
                    if (j != i) rest.push_back(f.T[j]);

                ClusterMorphism deletion = make_morphism(m, f.dom, rest);
                column[index[k - 1].at(deletion)] -= sign;

                Wide face_dom = perp(m, f.dom, {f.T[i]});
                const DimVec& axis = m.roots[f.T[i].root];
                std::vector<ClusterObject> projected;
                for (const ClusterObject& t : rest)
                    projected.push_back(detail::project_component(m, face_dom, axis, t));
                int perm = detail::permutation_sign(projected);
                ClusterMorphism residual = make_morphism(m, face_dom, projected);
                if (residual.cod != f.cod)
                    throw invariant_violation("cubical_complex: residual face has wrong codomain");
                column[index[k - 1].at(residual)] += sign * perm;
            }
            auto& col = c.boundary[k].emplace_back();
            for (auto& [row, coeff] : column)
                if (coeff) col.push_back({row, coeff});
        }
    }

    // dd = 0 in every degree, else the sign convention is broken.
    for (size_t k = 2; k < c.boundary.size(); ++k)
        for (const auto& col : c.boundary[k]) {
            std::map<int, long long> acc;
            for (auto& [mid, a] : col)
                for (auto& [row, b] : c.boundary[k - 1][mid]) acc[row] += a * b;
            for (auto& [row, v] : acc)
                if (v) throw invariant_violation("cubical_complex: dd != 0");
        }
    return c;
}

// ---------------------------------------------------------------------------
// Integral homology.
// ---------------------------------------------------------------------------

struct HomologyResult {
    std::vector<long long> betti;                 // per degree
    std::vector<std::vector<mpz_class>> torsion;  // per degree, factors > 1
};

inline HomologyResult homology(const ChainComplex& c) {
    HomologyResult h;
    size_t top = c.basis.size();
    std::vector<SmithResult> smith(top + 1);
    for (size_t k = 1; k < top; ++k)
        smith[k] = smith_of_sparse(c.boundary[k], (int)c.basis[k - 1].size());
    for (size_t k = 0; k < top; ++k) {
        long long cycles = (long long)c.basis[k].size() - smith[k].rank;
        h.betti.push_back(cycles - smith[k + 1].rank);
        h.torsion.push_back(smith[k + 1].torsion());
    }
    return h;
}

// ---------------------------------------------------------------------------
// Nerve cross-check for rank <= 2.
// ---------------------------------------------------------------------------

// Homology of the simplicial nerve of the cluster morphism category.  For a
// rank <= 2 quiver every chain of non-identity morphisms has length <= 2, so
// the nerve is finite-dimensional with no truncation needed, and its homology
// must agree with the cubical computation.
inline HomologyResult nerve_homology(const Model& m) {
    if (m.n() > 2) throw unsupported_operation("nerve_homology: rank <= 2 only");
    std::vector<ClusterMorphism> arrows;  // non-identity morphisms
    std::vector<Wide> objects = all_wide_subcategories(m);
    std::sort(objects.begin(), objects.end());
    for (const ClusterMorphism& f : all_morphisms(m))
        if (f.rank() > 0) arrows.push_back(f);
    std::sort(arrows.begin(), arrows.end());

    std::map<Wide, int> obj_index;
    for (size_t i = 0; i < objects.size(); ++i) obj_index[objects[i]] = (int)i;
    std::map<ClusterMorphism, int> arrow_index;
    for (size_t i = 0; i < arrows.size(); ++i) arrow_index[arrows[i]] = (int)i;

    ChainComplex c;
    c.basis.resize(3);  // reuses the container; only sizes and boundaries matter
    for (const Wide& w : objects) c.basis[0].push_back(identity_morphism(w));
    c.basis[1] = arrows;

    c.boundary.resize(3);
    for (const ClusterMorphism& f : arrows)
        c.boundary[1].push_back(
            {{obj_index.at(f.cod), +1}, {obj_index.at(f.dom), -1}});

    for (const ClusterMorphism& f : arrows)
        for (const ClusterMorphism& g : arrows) {
            if (g.dom != f.cod) continue;
            ClusterMorphism gf = compose(m, g, f);
            c.basis[2].push_back(gf);  // placeholder entry; one per pair (f, g)
            c.boundary[2].push_back({{arrow_index.at(g), +1},
                                     {arrow_index.at(gf), -1},
                                     {arrow_index.at(f), +1}});
        }
    return homology(c);
}

}  // namespace clusterpic
