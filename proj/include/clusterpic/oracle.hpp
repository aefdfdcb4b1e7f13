#pragma once

// Homological oracle.  Two independent routes to Hom/Ext data:
//   (a) Euler-form arithmetic on dimension vectors (finite type directedness),
//   (b) explicit representations over a small prime field, built by
//       reflection functors, with Hom/Ext read off a linear system.
// Route (b) also provides submodule enumeration, which feeds the
// semi-invariant domains D(M).  Explicit representations are simply-laced
// only; everything Euler-based works for valued types too.

#include <cstdlib>
#include <set>

#include "quiver.hpp"

namespace clusterpic {

// ---------------------------------------------------------------------------
// Euler-form route.
// ---------------------------------------------------------------------------

inline void require_root(const Model& m, const DimVec& a, const char* who) {
    if (!m.is_root(a))
        throw invalid_argument_error(std::string(who) + ": not a positive root: " + show(a));
}

// dim_K Hom(M_a, M_b).  For a == b this is the K-dimension of the
// endomorphism division algebra; for a != b directedness makes it
// max(<a,b>, 0).
inline long long hom_dim(const Model& m, const DimVec& a, const DimVec& b) {
    require_root(m, a, "hom_dim");
    require_root(m, b, "hom_dim");
    long long e = pairing(m, a, b);
    return e > 0 ? e : 0;
}

// dim_K Ext^1(M_a, M_b); zero on the diagonal (exceptional modules are rigid).
inline long long ext_dim(const Model& m, const DimVec& a, const DimVec& b) {
    require_root(m, a, "ext_dim");
    require_root(m, b, "ext_dim");
    if (a == b) return 0;
    long long e = pairing(m, a, b);
    return e < 0 ? -e : 0;
}

// g-vector: coordinates of dim M in the basis of projective dimension
// vectors (g = C^{-1} dim M, an integer vector; equals E^T dim M in the
// simply-laced case).
inline DimVec g_vector(const Model& m, const DimVec& dimv) {
    return mat_apply(m.Cinv, dimv);
}

// The pairing between a point g of the g-vector space and a dimension
// vector: sum_i f_i g_i b_i.  Since E^T C = diag(f), this satisfies
// stability_pairing(g_vector(a), b) == <a, b>, with the symmetrizers making
// the identity hold for valued types too (plain dot would not).
inline long long stability_pairing(const Model& m, const DimVec& g, const DimVec& b) {
    long long s = 0;
    for (int i = 0; i < m.n(); ++i) s += (long long)m.q.f[i] * g[i] * b[i];
    return s;
}

// ---------------------------------------------------------------------------
// Cluster-category objects: an indecomposable module (by its root) or a
// shifted relatively-projective module P[1].  The canonical order puts
// modules before shifted objects, then graded-lex via the root id.
// ---------------------------------------------------------------------------

struct ClusterObject {
    bool shifted = false;
    int root = -1;  // RootId into Model::roots
    friend auto operator<=>(const ClusterObject&, const ClusterObject&) = default;
};

inline ClusterObject module_obj(int root_id) { return {false, root_id}; }
inline ClusterObject shifted_obj(int root_id) { return {true, root_id}; }

inline DimVec signed_dim(const Model& m, const ClusterObject& x) {
    const DimVec& d = m.roots.at(x.root);
    return x.shifted ? neg(d) : d;
}

inline DimVec g_of(const Model& m, const ClusterObject& x) {
    return g_vector(m, signed_dim(m, x));
}

inline std::string object_name(const Model& m, const ClusterObject& x) {
    std::string s = m.names.at(x.root);
    if (x.shifted) s += "[1]";
    return s;
}

// The hom/ext criterion for the g-vector of x to lie in D(M_gamma):
// modules need Hom and Ext^1 to gamma to vanish, shifted projectives need
// Hom from the underlying projective to vanish.
inline bool in_domain_via_hom(const Model& m, const ClusterObject& x, const DimVec& gamma) {
    const DimVec& d = m.roots.at(x.root);
    if (x.shifted) return hom_dim(m, d, gamma) == 0;
    return hom_dim(m, d, gamma) == 0 && ext_dim(m, d, gamma) == 0;
}

// ---------------------------------------------------------------------------
// F_p linear algebra.
// ---------------------------------------------------------------------------

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// The oracle field order: 2 unless overridden by CLUSTERPIC_FIELD_ORDER.
inline int default_field_order() {
    if (const char* env = std::getenv("CLUSTERPIC_FIELD_ORDER")) {
        int p = 0;
        try {
            p = std::stoi(env);
        } catch (...) {
            throw invalid_argument_error("CLUSTERPIC_FIELD_ORDER is not an integer");
        }
        if (!is_prime(p) || p > 997)
            throw invalid_argument_error("CLUSTERPIC_FIELD_ORDER must be a prime <= 997");
        return p;
    }
    return 2;
}

using FpMat = std::vector<std::vector<int>>;  // row-major, entries in [0,p)

namespace fp {

inline int inv_mod(int a, int p) {
    // Fermat: p prime, a != 0 mod p
    int r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = (int)((long long)r * b % p);
        b = (int)((long long)b * b % p);
        e >>= 1;
    }
    return r;
}

inline FpMat zeros(int rows, int cols) { return FpMat(rows, std::vector<int>(cols, 0)); }

inline FpMat mul(const FpMat& a, const FpMat& b, int p) {
    int n = (int)a.size(), k = n ? (int)a[0].size() : 0, mcols = b.empty() ? 0 : (int)b[0].size();
    FpMat c = zeros(n, mcols);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (!a[i][t]) continue;
            for (int j = 0; j < mcols; ++j)
                c[i][j] = (int)((c[i][j] + (long long)a[i][t] * b[t][j]) % p);
        }
    return c;
}

// In-place reduced row echelon form; returns pivot column list.
inline std::vector<int> rref(FpMat& m, int p) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        int inv = inv_mod(m[r][c], p);
        for (int j = c; j < cols; ++j) m[r][j] = (int)((long long)m[r][j] * inv % p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !m[i][c]) continue;
            int f = m[i][c];
            for (int j = c; j < cols; ++j)
                m[i][j] = (int)((m[i][j] - (long long)f * m[r][j] % p + p) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r >= 0 ? r : 0);  // keep only the nonzero rows
    return pivots;
}

inline int rank(FpMat m, int p) {
    return (int)rref(m, p).size();
}

// Reduce vector v against an rref basis (rows, pivots); returns remainder.
inline std::vector<int> reduce(const FpMat& basis, const std::vector<int>& pivots,
                               std::vector<int> v, int p) {
    for (size_t k = 0; k < basis.size(); ++k) {
        int c = pivots[k];
        if (!v[c]) continue;
        int f = v[c];
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = (int)((v[j] - (long long)f * basis[k][j] % p + p) % p);
    }
    return v;
}

}  // namespace fp

// ---------------------------------------------------------------------------
// Explicit representations.
// ---------------------------------------------------------------------------

struct FpRep {
    int p = 2;
    std::vector<int> dims;       // per vertex
    std::vector<FpMat> mats;     // parallel to the ambient quiver's arrow list
};

namespace detail {

inline void require_simply_laced(const Model& m, const char* who) {
    if (!m.simply_laced)
        throw unsupported_operation(std::string(who) +
                                    ": explicit representations require a simply-laced quiver");
}

// Root-lattice reflection at vertex i (orientation independent).
inline DimVec reflect(const Model& m, const DimVec& v, int i) {
    long long pair = 0;
    for (int j = 0; j < m.n(); ++j) pair += (m.E[j][i] + m.E[i][j]) * v[j];
    DimVec w = v;
    w[i] = (int)(v[i] - pair / m.q.f[i]);
    return w;
}

}  // namespace detail

// Build an explicit indecomposable representation with dimension vector
// `root` over F_p by applying reflection functors to a simple.
inline FpRep build_representation(const Model& m, const DimVec& root, int p) {
    detail::require_simply_laced(m, "build_representation");
    require_root(m, root, "build_representation");
    if (!is_prime(p)) throw invalid_argument_error("field order must be prime");

    // 1. reflection word: cycle through the sink-first order until the root
    //    is reduced to a simple.
    std::vector<int> word;
    DimVec v = root;
    int stop_vertex = -1;
    size_t cap = 16 * (m.roots.size() + 1) * (m.n() + 1);
    for (size_t step = 0; step < cap && stop_vertex < 0; ++step) {
        int i = m.topo[step % m.n()];
        if (coord_sum(v) == 1 && v[i] == 1) {
            stop_vertex = i;
            break;
        }
        word.push_back(i);
        v = detail::reflect(m, v, i);
    }
    if (stop_vertex < 0)
        throw invariant_violation("build_representation: reflection word did not terminate");

    // 2. simulate the quiver orientations along the word.
    std::vector<std::vector<Arrow>> arrows_at(word.size() + 1);
    arrows_at[0] = m.q.arrows;
    for (size_t t = 0; t < word.size(); ++t) {
        arrows_at[t + 1] = arrows_at[t];
        for (auto& ar : arrows_at[t + 1])
            if (ar.source == word[t] || ar.target == word[t]) {
                std::swap(ar.source, ar.target);
                std::swap(ar.val_st, ar.val_ts);
            }
    }

    // 3. simple at the stop vertex over the fully reflected quiver...
    FpRep rep;
    rep.p = p;
    rep.dims.assign(m.n(), 0);
    rep.dims[stop_vertex] = 1;
    rep.mats.resize(m.q.arrows.size());
    auto shape = [&](const std::vector<Arrow>& arrs, FpRep& r) {
        for (size_t a = 0; a < arrs.size(); ++a)
            r.mats[a] = fp::zeros(r.dims[arrs[a].target], r.dims[arrs[a].source]);
    };
    shape(arrows_at[word.size()], rep);

    // 4. ...then walk the word backwards applying sigma^- at each step.
    for (size_t t = word.size(); t-- > 0;) {
        int i = word[t];
        const auto& cur = arrows_at[t + 1];  // i is a source here
        // stack the out-arrow matrices of i into B : N_i -> (+) N_t
        std::vector<size_t> out;
        for (size_t a = 0; a < cur.size(); ++a)
            if (cur[a].source == i) out.push_back(a);
        int D = 0;
        std::vector<int> offset(out.size(), 0);
        for (size_t k = 0; k < out.size(); ++k) {
            offset[k] = D;
            D += rep.dims[cur[out[k]].target];
        }
        int di = rep.dims[i];
        FpMat B = fp::zeros(D, di);
        for (size_t k = 0; k < out.size(); ++k) {
            const FpMat& Ma = rep.mats[out[k]];
            for (size_t r = 0; r < Ma.size(); ++r)
                for (int c = 0; c < di; ++c) B[offset[k] + r][c] = Ma[r][c];
        }
        // image of B as an rref row basis inside F^D
        FpMat imageT(di, std::vector<int>(D, 0));  // rows = columns of B
        for (int c = 0; c < di; ++c)
            for (int r = 0; r < D; ++r) imageT[c][r] = B[r][c];
        auto pivots = fp::rref(imageT, p);
        if ((int)pivots.size() != di)
            throw invariant_violation("reflection functor: map out of a source is not injective");
        std::vector<int> nonpivot;
        {
            std::set<int> pset(pivots.begin(), pivots.end());
            for (int c = 0; c < D; ++c)
                if (!pset.count(c)) nonpivot.push_back(c);
        }
        int newdim = (int)nonpivot.size();
        // cokernel projection of a vector in F^D
        auto project = [&](std::vector<int> x) {
            x = fp::reduce(imageT, pivots, std::move(x), p);
            std::vector<int> y(newdim);
            for (int k = 0; k < newdim; ++k) y[k] = x[nonpivot[k]];
            return y;
        };
        // assemble the rep over arrows_at[t] (arrows at i flipped back)
        FpRep next;
        next.p = p;
        next.dims = rep.dims;
        next.dims[i] = newdim;
        next.mats.resize(rep.mats.size());
        const auto& prev_arrs = arrows_at[t];
        for (size_t a = 0; a < prev_arrs.size(); ++a) {
            bool touched = false;
            for (size_t k = 0; k < out.size(); ++k) {
                if (out[k] != a) continue;
                touched = true;
                // flipped arrow t_k -> i : inject into block k, project
                int ds = rep.dims[cur[a].target];
                FpMat mat = fp::zeros(newdim, ds);
                for (int c = 0; c < ds; ++c) {
                    std::vector<int> x(D, 0);
                    x[offset[k] + c] = 1;
                    auto y = project(x);
                    for (int r = 0; r < newdim; ++r) mat[r][c] = y[r];
                }
                next.mats[a] = std::move(mat);
            }
            if (!touched) next.mats[a] = rep.mats[a];
        }
        rep = std::move(next);
        // sanity: dimension vector must match the partially unreflected root
        DimVec expect = root;
        for (size_t s = 0; s < t; ++s) expect = detail::reflect(m, expect, word[s]);
        for (int vtx = 0; vtx < m.n(); ++vtx)
            if (rep.dims[vtx] != expect[vtx])
                throw invariant_violation("reflection functor produced a wrong dimension vector");
    }
    return rep;
}

// dim Hom and dim Ext^1 between explicit representations, from the standard
// two-term complex  (+)_i Hom(M_i,N_i) --delta--> (+)_{a:s->t} Hom(M_s,N_t).
struct HomExt {
    int hom = 0, ext = 0;
};

inline HomExt hom_ext_rep(const Model& m, const FpRep& M, const FpRep& N) {
    if (M.p != N.p) throw invalid_argument_error("representations live over different fields");
    int p = M.p;
    int vars = 0;
    std::vector<int> offset(m.n(), 0);
    for (int i = 0; i < m.n(); ++i) {
        offset[i] = vars;
        vars += M.dims[i] * N.dims[i];
    }
    int eqs = 0;
    for (size_t a = 0; a < m.q.arrows.size(); ++a)
        eqs += M.dims[m.q.arrows[a].source] * N.dims[m.q.arrows[a].target];
    FpMat sys = fp::zeros(eqs, vars);
    int row = 0;
    for (size_t a = 0; a < m.q.arrows.size(); ++a) {
        int s = m.q.arrows[a].source, t = m.q.arrows[a].target;
        const FpMat& Ma = M.mats[a];
        const FpMat& Na = N.mats[a];
        // equation block: phi_t * M_a - N_a * phi_s = 0, one equation per
        // (rr in N_t rows? no: rows of result are N_t-dim, cols M_s-dim)
        for (int rr = 0; rr < N.dims[t]; ++rr)
            for (int cc = 0; cc < M.dims[s]; ++cc) {
                // phi_t[rr][k] * M_a[k][cc]
                for (int k = 0; k < M.dims[t]; ++k)
                    if (Ma[k][cc])
                        sys[row][offset[t] + rr * M.dims[t] + k] =
                            (sys[row][offset[t] + rr * M.dims[t] + k] + Ma[k][cc]) % p;
                // - N_a[rr][k] * phi_s[k][cc]
                for (int k = 0; k < N.dims[s]; ++k)
                    if (Na[rr][k])
                        sys[row][offset[s] + k * M.dims[s] + cc] =
                            (int)((sys[row][offset[s] + k * M.dims[s] + cc] - (long long)Na[rr][k] % p + p) % p);
                ++row;
            }
    }
    int rk = fp::rank(std::move(sys), p);
    HomExt he;
    he.hom = vars - rk;
    he.ext = eqs - rk;
    return he;
}

inline bool is_indecomposable(const Model& m, const FpRep& M) {
    // brick test: in finite type every indecomposable is a brick, so the
    // endomorphism space must be exactly the scalars.
    int total = 0;
    for (int d : M.dims) total += d;
    if (total == 0) return false;
    return hom_ext_rep(m, M, M).hom == 1;
}

// ---------------------------------------------------------------------------
// Submodule enumeration.
// ---------------------------------------------------------------------------

inline constexpr int kVertexDimCap = 6;

namespace detail {

// All subspaces of F_p^d as rref row-bases (including 0 and the full space).
inline std::vector<FpMat> all_subspaces(int d, int p) {
    if (d > kVertexDimCap)
        throw resource_limit("submodule enumeration: vertex dimension " + std::to_string(d) +
                             " exceeds cap " + std::to_string(kVertexDimCap));
    std::vector<FpMat> out;
    out.push_back(FpMat{});  // zero subspace
    // choose rank r, pivot columns, then free entries right of pivots
    for (int r = 1; r <= d; ++r) {
        std::vector<int> piv(r);
        // iterate over r-subsets of columns
        for (int mask = 0; mask < (1 << d); ++mask) {
            if (__builtin_popcount((unsigned)mask) != r) continue;
            int idx = 0;
            for (int c = 0; c < d; ++c)
                if (mask & (1 << c)) piv[idx++] = c;
            // free positions: entries m[i][j] with j > piv[i], j not a pivot
            std::vector<std::pair<int, int>> free_pos;
            for (int i = 0; i < r; ++i)
                for (int j = piv[i] + 1; j < d; ++j)
                    if (!(mask & (1 << j))) free_pos.push_back({i, j});
            long long combos = 1;
            for (size_t k = 0; k < free_pos.size(); ++k) combos *= p;
            for (long long code = 0; code < combos; ++code) {
                FpMat b = fp::zeros(r, d);
                for (int i = 0; i < r; ++i) b[i][piv[i]] = 1;
                long long cur = code;
                for (auto [i, j] : free_pos) {
                    b[i][j] = (int)(cur % p);
                    cur /= p;
                }
                out.push_back(std::move(b));
            }
        }
    }
    return out;
}

// Is the image of every basis row of `vecs` under `mat` contained in the
// subspace spanned by rref basis `sub`?
inline bool maps_into(const FpMat& mat, const FpMat& sub_basis, const std::vector<int>& sub_pivots,
                      const FpMat& domain_basis, int p) {
    for (const auto& row : domain_basis) {
        // image = mat * row^T
        std::vector<int> img(mat.size(), 0);
        for (size_t r = 0; r < mat.size(); ++r) {
            long long s = 0;
            for (size_t c = 0; c < row.size(); ++c) s += (long long)mat[r][c] * row[c];
            img[r] = (int)(s % p);
        }
        auto rem = fp::reduce(sub_basis, sub_pivots, img, p);
        for (int x : rem)
            if (x) return false;
    }
    return true;
}

}  // namespace detail

// A subrepresentation, as a per-vertex rref basis.
using SubRep = std::vector<FpMat>;

// Enumerate every subrepresentation of M (as per-vertex bases).
inline std::vector<SubRep> all_subrepresentations(const Model& m, const FpRep& M) {
    detail::require_simply_laced(m, "all_subrepresentations");
    int p = M.p;
    std::vector<std::vector<FpMat>> choices(m.n());
    std::vector<std::vector<std::vector<int>>> choice_pivots(m.n());
    for (int v = 0; v < m.n(); ++v) {
        choices[v] = detail::all_subspaces(M.dims[v], p);
        for (auto& b : choices[v]) {
            FpMat copy = b;
            choice_pivots[v].push_back(fp::rref(copy, p));  // b already rref; recompute pivots
        }
    }
    std::vector<SubRep> found;
    SubRep cur(m.n());
    std::vector<std::vector<int>> cur_pivots(m.n());
    auto compatible_so_far = [&](int just_set) {
        for (size_t a = 0; a < m.q.arrows.size(); ++a) {
            int s = m.q.arrows[a].source, t = m.q.arrows[a].target;
            if (s > just_set || t > just_set) continue;
            if (s != just_set && t != just_set) continue;
            if (!detail::maps_into(M.mats[a], cur[t], cur_pivots[t], cur[s], p)) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == m.n()) {
            found.push_back(cur);
            return;
        }
        for (size_t k = 0; k < choices[v].size(); ++k) {
            cur[v] = choices[v][k];
            cur_pivots[v] = choice_pivots[v][k];
            if (compatible_so_far(v)) self(self, v + 1);
        }
    };
    dfs(dfs, 0);
    return found;
}

inline DimVec subrep_dims(const SubRep& s) {
    DimVec d(s.size());
    for (size_t v = 0; v < s.size(); ++v) d[v] = (int)s[v].size();
    return d;
}

// All submodule dimension vectors of M_root (includes 0 and root itself).
inline std::set<DimVec> submodule_dims(const Model& m, const DimVec& root, int p) {
    FpRep M = build_representation(m, root, p);
    std::set<DimVec> out;
    for (const auto& s : all_subrepresentations(m, M)) out.insert(subrep_dims(s));
    return out;
}

// All quotient dimension vectors (root - submodule dims).
inline std::set<DimVec> quotient_dims(const Model& m, const DimVec& root, int p) {
    std::set<DimVec> out;
    for (const auto& s : submodule_dims(m, root, p)) out.insert(sub(root, s));
    return out;
}

// ---------------------------------------------------------------------------
// Quotient/sub analysis used by cross-checks.
// ---------------------------------------------------------------------------

// The quotient representation M / W for a subrepresentation W.
inline FpRep quotient_rep(const Model& m, const FpRep& M, const SubRep& W) {
    int p = M.p;
    FpRep Q;
    Q.p = p;
    Q.dims.assign(m.n(), 0);
    std::vector<std::vector<int>> nonpivot(m.n());
    std::vector<std::vector<int>> pivots(m.n());
    std::vector<FpMat> rbases(m.n());
    for (int v = 0; v < m.n(); ++v) {
        rbases[v] = W[v];
        pivots[v] = fp::rref(rbases[v], p);
        std::set<int> pset(pivots[v].begin(), pivots[v].end());
        for (int c = 0; c < M.dims[v]; ++c)
            if (!pset.count(c)) nonpivot[v].push_back(c);
        Q.dims[v] = (int)nonpivot[v].size();
    }
    auto project = [&](int v, std::vector<int> x) {
        x = fp::reduce(rbases[v], pivots[v], std::move(x), p);
        std::vector<int> y(nonpivot[v].size());
        for (size_t k = 0; k < nonpivot[v].size(); ++k) y[k] = x[nonpivot[v][k]];
        return y;
    };
    Q.mats.resize(M.mats.size());
    for (size_t a = 0; a < m.q.arrows.size(); ++a) {
        int s = m.q.arrows[a].source, t = m.q.arrows[a].target;
        FpMat mat = fp::zeros(Q.dims[t], Q.dims[s]);
        for (int c = 0; c < Q.dims[s]; ++c) {
            std::vector<int> x(M.dims[s], 0);
            x[nonpivot[s][c]] = 1;  // a coset representative
            std::vector<int> img(M.dims[t], 0);
            for (int r = 0; r < M.dims[t]; ++r) {
                long long acc = 0;
                for (int cc = 0; cc < M.dims[s]; ++cc) acc += (long long)M.mats[a][r][cc] * x[cc];
                img[r] = (int)(acc % p);
            }
            auto y = project(t, img);
            for (int r = 0; r < Q.dims[t]; ++r) mat[r][c] = y[r];
        }
        Q.mats[a] = std::move(mat);
    }
    return Q;
}

// The subrepresentation W of M as a representation in its own right.
inline FpRep restrict_rep(const Model& m, const FpRep& M, const SubRep& W) {
    int p = M.p;
    FpRep R;
    R.p = p;
    R.dims.assign(m.n(), 0);
    std::vector<std::vector<int>> pivots(m.n());
    std::vector<FpMat> bases(m.n());
    for (int v = 0; v < m.n(); ++v) {
        bases[v] = W[v];
        pivots[v] = fp::rref(bases[v], p);
        R.dims[v] = (int)bases[v].size();
    }
    R.mats.resize(M.mats.size());
    for (size_t a = 0; a < m.q.arrows.size(); ++a) {
        int s = m.q.arrows[a].source, t = m.q.arrows[a].target;
        FpMat mat = fp::zeros(R.dims[t], R.dims[s]);
        for (int c = 0; c < R.dims[s]; ++c) {
            // image of the c-th basis row of W_s
            std::vector<int> img(M.dims[t], 0);
            for (int r = 0; r < M.dims[t]; ++r) {
                long long acc = 0;
                for (int cc = 0; cc < M.dims[s]; ++cc)
                    acc += (long long)M.mats[a][r][cc] * bases[s][c][cc];
                img[r] = (int)(acc % p);
            }
            // coordinates of img in the rref basis of W_t: peel pivots
            for (int r = 0; r < R.dims[t]; ++r) {
                int coef = img[pivots[t][r]];
                mat[r][c] = coef;
                if (coef)
                    for (int cc = 0; cc < M.dims[t]; ++cc)
                        img[cc] = (int)((img[cc] - (long long)coef * bases[t][r][cc] % p + p) % p);
            }
            for (int cc : img)
                if (cc) throw invariant_violation("restrict_rep: image escapes the subspace");
        }
        R.mats[a] = std::move(mat);
    }
    return R;
}

// Dimension vectors q such that M_root has an *indecomposable* quotient of
// dimension vector q (q then necessarily a root in finite type).
inline std::set<DimVec> indecomposable_quotient_dims(const Model& m, const DimVec& root, int p) {
    FpRep M = build_representation(m, root, p);
    std::set<DimVec> out;
    for (const auto& s : all_subrepresentations(m, M)) {
        DimVec q = sub(root, subrep_dims(s));
        if (is_zero(q) || out.count(q)) continue;
        FpRep Q = quotient_rep(m, M, s);
        if (is_indecomposable(m, Q)) out.insert(q);
    }
    return out;
}

// Does M_big contain a subrepresentation isomorphic to M_small?  (In finite
// type: a subrep with dim vector `small` that is indecomposable.)
inline bool has_indec_submodule(const Model& m, const DimVec& big, const DimVec& small, int p) {
    FpRep M = build_representation(m, big, p);
    for (const auto& s : all_subrepresentations(m, M)) {
        if (subrep_dims(s) != small) continue;
        if (is_indecomposable(m, restrict_rep(m, M, s))) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Semi-invariant domains D(M).
// ---------------------------------------------------------------------------

struct SemiInvariantDomain {
    DimVec m;                              // the brick's dimension vector
    std::vector<DimVec> halfspace_normals; // proper nonzero submodule dims, graded-lex
};

inline SemiInvariantDomain domain(const Model& model, const DimVec& root, int p) {
    detail::require_simply_laced(model, "domain");
    require_root(model, root, "domain");
    SemiInvariantDomain d;
    d.m = root;
    for (const auto& s : submodule_dims(model, root, p)) {
        if (is_zero(s) || s == root) continue;
        d.halfspace_normals.push_back(s);
    }
    std::sort(d.halfspace_normals.begin(), d.halfspace_normals.end(), graded_lex_less);
    return d;
}

// Exact membership test: g on the hyperplane of m, weakly on the negative
// side of every submodule normal.
inline bool contains(const SemiInvariantDomain& d, const DimVec& g) {
    if (dot(g, d.m) != 0) return false;
    for (const auto& s : d.halfspace_normals)
        if (dot(g, s) > 0) return false;
    return true;
}

}  // namespace clusterpic
