#pragma once

// Clusters of a wide subcategory (maximal ext-orthogonal collections of
// cluster objects), the exchange walk that enumerates them, and the fan of
// g-vector cones with its brick-labelled walls.

#include "wide.hpp"

namespace clusterpic {

using Cluster = std::vector<ClusterObject>;  // sorted in the canonical order

// The initial cluster: every relative projective, shifted.
inline Cluster initial_cluster(const Model& m, const Wide& w) {
    Cluster c;
    for (int id : projectives_of(m, w)) c.push_back(shifted_obj(id));
    std::sort(c.begin(), c.end());
    return c;
}

namespace detail {

// The objects of w completing `rest` to a cluster; `rest` is assumed
// compatible.  In finite type there are exactly two for a corank-1 face.
inline std::vector<ClusterObject> completions(const Model& m,
                                              const std::vector<ClusterObject>& objs,
                                              const Cluster& rest) {
    std::vector<ClusterObject> out;
    for (const auto& cand : objs) {
        bool ok = true;
        for (const auto& r : rest) {
            if (cand == r || !compatible(m, cand, r)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(cand);
    }
    return out;
}

}  // namespace detail

// All clusters of w, found by walking the exchange graph from the initial
// cluster.  Returned sorted, so the order is independent of the walk.
inline std::vector<Cluster> all_clusters(const Model& m, const Wide& w) {
    int r = wide_rank(m, w);
    std::vector<ClusterObject> objs = objects_of(m, w);
    std::set<Cluster> seen;
    std::vector<Cluster> queue{initial_cluster(m, w)};
    if ((int)queue[0].size() != r)
        throw invariant_violation("initial cluster size does not match the rank");
    seen.insert(queue[0]);
    while (!queue.empty()) {
        Cluster c = queue.back();
        queue.pop_back();
        for (int drop = 0; drop < r; ++drop) {
            Cluster rest = c;
            rest.erase(rest.begin() + drop);
            auto comps = detail::completions(m, objs, rest);
            if (comps.size() != 2)
                throw invariant_violation("exchange: a corank-1 face has " +
                                          std::to_string(comps.size()) +
                                          " completions instead of 2");
            for (const auto& x : comps) {
                if (x == c[drop]) continue;
                Cluster next = rest;
                next.insert(std::upper_bound(next.begin(), next.end(), x), x);
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
    }
    return std::vector<Cluster>(seen.begin(), seen.end());
}

// Brute-force enumeration (every compatible set of full rank); used as an
// independent oracle for the exchange walk.
inline std::vector<Cluster> all_clusters_clique(const Model& m, const Wide& w) {
    int r = wide_rank(m, w);
    std::vector<ClusterObject> objs = objects_of(m, w);
    std::set<Cluster> found;
    Cluster cur;
    auto dfs = [&](auto&& self, size_t start) -> void {
        if ((int)cur.size() == r) {
            found.insert(cur);
            return;
        }
        for (size_t j = start; j < objs.size(); ++j) {
            bool ok = true;
            for (const auto& c : cur)
                if (!compatible(m, c, objs[j])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(objs[j]);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return std::vector<Cluster>(found.begin(), found.end());
}

// ---------------------------------------------------------------------------
// The g-vector fan.
// ---------------------------------------------------------------------------

struct Facet {
    std::vector<ClusterObject> face;  // the r-1 shared objects, sorted
    int chamber_a = -1, chamber_b = -1;
    DimVec sample;                    // integer point interior to the wall
    int brick = -1;                   // root id of the unique wall label
    int positive_side = -1;  // chamber whose extra object pairs positively with the brick
};

struct Fan {
    Wide w;
    int rank = 0;
    std::vector<Cluster> clusters;
    std::vector<std::vector<DimVec>> gvecs;  // per cluster, per object
    std::vector<IntMat> ginv;                // cone-matrix inverses (full rank only)
    std::vector<Facet> facets;
};

inline Fan build_fan(const Model& m, const Wide& w) {
    Fan f;
    f.w = w;
    f.rank = wide_rank(m, w);
    f.clusters = all_clusters(m, w);
    bool full_rank = (f.rank == m.n());
    for (const Cluster& c : f.clusters) {
        std::vector<DimVec> gs;
        for (const auto& x : c) gs.push_back(g_of(m, x));
        if (full_rank) {
            IntMat cols = mat_from_cols(gs, m.n());
            long long d = int_det(cols);
            if (d != 1 && d != -1)
                throw invariant_violation("cluster cone is not unimodular (det " +
                                          std::to_string(d) + ")");
            f.ginv.push_back(inverse_unimodular(cols));
        }
        f.gvecs.push_back(std::move(gs));
    }
    // pair chambers along shared corank-1 faces
    std::map<std::vector<ClusterObject>, std::vector<int>> by_face;
    for (size_t ci = 0; ci < f.clusters.size(); ++ci)
        for (int drop = 0; drop < f.rank; ++drop) {
            std::vector<ClusterObject> face = f.clusters[ci];
            face.erase(face.begin() + drop);
            by_face[face].push_back((int)ci);
        }
    for (auto& [face, chambers] : by_face) {
        if (chambers.size() != 2)
            throw invariant_violation("a corank-1 face borders " +
                                      std::to_string(chambers.size()) + " chambers");
        Facet ft;
        ft.face = face;
        ft.chamber_a = chambers[0];
        ft.chamber_b = chambers[1];
        ft.sample = DimVec(m.n(), 0);
        for (const auto& x : face) ft.sample = add(ft.sample, g_of(m, x));
        // the unique brick whose domain contains the wall
        std::vector<int> candidates;
        for (int id : w) {
            bool ok = true;
            for (const auto& x : face)
                if (!in_domain_via_hom(m, x, m.roots[id])) {
                    ok = false;
                    break;
                }
            if (ok) candidates.push_back(id);
        }
        if (candidates.size() != 1)
            throw invariant_violation("wall label is not unique: " +
                                      std::to_string(candidates.size()) + " candidates");
        ft.brick = candidates[0];
        // orientation: the two opposite objects must sit on opposite sides
        auto extra = [&](int chamber) {
            for (const auto& x : f.clusters[chamber]) {
                bool in_face = false;
                for (const auto& y : face)
                    if (x == y) in_face = true;
                if (!in_face) return x;
            }
            throw invariant_violation("facet chamber has no extra object");
        };
        long long sa = stability_pairing(m, g_of(m, extra(ft.chamber_a)), m.roots[ft.brick]);
        long long sb = stability_pairing(m, g_of(m, extra(ft.chamber_b)), m.roots[ft.brick]);
        if (sa == 0 || sb == 0 || (sa > 0) == (sb > 0))
            throw invariant_violation("facet chambers do not straddle the wall");
        ft.positive_side = sa > 0 ? ft.chamber_a : ft.chamber_b;
        f.facets.push_back(std::move(ft));
    }
    return f;
}

// The chamber whose closed cone strictly contains g.  Requires a full-rank
// fan.  Points on walls raise ambiguous_point.
inline int chamber_of_point(const Model& m, const Fan& f, const DimVec& g) {
    if (f.rank != m.n())
        throw unsupported_operation("chamber_of_point needs the fan of the full category");
    if ((int)g.size() != m.n()) throw invalid_argument_error("point has wrong dimension");
    if (is_zero(g)) throw ambiguous_point("the origin lies on every wall");
    int strict = -1;
    bool boundary = false;
    for (size_t ci = 0; ci < f.clusters.size(); ++ci) {
        DimVec c = mat_apply(f.ginv[ci], g);
        bool nonneg = true, pos = true;
        for (int x : c) {
            if (x < 0) nonneg = false;
            if (x <= 0) pos = false;
        }
        if (pos) {
            if (strict >= 0) throw invariant_violation("point interior to two chambers");
            strict = (int)ci;
        } else if (nonneg) {
            boundary = true;
        }
    }
    if (strict >= 0) return strict;
    if (boundary) throw ambiguous_point("point " + show(g) + " lies on a wall");
    throw invariant_violation("point " + show(g) + " escapes the fan");
}

// The wide subcategory attached to a point: all bricks whose domain contains
// it.  Uses the submodule description, hence simply-laced only.
inline Wide wide_at_point(const Model& m, const DimVec& g, int p) {
    Wide out;
    for (size_t id = 0; id < m.roots.size(); ++id)
        if (contains(domain(m, m.roots[id], p), g)) out.push_back((int)id);
    return out;
}

}  // namespace clusterpic
