#pragma once
// Torsion classes of chambers and the brick-labeled Hasse diagram of the
// lattice of torsion classes.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "clusterpic/cluster.hpp"
#include "clusterpic/oracle.hpp"

namespace clusterpic {

// A torsion class recorded by the root ids of its indecomposable members,
// together with the fan chamber it came from (-1 when not chamber-derived).
struct TorsionClass {
    std::vector<int> roots;  // sorted
    int chamber = -1;

    bool contains(int root_id) const {
        return std::binary_search(roots.begin(), roots.end(), root_id);
    }
    friend bool operator==(const TorsionClass& a, const TorsionClass& b) {
        return a.roots == b.roots;
    }
    friend bool operator<(const TorsionClass& a, const TorsionClass& b) {
        return a.roots < b.roots;
    }
};

inline std::string torsion_class_name(const Model& m, const TorsionClass& t) {
    if (t.roots.empty()) return "0";
    if ((int)t.roots.size() == (int)m.roots.size()) return "mod";
    std::string out = "{";
    for (size_t i = 0; i < t.roots.size(); ++i) {
        if (i) out += ",";
        out += object_name(m, module_obj(t.roots[i]));
    }
    return out + "}";
}

// The torsion class determined by a point g interior to a chamber: the
// modules M with g.q > 0 for every nonzero quotient dimension vector q of M.
// A zero pairing with no negative one means g sits on the wall where the
// membership of that module flips, so the point is rejected.
inline TorsionClass torsion_class_of_point(const Model& m, const DimVec& g,
                                           int p = default_field_order()) {
    detail::require_simply_laced(m, "torsion_class_of_point");
    if ((int)g.size() != m.n())
        throw invalid_argument_error("torsion_class_of_point: point has " +
                                     std::to_string(g.size()) + " coordinates, expected " +
                                     std::to_string(m.n()));
    TorsionClass t;
    for (int a = 0; a < (int)m.roots.size(); ++a) {
        bool negative = false, zero = false;
        for (const DimVec& q : quotient_dims(m, m.roots[a], p)) {
            if (is_zero(q)) continue;
            long long s = stability_pairing(m, g, q);
            if (s < 0) {
                negative = true;
                break;
            }
            if (s == 0) zero = true;
        }
        if (negative) continue;
        if (zero)
            throw ambiguous_point("point " + show(g) + " lies on a wall: membership of " +
                                  object_name(m, module_obj(a)) + " is not decided");
        t.roots.push_back(a);
    }
    return t;
}

// Smallest set of roots containing `roots` that is closed under
// indecomposable quotients and under extensions detected by the ext pairing
// plus dimension additivity (0 -> A -> E -> B -> 0 forces dim E = dim A +
// dim B, and in finite type E is indecomposable only if that sum is a root).
inline std::vector<int> torsion_closure(const Model& m, const std::vector<int>& roots,
                                        int p = default_field_order()) {
    detail::require_simply_laced(m, "torsion_closure");
    std::set<int> s(roots.begin(), roots.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (const DimVec& q : indecomposable_quotient_dims(m, m.roots[a], p)) {
                if (s.insert(m.root_id(q)).second) grew = true;
            }
        for (int a : cur)
            for (int b : cur) {
                if (ext_dim(m, m.roots[b], m.roots[a]) == 0) continue;
                DimVec e = add(m.roots[a], m.roots[b]);
                if (!m.is_root(e)) continue;
                if (s.insert(m.root_id(e)).second) grew = true;
            }
    }
    return std::vector<int>(s.begin(), s.end());
}

// An integer point interior to a chamber: a positive combination of the
// chamber's g-vector rays.  Different salts give different points.
inline DimVec chamber_point(const Fan& f, int chamber, int salt = 0) {
    const std::vector<DimVec>& gs = f.gvecs.at(chamber);
    DimVec g(gs.front().size(), 0);
    for (size_t i = 0; i < gs.size(); ++i)
        g = add(g, scale(1 + salt * (int)(i + 1), gs[i]));
    return g;
}

struct HasseEdge {
    int from = -1, to = -1;  // chamber ids; class(from) is strictly inside class(to)
    int brick = -1;          // root id labeling the wall
};

struct TorsionHasse {
    Fan fan;
    std::vector<TorsionClass> classes;  // indexed by chamber id
    std::vector<HasseEdge> edges;       // one per fan facet
};

// One node per chamber, one edge per fan facet directed from the negative
// side to the positive side of the wall and labeled by the wall's brick.
inline TorsionHasse torsion_hasse(const Model& m, int p = default_field_order()) {
    detail::require_simply_laced(m, "torsion_hasse");
    TorsionHasse h;
    h.fan = build_fan(m, full_wide(m));
    for (int ci = 0; ci < (int)h.fan.clusters.size(); ++ci) {
        TorsionClass t = torsion_class_of_point(m, chamber_point(h.fan, ci), p);
        t.chamber = ci;
        h.classes.push_back(std::move(t));
    }
    std::set<std::vector<int>> distinct;
    for (const TorsionClass& t : h.classes) distinct.insert(t.roots);
    if (distinct.size() != h.classes.size())
        throw invariant_violation("torsion classes are not distinct across chambers");
    for (const Facet& ft : h.fan.facets) {
        HasseEdge e;
        e.to = ft.positive_side;
        e.from = (ft.chamber_a == e.to) ? ft.chamber_b : ft.chamber_a;
        e.brick = ft.brick;
        const std::vector<int>& lo = h.classes[e.from].roots;
        const std::vector<int>& hi = h.classes[e.to].roots;
        if (lo.size() >= hi.size() ||
            !std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()))
            throw invariant_violation("wall direction disagrees with torsion-class inclusion");
        if (!h.classes[e.to].contains(ft.brick) || h.classes[e.from].contains(ft.brick))
            throw invariant_violation("wall brick must enter exactly on the positive side");
        h.edges.push_back(e);
    }
    std::sort(h.edges.begin(), h.edges.end(), [](const HasseEdge& a, const HasseEdge& b) {
        return std::tie(a.from, a.to, a.brick) < std::tie(b.from, b.to, b.brick);
    });
    return h;
}

}  // namespace clusterpic
