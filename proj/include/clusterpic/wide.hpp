#pragma once

// Wide subcategories, represented by the sorted list of root ids of their
// indecomposable objects.  A wide subcategory of a finite-type hereditary
// module category is the module category of a smaller hereditary algebra;
// its roots form the positive system of a sub-root system, which makes the
// relative simples computable by pure root arithmetic.

#include "oracle.hpp"

namespace clusterpic {

using Wide = std::vector<int>;  // strictly increasing root ids

inline Wide full_wide(const Model& m) {
    Wide w(m.roots.size());
    for (size_t i = 0; i < w.size(); ++i) w[i] = (int)i;
    return w;
}

inline bool wide_member(const Wide& w, int id) {
    return std::binary_search(w.begin(), w.end(), id);
}

inline int wide_rank(const Model& m, const Wide& w) {
    IntMat rows;
    for (int id : w) {
        std::vector<long long> row(m.roots[id].begin(), m.roots[id].end());
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return 0;
    return int_rank(rows);
}

// Compatibility of two distinct cluster objects (ext-orthogonality in the
// cluster category).
inline bool compatible(const Model& m, const ClusterObject& x, const ClusterObject& y) {
    if (x.shifted && y.shifted) return true;
    const DimVec& a = m.roots.at(x.root);
    const DimVec& b = m.roots.at(y.root);
    if (!x.shifted && !y.shifted)
        return ext_dim(m, a, b) == 0 && ext_dim(m, b, a) == 0;
    const DimVec& p = x.shifted ? a : b;      // the shifted projective
    const DimVec& mod = x.shifted ? b : a;    // the module
    return hom_dim(m, p, mod) == 0;
}

// Relative projectives: no Ext^1 into anything in the wide.
inline Wide projectives_of(const Model& m, const Wide& w) {
    Wide out;
    for (int id : w) {
        bool proj = true;
        for (int jd : w)
            if (ext_dim(m, m.roots[id], m.roots[jd]) != 0) {
                proj = false;
                break;
            }
        if (proj) out.push_back(id);
    }
    return out;
}

// Relative simples: the simple roots of the positive system w, i.e. the
// elements that are not a sum of two elements of w.
inline Wide simples_of(const Model& m, const Wide& w) {
    std::set<DimVec> dims;
    for (int id : w) dims.insert(m.roots[id]);
    Wide out;
    for (int id : w) {
        bool is_sum = false;
        for (int jd : w) {
            DimVec rest = sub(m.roots[id], m.roots[jd]);
            if (!is_zero(rest) && is_nonneg(rest) && dims.count(rest)) {
                is_sum = true;
                break;
            }
        }
        if (!is_sum) out.push_back(id);
    }
    if ((int)out.size() != wide_rank(m, w))
        throw invariant_violation("simples_of: simple count does not match the rank");
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) {
            if (i == j) continue;
            if (hom_dim(m, m.roots[out[i]], m.roots[out[j]]) != 0)
                throw invariant_violation("simples_of: relative simples are not hom-orthogonal");
        }
    return out;
}

// The legal cluster objects of a wide: every module, plus the shifts of the
// relative projectives.  Sorted in the canonical object order.
inline std::vector<ClusterObject> objects_of(const Model& m, const Wide& w) {
    std::vector<ClusterObject> out;
    for (int id : w) out.push_back(module_obj(id));
    for (int id : projectives_of(m, w)) out.push_back(shifted_obj(id));
    std::sort(out.begin(), out.end());
    return out;
}

inline void validate_partial_cluster(const Model& m, const Wide& w,
                                     const std::vector<ClusterObject>& xs) {
    Wide projs = projectives_of(m, w);
    for (const auto& x : xs) {
        if (!wide_member(w, x.root))
            throw invalid_argument_error("object " + object_name(m, x) +
                                         " is not in the wide subcategory");
        if (x.shifted && !wide_member(projs, x.root))
            throw invalid_argument_error("object " + object_name(m, x) +
                                         " is shifted but not relatively projective");
    }
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[i] == xs[j])
                throw invalid_argument_error("repeated object " + object_name(m, xs[i]));
            if (!compatible(m, xs[i], xs[j]))
                throw invalid_argument_error("incompatible objects " + object_name(m, xs[i]) +
                                             " and " + object_name(m, xs[j]));
        }
}

// Right perpendicular of a partial cluster inside w.
inline Wide perp(const Model& m, const Wide& w, const std::vector<ClusterObject>& xs) {
    validate_partial_cluster(m, w, xs);
    Wide out;
    for (int id : w) {
        bool keep = true;
        for (const auto& x : xs)
            if (!in_domain_via_hom(m, x, m.roots[id])) {
                keep = false;
                break;
            }
        if (keep) out.push_back(id);
    }
    return out;
}

// Every wide subcategory, enumerated as the perps of the partial clusters of
// the full category, deduplicated.  Sorted by size then lexicographically.
inline std::vector<Wide> all_wide_subcategories(const Model& m) {
    Wide full = full_wide(m);
    std::vector<ClusterObject> objs = objects_of(m, full);
    std::set<Wide> found;
    std::vector<ClusterObject> chosen;
    auto dfs = [&](auto&& self, size_t start, const Wide& cur) -> void {
        found.insert(cur);
        for (size_t j = start; j < objs.size(); ++j) {
            bool ok = true;
            for (const auto& c : chosen)
                if (!compatible(m, c, objs[j])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            Wide next;
            for (int id : cur)
                if (in_domain_via_hom(m, objs[j], m.roots[id])) next.push_back(id);
            chosen.push_back(objs[j]);
            self(self, j + 1, next);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, full);
    std::vector<Wide> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const Wide& a, const Wide& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace clusterpic
