#pragma once

// The cluster morphism category: morphisms are partial clusters, composition
// works by lifting components through the congruence rule, and factorizations
// into rank-1 morphisms are the signed exceptional sequences.
//
// Display convention for sequences: a factorization
//     W -> perp(X1) -> perp(X1,X2) -> ... -> W'
// is stored as the vector (Xk, ..., X2, X1), i.e. the FIRST factor is the
// LAST entry.  Validity is therefore checked walking the vector from the
// back to the front.

#include "cluster.hpp"

namespace clusterpic {

struct ClusterMorphism {
    Wide dom;
    Wide cod;                       // always equal to perp(dom, T)
    std::vector<ClusterObject> T;   // canonically sorted partial cluster
    int rank() const { return (int)T.size(); }
    auto operator<=>(const ClusterMorphism&) const = default;
};

inline ClusterMorphism identity_morphism(const Wide& w) { return {w, w, {}}; }

inline ClusterMorphism make_morphism(const Model& m, const Wide& dom,
                                     std::vector<ClusterObject> T) {
    std::sort(T.begin(), T.end());
    ClusterMorphism f;
    f.dom = dom;
    f.cod = perp(m, dom, T);  // validates T as a partial cluster of dom
    f.T = std::move(T);
    return f;
}

inline std::string morphism_name(const Model& m, const ClusterMorphism& f) {
    std::string s = "[";
    for (size_t i = 0; i < f.T.size(); ++i) {
        if (i) s += " + ";
        s += object_name(m, f.T[i]);
    }
    return s + "]";
}

namespace detail {

// All legal cluster objects of w that are compatible with (and distinct
// from) everything in `acc` and whose signed dimension vector is congruent
// to `target` modulo the integer span of `span_dims`.
inline std::vector<ClusterObject> lift_candidates(const Model& m, const Wide& w,
                                                  const std::vector<ClusterObject>& acc,
                                                  const DimVec& target,
                                                  const std::vector<DimVec>& span_dims) {
    std::vector<ClusterObject> out;
    for (const ClusterObject& cand : objects_of(m, w)) {
        bool ok = true;
        for (const auto& a : acc)
            if (a == cand || !compatible(m, a, cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (!in_zspan(span_dims, sub(signed_dim(m, cand), target))) continue;
        out.push_back(cand);
    }
    return out;
}

inline void compose_rec(const Model& m, const ClusterMorphism& g, const ClusterMorphism& f,
                        size_t next, std::vector<ClusterObject>& acc,
                        const std::vector<DimVec>& span, std::vector<ClusterMorphism>& hits) {
    if (next == g.T.size()) {
        ClusterMorphism h = make_morphism(m, f.dom, acc);
        if (h.cod == g.cod) hits.push_back(std::move(h));
        return;
    }
    for (const ClusterObject& cand :
         lift_candidates(m, f.dom, acc, signed_dim(m, g.T[next]), span)) {
        acc.push_back(cand);
        compose_rec(m, g, f, next + 1, acc, span, hits);
        acc.pop_back();
    }
}

}  // namespace detail

// g o f for f: A -> B and g: B -> C.  Every component of g.T is lifted to
// the unique object of A's cluster category that is compatible with f.T and
// the previously lifted components and whose signed dimension vector agrees
// with the original modulo the span of the dimension vectors of f.T.
inline ClusterMorphism compose(const Model& m, const ClusterMorphism& g,
                               const ClusterMorphism& f) {
    if (g.dom != f.cod)
        throw invalid_argument_error("compose: morphisms are not composable");
    std::vector<DimVec> span;
    for (const auto& t : f.T) span.push_back(m.roots.at(t.root));
    std::vector<ClusterObject> acc = f.T;
    std::vector<ClusterMorphism> hits;
    detail::compose_rec(m, g, f, 0, acc, span, hits);
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.size() != 1)
        throw invariant_violation("compose: lift of " + morphism_name(m, g) + " along " +
                                  morphism_name(m, f) + " has " +
                                  std::to_string(hits.size()) + " solutions instead of 1");
    return hits[0];
}

// A signed exceptional sequence in display order (first factor last).
using Sequence = std::vector<ClusterObject>;

struct SequenceCheck {
    bool ok = false;
    std::string reason;  // empty when ok
    Wide final_wide;     // the wide reached after all factors, when ok
};

// Validates s as a signed exceptional sequence in the ambient wide w,
// walking factors from the back of the vector to the front.
inline SequenceCheck check_signed_sequence(const Model& m, const Wide& w, const Sequence& s) {
    SequenceCheck r;
    Wide cur = w;
    for (size_t j = s.size(); j-- > 0;) {
        const ClusterObject& x = s[j];
        if (x.root < 0 || x.root >= (int)m.roots.size()) {
            r.reason = "term " + std::to_string(s.size() - j) + " is not a root id";
            return r;
        }
        if (!wide_member(cur, x.root)) {
            r.reason = object_name(m, x) + " does not lie in the perpendicular category " +
                       "of the factors before it";
            return r;
        }
        if (x.shifted && !wide_member(projectives_of(m, cur), x.root)) {
            r.reason = object_name(m, x) + " is shifted but not relatively projective";
            return r;
        }
        cur = perp(m, cur, {x});
    }
    r.ok = true;
    r.final_wide = std::move(cur);
    return r;
}

namespace detail {

inline void sequences_rec(const Model& m, const Wide& cur, bool allow_shifts,
                          std::vector<ClusterObject>& factors, std::vector<Sequence>& out) {
    if (cur.empty()) {
        out.emplace_back(factors.rbegin(), factors.rend());
        return;
    }
    for (const ClusterObject& x : objects_of(m, cur)) {
        if (x.shifted && !allow_shifts) continue;
        factors.push_back(x);
        Wide nxt = perp(m, cur, {x});
        sequences_rec(m, nxt, allow_shifts, factors, out);
        factors.pop_back();
    }
}

}  // namespace detail

// All complete signed exceptional sequences of w, in display order.
inline std::vector<Sequence> all_signed_exceptional_sequences(const Model& m, const Wide& w) {
    std::vector<Sequence> out;
    std::vector<ClusterObject> factors;
    detail::sequences_rec(m, w, true, factors, out);
    std::sort(out.begin(), out.end());
    return out;
}

// All complete (unsigned) exceptional sequences of w: module terms only.
inline std::vector<Sequence> all_exceptional_sequences(const Model& m, const Wide& w) {
    std::vector<Sequence> out;
    std::vector<ClusterObject> factors;
    detail::sequences_rec(m, w, false, factors, out);
    std::sort(out.begin(), out.end());
    return out;
}

// All completions of a valid partial sequence, extending it on the left of
// the display order (i.e. by factors applied after the given ones).
inline std::vector<Sequence> complete_on_left(const Model& m, const Wide& w, const Sequence& s,
                                              bool allow_shifts = true) {
    SequenceCheck chk = check_signed_sequence(m, w, s);
    if (!chk.ok) throw invalid_argument_error("not a signed exceptional sequence: " + chk.reason);
    std::vector<Sequence> heads;
    std::vector<ClusterObject> factors;
    detail::sequences_rec(m, chk.final_wide, allow_shifts, factors, heads);
    std::vector<Sequence> out;
    for (const Sequence& h : heads) {
        Sequence full = h;
        full.insert(full.end(), s.begin(), s.end());
        out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Factor the partial cluster `order` (taken in that order) out of `cur`,
// collecting every possible factor sequence.  `span` carries the dimension
// vectors of the components already factored; each factor must be congruent
// to its component modulo that span.
inline void factorize_rec(const Model& m, const Wide& cur,
                          const std::vector<ClusterObject>& order, size_t j,
                          std::vector<DimVec>& span, std::vector<ClusterObject>& factors,
                          std::vector<Sequence>& out) {
    if (j == order.size()) {
        out.emplace_back(factors.rbegin(), factors.rend());
        return;
    }
    DimVec target = signed_dim(m, order[j]);
    for (const ClusterObject& x : objects_of(m, cur)) {
        if (!in_zspan(span, sub(signed_dim(m, x), target))) continue;
        factors.push_back(x);
        span.push_back(m.roots.at(order[j].root));
        Wide nxt = perp(m, cur, {x});
        factorize_rec(m, nxt, order, j + 1, span, factors, out);
        span.pop_back();
        factors.pop_back();
    }
}

}  // namespace detail

// The factorization of [set(order)]: w -> perp(w, order) that factors the
// components in the given order.  The result is in display order, so its
// last entry is order[0].
inline Sequence factorize_along(const Model& m, const Wide& w,
                                const std::vector<ClusterObject>& order) {
    validate_partial_cluster(m, w, order);
    std::vector<Sequence> out;
    std::vector<DimVec> span;
    std::vector<ClusterObject> factors;
    detail::factorize_rec(m, w, order, 0, span, factors, out);
    if (out.size() != 1)
        throw invariant_violation("factorize_along: found " + std::to_string(out.size()) +
                                  " factorizations along one order instead of 1");
    return out[0];
}

// All k! factorizations of a rank-k morphism into rank-1 morphisms, one per
// total order of its components.
inline std::vector<Sequence> factorizations(const Model& m, const ClusterMorphism& f) {
    std::vector<ClusterObject> order = f.T;
    std::vector<Sequence> out;
    std::sort(order.begin(), order.end());
    do {
        out.push_back(factorize_along(m, f.dom, order));
    } while (std::next_permutation(order.begin(), order.end()));
    size_t expect = out.size();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() != expect)
        throw invariant_violation("factorizations: two component orders produced the same " +
                                  std::string("sequence for ") + morphism_name(m, f));
    return out;
}

// Recovers the ordered components of the morphism whose factorization along
// that order is s.  Works for partial sequences as well; the result lists
// the components in factoring order (first factored first).
inline std::vector<ClusterObject> sequence_components(const Model& m, const Wide& w,
                                                      const Sequence& s) {
    SequenceCheck chk = check_signed_sequence(m, w, s);
    if (!chk.ok) throw invalid_argument_error("not a signed exceptional sequence: " + chk.reason);
    std::vector<ClusterObject> comps;
    std::vector<DimVec> span;
    for (size_t j = s.size(); j-- > 0;) {
        auto cands = detail::lift_candidates(m, w, comps, signed_dim(m, s[j]), span);
        if (cands.size() != 1)
            throw invariant_violation("sequence_components: " + std::to_string(cands.size()) +
                                      " component lifts for " + object_name(m, s[j]) +
                                      " instead of 1");
        comps.push_back(cands[0]);
        span.push_back(m.roots.at(cands[0].root));
    }
    if (factorize_along(m, w, comps) != s)
        throw invariant_violation("sequence_components: recovered order does not refactor "
                                  "to the input sequence");
    return comps;
}

// The morphism a sequence factors, [components]: w -> perp.
inline ClusterMorphism composite_morphism(const Model& m, const Wide& w, const Sequence& s) {
    return make_morphism(m, w, sequence_components(m, w, s));
}

// Bijection between complete signed exceptional sequences and ordered
// clusters: the ordered cluster lists the recovered components in factoring
// order, and the inverse factors an ordered cluster back into its sequence.
inline std::vector<ClusterObject> to_ordered_cluster(const Model& m, const Wide& w,
                                                     const Sequence& s) {
    std::vector<ClusterObject> comps = sequence_components(m, w, s);
    if ((int)comps.size() != wide_rank(m, w))
        throw invalid_argument_error("to_ordered_cluster: sequence is not complete");
    return comps;
}

inline Sequence from_ordered_cluster(const Model& m, const Wide& w,
                                     const std::vector<ClusterObject>& objs) {
    if ((int)objs.size() != wide_rank(m, w))
        throw invalid_argument_error("from_ordered_cluster: not a complete cluster");
    return factorize_along(m, w, objs);
}

// Braid moves on display positions (1-based).  With (A,B) the terms at
// positions (i, i+1):
//   direction -1:  (A,B) -> (B,X),  signed dim X == signed dim A  mod  dim B
//   direction +1:  (A,B) -> (Y,A),  signed dim Y == signed dim B  mod  dim A
// The unique replacement making the result a signed exceptional sequence is
// selected.  The move is partial: the displaced term's mutation can land on
// a shifted copy of a module that is not relatively projective, which has no
// representation as a signed sequence; such moves throw.  Wherever a move is
// defined, the opposite move takes the result back (tested), but the two
// directions are genuinely different partial maps, not a single involution.
inline Sequence braid_move(const Model& m, const Wide& w, const Sequence& s, int i,
                           int direction) {
    if (i < 1 || i + 1 > (int)s.size())
        throw invalid_argument_error("braid_move: position out of range");
    if (direction != 1 && direction != -1)
        throw invalid_argument_error("braid_move: direction must be +1 or -1");
    SequenceCheck chk = check_signed_sequence(m, w, s);
    if (!chk.ok) throw invalid_argument_error("not a signed exceptional sequence: " + chk.reason);
    const ClusterObject& A = s[i - 1];
    const ClusterObject& B = s[i];
    const ClusterObject& kept = direction < 0 ? B : A;
    const ClusterObject& moved = direction < 0 ? A : B;
    std::vector<DimVec> span{m.roots.at(kept.root)};
    DimVec target = signed_dim(m, moved);
    std::vector<Sequence> hits;
    for (int r = 0; r < (int)m.roots.size(); ++r)
        for (bool shifted : {false, true}) {
            ClusterObject cand{shifted, r};
            if (!in_zspan(span, sub(signed_dim(m, cand), target))) continue;
            Sequence t = s;
            t[i - 1] = direction < 0 ? kept : cand;
            t[i] = direction < 0 ? cand : kept;
            if (!check_signed_sequence(m, w, t).ok) continue;
            hits.push_back(std::move(t));
        }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.empty())
        throw invariant_violation("braid_move: no valid replacement at this position");
    if (hits.size() > 1)
        throw invariant_violation("braid_move: " + std::to_string(hits.size()) +
                                  " replacements instead of 1");
    return hits[0];
}

// True when braid_move(m, w, s, i, direction) is defined.
inline bool braid_move_defined(const Model& m, const Wide& w, const Sequence& s, int i,
                               int direction) {
    try {
        braid_move(m, w, s, i, direction);
        return true;
    } catch (const invariant_violation&) {
        return false;
    }
}

// All partial clusters of w (including the empty one), each sorted.
inline std::vector<std::vector<ClusterObject>> all_partial_clusters(const Model& m,
                                                                    const Wide& w) {
    std::vector<ClusterObject> objs = objects_of(m, w);
    std::vector<std::vector<ClusterObject>> out;
    std::vector<ClusterObject> cur;
    auto rec = [&](auto&& self, size_t from) -> void {
        out.push_back(cur);
        for (size_t j = from; j < objs.size(); ++j) {
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
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ClusterMorphism> all_morphisms_from(const Model& m, const Wide& w) {
    std::vector<ClusterMorphism> out;
    for (auto& T : all_partial_clusters(m, w)) out.push_back(make_morphism(m, w, T));
    std::sort(out.begin(), out.end());
    return out;
}

// Every morphism of the cluster morphism category of m, across all wides.
inline std::vector<ClusterMorphism> all_morphisms(const Model& m) {
    std::vector<ClusterMorphism> out;
    for (const Wide& w : all_wide_subcategories(m)) {
        auto batch = all_morphisms_from(m, w);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace clusterpic
