#pragma once

// Valued Dynkin quivers: parsing, validation, symmetrizers, Euler form,
// positive-root enumeration by reflection closure, and the precomputed
// Model context the rest of the workbench operates on.

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace clusterpic {

struct Arrow {
    int source = 0, target = 0;  // 0-based vertices, arrow source -> target
    int val_st = 1, val_ts = 1;  // valuation pair (a_{source,target}, a_{target,source})
};

struct ValuedQuiver {
    int n = 0;
    std::string type;  // declared type string, e.g. "A3", "B2", "A1xA1"
    std::vector<Arrow> arrows;
    std::vector<int> f;  // symmetrizers, f[i] * a_ij = f[j] * a_ji
};

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
}

inline int parse_int(const std::string& s, size_t& i, const char* what) {
    skip_ws(s, i);
    size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (i == start) throw parse_error(std::string("expected ") + what + " in quiver spec near position " + std::to_string(start));
    return std::stoi(s.substr(start, i - start));
}

struct TypeComponent {
    char letter;
    int rank;
};

inline std::vector<TypeComponent> parse_type(const std::string& t) {
    std::vector<TypeComponent> out;
    size_t i = 0;
    while (i < t.size()) {
        char L = (char)std::toupper((unsigned char)t[i]);
        if (std::string("ABCDEFG").find(L) == std::string::npos)
            throw parse_error("unknown Dynkin type letter '" + std::string(1, t[i]) + "'");
        ++i;
        size_t start = i;
        while (i < t.size() && std::isdigit((unsigned char)t[i])) ++i;
        if (i == start) throw parse_error("missing rank after type letter in '" + t + "'");
        out.push_back({L, std::stoi(t.substr(start, i - start))});
        if (i < t.size()) {
            if (t[i] != 'x' && t[i] != 'X')
                throw parse_error("expected 'x' between type factors in '" + t + "'");
            ++i;
        }
    }
    if (out.empty()) throw parse_error("empty type in quiver spec");
    return out;
}

inline long long expected_root_count(char letter, int rank) {
    switch (letter) {
        case 'A': return rank >= 1 ? (long long)rank * (rank + 1) / 2 : -1;
        case 'B':
        case 'C': return rank >= 2 ? (long long)rank * rank : -1;
        case 'D': return rank >= 4 ? (long long)rank * (rank - 1) : -1;
        case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : rank == 8 ? 120 : -1;
        case 'F': return rank == 4 ? 24 : -1;
        case 'G': return rank == 2 ? 6 : -1;
    }
    return -1;
}

inline bool letter_simply_laced(char letter) {
    return letter == 'A' || letter == 'D' || letter == 'E';
}

}  // namespace detail

// Parse "<TYPE><n>: v1<v2<..." plus an optional explicit arrow list
// ("2>1,3>2", items "a>b" or "a<b" with an optional "(x,y)" valuation after
// the arrow symbol).  Validates that the result is a (possibly disconnected)
// valued Dynkin quiver matching the declared type.
inline ValuedQuiver parse_quiver(const std::string& spec, const std::string& arrow_list = "") {
    size_t colon = spec.find(':');
    if (colon == std::string::npos) throw parse_error("quiver spec needs '<TYPE><n>:' prefix: '" + spec + "'");
    std::string type_str = spec.substr(0, colon);
    // strip whitespace inside the type token
    std::string type;
    for (char c : type_str)
        if (!std::isspace((unsigned char)c)) type += c;
    auto comps = detail::parse_type(type);
    int n = 0;
    for (auto& c : comps) {
        if (detail::expected_root_count(c.letter, c.rank) < 0)
            throw parse_error("invalid rank " + std::to_string(c.rank) + " for type letter " + std::string(1, c.letter));
        n += c.rank;
    }

    ValuedQuiver q;
    q.n = n;
    q.type = type;

    auto add_edge = [&](int a, char op, int av, int bv, int b) {
        // op '>' : arrow a->b ; op '<' : arrow b->a ; (av,bv) read source->target
        if (a < 1 || a > n || b < 1 || b > n)
            throw parse_error("vertex out of range 1.." + std::to_string(n));
        if (a == b) throw parse_error("loop at vertex " + std::to_string(a));
        Arrow ar;
        if (op == '>') ar = {a - 1, b - 1, av, bv};
        else ar = {b - 1, a - 1, av, bv};
        for (const auto& e : q.arrows) {
            int u = std::min(e.source, e.target), v = std::max(e.source, e.target);
            int x = std::min(ar.source, ar.target), y = std::max(ar.source, ar.target);
            if (u == x && v == y)
                throw parse_error("duplicate edge between vertices " + std::to_string(x + 1) + " and " + std::to_string(y + 1));
        }
        if (av < 1 || bv < 1) throw parse_error("valuation entries must be positive");
        q.arrows.push_back(ar);
    };

    auto parse_val = [&](const std::string& s, size_t& i) -> std::pair<int, int> {
        detail::skip_ws(s, i);
        if (i < s.size() && s[i] == '(') {
            ++i;
            int a = detail::parse_int(s, i, "valuation");
            detail::skip_ws(s, i);
            if (i >= s.size() || s[i] != ',') throw parse_error("expected ',' in valuation");
            ++i;
            int b = detail::parse_int(s, i, "valuation");
            detail::skip_ws(s, i);
            if (i >= s.size() || s[i] != ')') throw parse_error("expected ')' in valuation");
            ++i;
            return {a, b};
        }
        return {1, 1};
    };

    // vertex path(s): whitespace-separated chains "1<2<3"
    size_t i = colon + 1;
    while (true) {
        detail::skip_ws(spec, i);
        if (i >= spec.size()) break;
        int prev = detail::parse_int(spec, i, "vertex");
        if (prev < 1 || prev > n) throw parse_error("vertex out of range 1.." + std::to_string(n));
        while (i < spec.size() && (spec[i] == '<' || spec[i] == '>')) {
            char op = spec[i++];
            auto [a, b] = parse_val(spec, i);
            int next = detail::parse_int(spec, i, "vertex");
            add_edge(prev, op, a, b, next);
            prev = next;
        }
    }

    // explicit arrow list
    size_t j = 0;
    while (j < arrow_list.size()) {
        detail::skip_ws(arrow_list, j);
        if (j >= arrow_list.size()) break;
        int a = detail::parse_int(arrow_list, j, "vertex");
        detail::skip_ws(arrow_list, j);
        if (j >= arrow_list.size() || (arrow_list[j] != '>' && arrow_list[j] != '<'))
            throw parse_error("expected '>' or '<' in arrow list");
        char op = arrow_list[j++];
        auto [x, y] = parse_val(arrow_list, j);
        int b = detail::parse_int(arrow_list, j, "vertex");
        add_edge(a, op, x, y, b);
        detail::skip_ws(arrow_list, j);
        if (j < arrow_list.size()) {
            if (arrow_list[j] != ',') throw parse_error("expected ',' between arrows");
            ++j;
        }
    }

    if (n > 1 && q.arrows.empty() && type.find('x') == std::string::npos && type.find('X') == std::string::npos)
        throw parse_error("connected type " + type + " needs an orientation (vertex path or --arrows)");

    // ---- symmetrizers: minimal positive integers with f_s a_st = f_t a_ts --
    // Undirected BFS over each component carrying exact rational multipliers.
    std::vector<std::vector<std::pair<int, const Arrow*>>> adj(n);
    for (const auto& ar : q.arrows) {
        adj[ar.source].push_back({ar.target, &ar});
        adj[ar.target].push_back({ar.source, &ar});
    }
    q.f.assign(n, 0);
    std::vector<std::pair<long long, long long>> ratio(n);  // f_v = num/den relative to component seed
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int c = ncomp++;
        comp[s] = c;
        ratio[s] = {1, 1};
        std::vector<int> stack{s};
        std::vector<int> members{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, ar] : adj[v]) {
                // f_source * val_st = f_target * val_ts
                long long num, den;
                if (ar->source == v) {  // f_w = f_v * val_st / val_ts
                    num = ratio[v].first * ar->val_st;
                    den = ratio[v].second * ar->val_ts;
                } else {  // v is target: f_w = f_v * val_ts / val_st
                    num = ratio[v].first * ar->val_ts;
                    den = ratio[v].second * ar->val_st;
                }
                long long g = std::gcd(num, den);
                num /= g;
                den /= g;
                if (comp[w] < 0) {
                    comp[w] = c;
                    ratio[w] = {num, den};
                    stack.push_back(w);
                    members.push_back(w);
                } else if (ratio[w].first * den != num * ratio[w].second) {
                    throw parse_error("valuations are not symmetrizable");
                }
            }
        }
        long long L = 1;
        for (int v : members) L = std::lcm(L, ratio[v].second);
        long long G = 0;
        for (int v : members) G = std::gcd(G, ratio[v].first * (L / ratio[v].second));
        for (int v : members) q.f[v] = (int)(ratio[v].first * (L / ratio[v].second) / G);
    }

    // ---- graph-level type check: component (rank, lacedness) multiset -----
    {
        std::vector<int> crank;
        std::vector<bool> claced;
        std::vector<int> cc(n, -1);
        int nc = 0;
        for (int s = 0; s < n; ++s) {
            if (cc[s] >= 0) continue;
            cc[s] = nc;
            crank.push_back(0);
            claced.push_back(true);
            std::vector<int> st{s};
            while (!st.empty()) {
                int v = st.back();
                st.pop_back();
                ++crank[nc];
                for (auto [w, ar] : adj[v]) {
                    if (ar->val_st != 1 || ar->val_ts != 1) claced[nc] = false;
                    if (cc[w] < 0) {
                        cc[w] = nc;
                        st.push_back(w);
                    }
                }
            }
            ++nc;
        }
        std::multiset<std::pair<int, bool>> have, want;
        for (int c = 0; c < nc; ++c) have.insert({crank[c], claced[c]});
        for (const auto& tc : comps)
            want.insert({tc.rank, detail::letter_simply_laced(tc.letter)});
        if (have != want)
            throw parse_error("quiver graph does not match declared type " + type +
                              " (check connectivity, ranks and valuations)");
    }

    // ---- Dynkin validation: symmetrized Euler form positive definite ------
    IntMat B(n, std::vector<long long>(n, 0));
    for (int v = 0; v < n; ++v) B[v][v] = 2LL * q.f[v];
    for (const auto& ar : q.arrows) {
        long long off = -(long long)q.f[ar.target] * ar.val_ts;  // = -f_s * a_st
        B[ar.source][ar.target] += off;
        B[ar.target][ar.source] += off;
    }
    for (int k = 1; k <= n; ++k) {
        IntMat lead(k, std::vector<long long>(k));
        for (int r = 0; r < k; ++r)
            for (int cc = 0; cc < k; ++cc) lead[r][cc] = B[r][cc];
        if (int_det(lead) <= 0)
            throw parse_error("quiver is not of finite (Dynkin) type: symmetrized form is not positive definite");
    }

    return q;
}

// ---------------------------------------------------------------------------
// Euler form and positive roots.
// ---------------------------------------------------------------------------

inline IntMat euler_matrix(const ValuedQuiver& q) {
    IntMat E(q.n, std::vector<long long>(q.n, 0));
    for (int i = 0; i < q.n; ++i) E[i][i] = q.f[i];
    for (const auto& ar : q.arrows)
        E[ar.source][ar.target] = -(long long)q.f[ar.target] * ar.val_ts;
    return E;
}

inline long long euler_form(const IntMat& E, const DimVec& a, const DimVec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) s += (long long)a[i] * E[i][j] * b[j];
    }
    return s;
}

// All positive roots via reflection closure of the simples, in graded-lex
// order.
inline std::vector<DimVec> positive_roots(const ValuedQuiver& q) {
    IntMat E = euler_matrix(q);
    IntMat B(q.n, std::vector<long long>(q.n));
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) B[i][j] = E[i][j] + E[j][i];
    std::set<DimVec> found;
    std::vector<DimVec> stack;
    for (int i = 0; i < q.n; ++i) {
        DimVec e(q.n, 0);
        e[i] = 1;
        found.insert(e);
        stack.push_back(e);
    }
    while (!stack.empty()) {
        DimVec v = stack.back();
        stack.pop_back();
        for (int i = 0; i < q.n; ++i) {
            long long pair = 0;
            for (int j = 0; j < q.n; ++j) pair += B[j][i] * v[j];
            DimVec w = v;
            w[i] = (int)(v[i] - pair / q.f[i]);
            if (is_nonneg(w) && !is_zero(w) && found.insert(w).second) stack.push_back(w);
        }
    }
    std::vector<DimVec> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

// ---------------------------------------------------------------------------
// Model: a quiver with everything precomputed that downstream modules need.
// ---------------------------------------------------------------------------

struct Model {
    ValuedQuiver q;
    IntMat E;                  // Euler matrix
    std::vector<DimVec> roots; // graded-lex order; RootId = index here
    IntMat C;                  // columns = dim P_i
    IntMat Cinv;               // exact integer inverse of C
    std::vector<DimVec> proj;  // dim P_i
    std::vector<DimVec> inj;   // dim I_i
    std::vector<std::string> names;  // display name per root id
    bool simply_laced = true;
    std::vector<int> topo;     // vertex order with every arrow target before its source

    int n() const { return q.n; }

    int root_id(const DimVec& d) const {
        auto it = index_.find(d);
        if (it == index_.end())
            throw invalid_argument_error("not a positive root: " + show(d));
        return it->second;
    }
    bool is_root(const DimVec& d) const { return index_.count(d) > 0; }

    std::map<DimVec, int> index_;
};

namespace detail {

// Cramer solve A x = b requiring a unique integral solution.
inline DimVec cramer_solve_integer(const IntMat& A, const DimVec& b, const char* what) {
    size_t n = A.size();
    long long d = int_det(A);
    if (d == 0) throw invariant_violation(std::string(what) + ": singular system");
    DimVec x(n, 0);
    for (size_t j = 0; j < n; ++j) {
        IntMat Aj = A;
        for (size_t i = 0; i < n; ++i) Aj[i][j] = b[i];
        long long dj = int_det(Aj);
        if (dj % d != 0) throw invariant_violation(std::string(what) + ": non-integral solution");
        x[j] = (int)(dj / d);
    }
    return x;
}

}  // namespace detail

inline Model build_model(const ValuedQuiver& q) {
    Model m;
    m.q = q;
    m.E = euler_matrix(q);
    m.roots = positive_roots(q);
    for (size_t i = 0; i < m.roots.size(); ++i) m.index_[m.roots[i]] = (int)i;
    m.simply_laced = true;
    for (const auto& ar : q.arrows)
        if (ar.val_st != 1 || ar.val_ts != 1) m.simply_laced = false;

    // declared-type validation: per connected component, the (rank, root
    // count, simply-laced) signature must match the declared letters.
    {
        std::vector<int> comp(q.n, -1);
        std::vector<std::vector<int>> adj(q.n);
        for (const auto& ar : q.arrows) {
            adj[ar.source].push_back(ar.target);
            adj[ar.target].push_back(ar.source);
        }
        int nc = 0;
        for (int s = 0; s < q.n; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> st{s};
            comp[s] = nc;
            while (!st.empty()) {
                int v = st.back();
                st.pop_back();
                for (int w : adj[v])
                    if (comp[w] < 0) {
                        comp[w] = nc;
                        st.push_back(w);
                    }
            }
            ++nc;
        }
        std::vector<int> crank(nc, 0);
        std::vector<long long> ccount(nc, 0);
        std::vector<bool> claced(nc, true);
        for (int v = 0; v < q.n; ++v) ++crank[comp[v]];
        for (const auto& ar : q.arrows)
            if (ar.val_st != 1 || ar.val_ts != 1) claced[comp[ar.source]] = false;
        for (const auto& r : m.roots) {
            int c = -1;
            for (int v = 0; v < q.n; ++v)
                if (r[v]) { c = comp[v]; break; }
            ++ccount[c];
        }
        std::multiset<std::tuple<int, long long, bool>> have, want;
        for (int c = 0; c < nc; ++c) have.insert({crank[c], ccount[c], claced[c]});
        for (const auto& tc : detail::parse_type(q.type))
            want.insert({tc.rank, detail::expected_root_count(tc.letter, tc.rank),
                         detail::letter_simply_laced(tc.letter)});
        if (have != want)
            throw parse_error("quiver does not match declared type " + q.type);
    }

    // topological order: arrow target strictly before source.
    {
        std::vector<int> outdeg(q.n, 0);
        std::vector<std::vector<int>> preds(q.n);  // preds[t] = sources of arrows into t
        for (const auto& ar : q.arrows) {
            ++outdeg[ar.source];
            preds[ar.target].push_back(ar.source);
        }
        std::vector<bool> placed(q.n, false);
        for (int step = 0; step < q.n; ++step) {
            int pick = -1;
            for (int v = 0; v < q.n; ++v)
                if (!placed[v] && outdeg[v] == 0) { pick = v; break; }
            if (pick < 0) throw parse_error("quiver has a directed cycle");
            placed[pick] = true;
            m.topo.push_back(pick);
            for (int s : preds[pick]) --outdeg[s];
        }
    }

    // projective / injective dimension vectors: E^T dim P_i = f_i e_i and
    // E dim I_i = f_i e_i, solved exactly.
    IntMat Et(q.n, std::vector<long long>(q.n));
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) Et[i][j] = m.E[j][i];
    for (int i = 0; i < q.n; ++i) {
        DimVec rhs(q.n, 0);
        rhs[i] = q.f[i];
        DimVec p = detail::cramer_solve_integer(Et, rhs, "projective dimension vector");
        DimVec in = detail::cramer_solve_integer(m.E, rhs, "injective dimension vector");
        if (!m.is_root(p) || !m.is_root(in))
            throw invariant_violation("projective/injective dimension vector is not a positive root");
        m.proj.push_back(p);
        m.inj.push_back(in);
    }
    m.C = mat_from_cols(m.proj, q.n);
    m.Cinv = inverse_unimodular(m.C);

    // names: S_i, then P_i, then I_i, then M(dim)
    m.names.assign(m.roots.size(), "");
    for (size_t r = 0; r < m.roots.size(); ++r) {
        const DimVec& d = m.roots[r];
        std::string nm;
        for (int i = 0; i < q.n && nm.empty(); ++i)
            if (coord_sum(d) == 1 && d[i] == 1) nm = "S" + std::to_string(i + 1);
        for (int i = 0; i < q.n && nm.empty(); ++i)
            if (d == m.proj[i]) nm = "P" + std::to_string(i + 1);
        for (int i = 0; i < q.n && nm.empty(); ++i)
            if (d == m.inj[i]) nm = "I" + std::to_string(i + 1);
        if (nm.empty()) nm = "M" + show(d);
        m.names[r] = nm;
    }
    return m;
}

inline Model build_model(const std::string& spec, const std::string& arrows = "") {
    return build_model(parse_quiver(spec, arrows));
}

// Euler pairing on dimension vectors: <a,b> = dim Hom - dim Ext^1.
inline long long pairing(const Model& m, const DimVec& a, const DimVec& b) {
    return euler_form(m.E, a, b);
}

// ---------------------------------------------------------------------------
// Rank-2 chains.
// ---------------------------------------------------------------------------

// All positive roots of the form a*alpha + b*beta (a,b >= 0 integers),
// sorted by strictly increasing ratio a/b with b = 0 (i.e. alpha) last.
inline std::vector<DimVec> rank2_chain(const Model& m, const DimVec& alpha, const DimVec& beta) {
    std::vector<std::pair<std::pair<int, int>, DimVec>> hits;  // ((a,b), root)
    for (const auto& g : m.roots) {
        // solve g = a*alpha + b*beta exactly; alpha, beta independent
        long long d11 = dot(alpha, alpha), d12 = dot(alpha, beta), d22 = dot(beta, beta);
        long long det = d11 * d22 - d12 * d12;
        if (det == 0) throw invalid_argument_error("rank2_chain: roots are proportional");
        long long r1 = dot(alpha, g), r2 = dot(beta, g);
        long long an = r1 * d22 - r2 * d12, bn = r2 * d11 - r1 * d12;
        if (an % det || bn % det) continue;
        long long a = an / det, b = bn / det;
        if (a < 0 || b < 0) continue;
        if (g != add(scale((int)a, alpha), scale((int)b, beta))) continue;
        hits.push_back({{(int)a, (int)b}, g});
    }
    std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) {
        // a/b increasing, b = 0 treated as +infinity
        long long lhs = (long long)x.first.first * y.first.second;
        long long rhs = (long long)y.first.first * x.first.second;
        if (lhs != rhs) return lhs < rhs;
        return x.second < y.second;
    });
    std::vector<DimVec> out;
    for (auto& h : hits) out.push_back(h.second);
    return out;
}

// The rank-2 chain of a rank-2 quiver, with alpha = the simple at the sink.
inline std::vector<DimVec> rank2_roots(const Model& m) {
    if (m.n() != 2) throw invalid_argument_error("rank2_roots requires a rank-2 quiver");
    if (m.q.arrows.empty()) throw invalid_argument_error("rank2_roots requires a connected rank-2 quiver");
    int sink = m.q.arrows[0].target;
    DimVec alpha(2, 0), beta(2, 0);
    alpha[sink] = 1;
    beta[1 - sink] = 1;
    return rank2_chain(m, alpha, beta);
}

}  // namespace clusterpic
