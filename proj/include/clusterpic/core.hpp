#pragma once

// Shared value types and exact integer linear algebra used across the
// workbench: dimension vectors, graded-lex ordering, lattice membership,
// determinants and unimodular inverses.  Everything here is exact; no
// floating point.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterpic {

// ---------------------------------------------------------------------------
// Error taxonomy.  Every failure mode surfaced by the library is one of
// these; the CLI maps kind() onto its machine-readable error JSON.
// ---------------------------------------------------------------------------

class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct parse_error : error {
    explicit parse_error(const std::string& m) : error("parse_error", m) {}
};
struct invalid_argument_error : error {
    explicit invalid_argument_error(const std::string& m) : error("invalid_argument", m) {}
};
struct unsupported_operation : error {
    explicit unsupported_operation(const std::string& m) : error("unsupported_operation", m) {}
};
struct invariant_violation : error {
    explicit invariant_violation(const std::string& m) : error("invariant_violation", m) {}
};
struct resource_limit : error {
    explicit resource_limit(const std::string& m) : error("resource_limit", m) {}
};
struct ambiguous_point : error {
    explicit ambiguous_point(const std::string& m) : error("ambiguous_point", m) {}
};

// ---------------------------------------------------------------------------
// Dimension vectors (coordinates in the simple-root basis).
// ---------------------------------------------------------------------------

using DimVec = std::vector<int>;

inline DimVec add(const DimVec& a, const DimVec& b) {
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline DimVec sub(const DimVec& a, const DimVec& b) {
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline DimVec neg(const DimVec& a) {
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline DimVec scale(int c, const DimVec& a) {
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline long long dot(const DimVec& a, const DimVec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * b[i];
    return s;
}

inline bool is_zero(const DimVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

inline bool is_nonneg(const DimVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

inline int coord_sum(const DimVec& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

// Componentwise a <= b.
inline bool leq(const DimVec& a, const DimVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Graded lexicographic order used everywhere roots are listed: smaller
// coordinate sum first; within a grade, lexicographically larger vector
// first (so e1 precedes e2 precedes ...).
inline bool graded_lex_less(const DimVec& a, const DimVec& b) {
    int sa = coord_sum(a), sb = coord_sum(b);
    if (sa != sb) return sa < sb;
    return a > b;  // lexicographically larger vector comes first
}

// Compact display: "(110)" for single-digit entries, "(1,10,2)" otherwise.
inline std::string show(const DimVec& a) {
    bool wide = std::any_of(a.begin(), a.end(), [](int x) { return x > 9 || x < 0; });
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (wide && i) s += ',';
        s += std::to_string(a[i]);
    }
    s += ')';
    return s;
}

// ---------------------------------------------------------------------------
// Exact integer linear algebra (small dense matrices, n <= ~10).
// ---------------------------------------------------------------------------

using IntMat = std::vector<std::vector<long long>>;  // row-major

inline IntMat mat_from_cols(const std::vector<DimVec>& cols, size_t nrows) {
    IntMat m(nrows, std::vector<long long>(cols.size(), 0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < nrows; ++i) m[i][j] = cols[j][i];
    return m;
}

// Rank over the rationals by fraction-free (Bareiss) elimination.
inline int int_rank(IntMat m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    long long prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return (int)r;
}

inline int rank_of_vectors(const std::vector<DimVec>& vecs) {
    if (vecs.empty()) return 0;
    return int_rank(mat_from_cols(vecs, vecs[0].size()));
}

// Determinant by Bareiss elimination (exact, no overflow at our sizes).
inline long long int_det(IntMat m) {
    size_t n = m.size();
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) { std::swap(m[piv], m[c]); sign = -sign; }
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j)
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign * m[n - 1][n - 1];
}

// Inverse of an integer matrix with determinant +-1 (asserted).  Returns an
// exact integer matrix: the adjugate divided by the determinant.
inline IntMat inverse_unimodular(const IntMat& m) {
    size_t n = m.size();
    long long det = int_det(m);
    if (det != 1 && det != -1)
        throw invariant_violation("matrix is not unimodular (det = " + std::to_string(det) + ")");
    IntMat inv(n, std::vector<long long>(n, 0));
    // Cofactor expansion; n <= ~10 so O(n^5) is irrelevant.
    IntMat minor(n ? n - 1 : 0, std::vector<long long>(n ? n - 1 : 0, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[mr][mc++] = m[r][c];
                }
                ++mr;
            }
            long long cof = int_det(minor);
            if ((i + j) % 2) cof = -cof;
            inv[j][i] = cof * det;  // adjugate transposed, divided by det=+-1
        }
    }
    return inv;
}

inline DimVec mat_apply(const IntMat& m, const DimVec& v) {
    DimVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        long long s = 0;
        for (size_t j = 0; j < v.size(); ++j) s += m[i][j] * v[j];
        r[i] = (int)s;
    }
    return r;
}

// Solve sum_j x_j * gens[j] = target over the integers, where the generators
// are linearly independent over Q.  Returns true iff an integer solution
// exists.  Implemented by fraction-free forward elimination on the augmented
// matrix followed by exact back substitution over rationals represented as
// (num, den) pairs.
inline bool in_zspan(const std::vector<DimVec>& gens, const DimVec& target) {
    if (gens.empty()) return is_zero(target);
    size_t n = target.size(), k = gens.size();
    // Augmented matrix [A | b], A columns = generators.
    std::vector<std::vector<long long>> m(n, std::vector<long long>(k + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) m[i][j] = gens[j][i];
        m[i][k] = target[i];
    }
    // Gaussian elimination with exact integer cross-multiplication.
    std::vector<size_t> pivot_row;
    size_t r = 0;
    for (size_t c = 0; c < k && r < n; ++c) {
        size_t piv = r;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n)
            throw invariant_violation("in_zspan: generators are linearly dependent");
        std::swap(m[piv], m[r]);
        for (size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long long a = m[r][c], b = m[i][c];
            long long g = std::gcd(a, b);
            long long fa = b / g, fb = a / g;
            for (size_t j = 0; j <= k; ++j) m[i][j] = fb * m[i][j] - fa * m[r][j];
        }
        pivot_row.push_back(r);
        ++r;
    }
    if (r < k) throw invariant_violation("in_zspan: generators are linearly dependent");
    // Consistency: rows below the pivots must have zero RHS.
    for (size_t i = r; i < n; ++i)
        if (m[i][k] != 0) return false;
    // Each pivot row now reads  m[i][c] * x_c = m[i][k]; integrality check.
    for (size_t c = 0; c < k; ++c) {
        long long a = m[pivot_row[c]][c], b = m[pivot_row[c]][k];
        if (a == 0) throw invariant_violation("in_zspan: lost pivot");
        if (b % a != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Deterministic fixed-point formatting (SVG coordinates).  Locale-free.
// ---------------------------------------------------------------------------

inline std::string fmt_fixed(double x, int decimals = 3) {
    long long scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    long long v = (long long)(x < 0 ? x * scale - 0.5 : x * scale + 0.5);
    bool negative = v < 0;
    if (negative) v = -v;
    std::string digits = std::to_string(v);
    if ((int)digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
    digits.insert(digits.size() - decimals, ".");
    // trim trailing zeros but keep at least one decimal digit
    while (digits.back() == '0' && digits[digits.size() - 2] != '.') digits.pop_back();
    return (negative ? "-" : "") + digits;
}

}  // namespace clusterpic
