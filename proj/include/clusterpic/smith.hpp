#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "clusterpic/core.hpp"

namespace clusterpic {

using BigMat = std::vector<std::vector<mpz_class>>;  // row-major

// Sparse integer matrix given by columns; entries are (row, coefficient).
using SparseCols = std::vector<std::vector<std::pair<int, long long>>>;

struct SmithResult {
    int rank = 0;
    std::vector<mpz_class> divisors;  // invariant factors d1 | d2 | ... (all > 0)

    std::vector<mpz_class> torsion() const {
        std::vector<mpz_class> t;
        for (const mpz_class& d : divisors)
            if (d != 1) t.push_back(d);
        return t;
    }
};

// Smith normal form by the classical pivoting algorithm.  Matrices here stay
// small (a residual after sparse reduction, or a relation matrix), so no
// attempt is made at modular or sparse refinements.
inline SmithResult smith_normal_form(BigMat a) {
    SmithResult out;
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    int t = 0;
    while (t < rows && t < cols) {
        int pr = -1, pc = -1;
        mpz_class best;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0) {
                    mpz_class v = abs(a[i][j]);
                    if (pr < 0 || v < best) {
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
        if (pr < 0) break;
        std::swap(a[t], a[pr]);
        for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q = a[i][t] / a[t][t];
                for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {  // remainder smaller than pivot: promote it
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q = a[t][j] / a[t][t];
                for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every remaining entry for the divisor chain
            for (int i = t + 1; i < rows && clean; ++i)
                for (int j = t + 1; j < cols && clean; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                        clean = false;
                    }
        }
        out.divisors.push_back(abs(a[t][t]));
        ++t;
    }
    out.rank = t;
    return out;
}

// Smith data of a sparse matrix: eliminate unit pivots with exact integer row
// operations (each contributes an invariant factor 1), then finish with the
// dense algorithm on whatever is left.  Boundary matrices of cubical
// complexes reduce almost entirely in the first phase.
inline SmithResult smith_of_sparse(const SparseCols& columns, int nrows) {
    std::vector<std::map<int, mpz_class>> col(columns.size());
    for (size_t j = 0; j < columns.size(); ++j)
        for (auto& [r, v] : columns[j])
            if (v) {
                col[j][r] += (long)v;
                if (col[j][r] == 0) col[j].erase(r);
            }
    std::vector<std::set<int>> rows_to_cols(nrows);
    for (size_t j = 0; j < col.size(); ++j)
        for (auto& [r, v] : col[j]) rows_to_cols[r].insert((int)j);

    std::vector<bool> col_dead(col.size(), false), row_dead(nrows, false);
    int unit_rank = 0;
    while (true) {
        // Markowitz-style choice: the unit entry with least expected fill-in.
        int br = -1, bc = -1;
        long long best = -1;
        for (size_t j = 0; j < col.size(); ++j) {
            if (col_dead[j]) continue;
            for (auto& [r, v] : col[j]) {
                if (v != 1 && v != -1) continue;
                long long score =
                    ((long long)rows_to_cols[r].size() - 1) * ((long long)col[j].size() - 1);
                if (best < 0 || score < best) {
                    best = score;
                    br = r;
                    bc = (int)j;
                }
                if (best == 0) break;
            }
            if (best == 0) break;
        }
        if (br < 0) break;

        mpz_class pv = col[bc][br];
        std::vector<int> touched(rows_to_cols[br].begin(), rows_to_cols[br].end());
        for (int j : touched) {
            if (j == bc || col_dead[j]) continue;
            mpz_class factor = col[j][br] * pv;  // pv == ±1 so pv⁻¹ == pv
            for (auto& [r, v] : col[bc]) {
                mpz_class& slot = col[j][r];
                slot -= factor * v;
                if (slot == 0) {
                    col[j].erase(r);
                    rows_to_cols[r].erase(j);
                } else {
                    rows_to_cols[r].insert(j);
                }
            }
        }
        for (auto& [r, v] : col[bc]) rows_to_cols[r].erase(bc);
        col_dead[bc] = true;
        row_dead[br] = true;
        ++unit_rank;
    }

    // Collect the residual submatrix on the surviving rows and columns.
    std::map<int, int> row_index;
    for (int r = 0; r < nrows; ++r)
        if (!row_dead[r] && !rows_to_cols[r].empty()) {
            int k = (int)row_index.size();
            row_index[r] = k;
        }
    std::vector<int> live_cols;
    for (size_t j = 0; j < col.size(); ++j)
        if (!col_dead[j] && !col[j].empty()) live_cols.push_back((int)j);

    BigMat dense(row_index.size(), std::vector<mpz_class>(live_cols.size(), 0));
    for (size_t jj = 0; jj < live_cols.size(); ++jj)
        for (auto& [r, v] : col[live_cols[jj]]) dense[row_index.at(r)][jj] = v;

    SmithResult tail = smith_normal_form(std::move(dense));
    SmithResult out;
    out.rank = unit_rank + tail.rank;
    out.divisors.assign(unit_rank, mpz_class(1));
    out.divisors.insert(out.divisors.end(), tail.divisors.begin(), tail.divisors.end());
    return out;
}

}  // namespace clusterpic
