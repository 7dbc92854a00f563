#include "milab/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace milab {

FieldSpec FieldSpec::prime(int p) {
    if (p < 2) fail(Errc::syntax_error, "field characteristic must be prime");
    for (int d = 2; static_cast<long>(d) * d <= p; ++d)
        if (p % d == 0) fail(Errc::syntax_error, std::to_string(p) + " is not prime");
    return {p};
}

FieldSpec FieldSpec::parse(const std::string& tag) {
    if (tag == "q" || tag == "Q" || tag == "0") return rational();
    if (tag.rfind("fp:", 0) == 0) {
        try {
            return prime(std::stoi(tag.substr(3)));
        } catch (const Error&) {
            throw;
        } catch (...) {
        }
    }
    fail(Errc::syntax_error, "bad field tag '" + tag + "' (expected q or fp:<p>)");
}

namespace {

struct Int64Overflow {};

// Sparse exact elimination for boundary-style matrices. Pivots are restricted
// to ±1 entries (over a prime field: any nonzero entry), so every row update
// stays integral with no division; columns that end up without a unit entry
// are deferred to a dense fraction-free pass on the residual. int64 overflow
// anywhere restarts the whole computation in arbitrary precision.
struct SparseElimination {
    int rows, cols;
    long long p;  // 0 = rationals
    std::vector<std::map<int, long long>> row;
    std::vector<std::set<int>> col_rows;
    std::vector<char> row_used;

    SparseElimination(const SparseIntMatrix& m, long long p) : rows(m.rows), cols(m.cols), p(p) {
        row.resize(rows);
        col_rows.resize(cols);
        row_used.assign(rows, 0);
        for (int c = 0; c < cols; ++c)
            for (auto [r, v] : m.col_entries[c]) {
                long long val = p ? ((v % p) + p) % p : v;
                if (val == 0) continue;
                row[r][c] = val;
                col_rows[c].insert(r);
            }
    }

    void set_entry(int r, int c, long long v) {
        if (v == 0) {
            row[r].erase(c);
            col_rows[c].erase(r);
        } else {
            if (row[r].emplace(c, v).second) col_rows[c].insert(r);
            else row[r][c] = v;
        }
    }

    long long reduce(long long v) const { return p ? ((v % p) + p) % p : v; }

    // r -= f * pivot_row
    void eliminate_row(int r, int pr, long long f) {
        for (auto [c, v] : row[pr]) {
            long long cur = 0;
            auto it = row[r].find(c);
            if (it != row[r].end()) cur = it->second;
            long long prod, next;
            if (__builtin_mul_overflow(f, v, &prod)) throw Int64Overflow{};
            if (__builtin_sub_overflow(cur, prod, &next)) throw Int64Overflow{};
            set_entry(r, c, reduce(next));
        }
    }

    int run() {
        int rank = 0;
        std::vector<int> deferred;
        for (int c = 0; c < cols; ++c) {
            int pr = -1;
            size_t best = 0;
            bool unit_found = false;
            for (int r : col_rows[c]) {
                if (row_used[r]) continue;
                long long v = row[r].at(c);
                bool unit = p ? true : (v == 1 || v == -1);
                if (!unit) continue;
                if (pr < 0 || row[r].size() < best) {
                    pr = r;
                    best = row[r].size();
                }
                unit_found = true;
            }
            if (!unit_found) {
                bool live = false;
                for (int r : col_rows[c])
                    if (!row_used[r]) live = true;
                if (live) deferred.push_back(c);
                continue;
            }
            long long pv = row[pr].at(c);
            long long pv_inv = 1;
            if (p) {  // Fermat inverse
                long long base = pv % this->p, e = this->p - 2;
                pv_inv = 1;
                while (e) {
                    if (e & 1) pv_inv = static_cast<long long>(static_cast<__int128>(pv_inv) * base % this->p);
                    base = static_cast<long long>(static_cast<__int128>(base) * base % this->p);
                    e >>= 1;
                }
            }
            auto targets = col_rows[c];
            for (int r : targets) {
                if (r == pr || row_used[r]) continue;
                long long v = row[r].at(c);
                long long f;
                if (p) f = static_cast<long long>(static_cast<__int128>(v) * pv_inv % this->p);
                else f = (pv == 1) ? v : -v;  // pv == -1: a - (-v)(pivot) zeroes the entry
                eliminate_row(r, pr, f);
            }
            row_used[pr] = 1;
            ++rank;
        }
        if (deferred.empty()) return rank;
        // dense residual on rows never used as pivots, deferred columns only
        std::vector<int> live_rows;
        for (int r = 0; r < rows; ++r) {
            if (row_used[r]) continue;
            bool nonzero = false;
            for (int c : deferred)
                if (row[r].count(c)) {
                    nonzero = true;
                    break;
                }
            if (nonzero) live_rows.push_back(r);
        }
        std::vector<std::vector<long long>> dense(live_rows.size(), std::vector<long long>(deferred.size(), 0));
        for (size_t i = 0; i < live_rows.size(); ++i)
            for (size_t j = 0; j < deferred.size(); ++j) {
                auto it = row[live_rows[i]].find(deferred[j]);
                if (it != row[live_rows[i]].end()) dense[i][j] = it->second;
            }
        return rank + dense_residual_rank(std::move(dense));
    }

    int dense_residual_rank(std::vector<std::vector<long long>> a) const;
};

// Fraction-free Gaussian elimination; the divisions are exact. Intermediate
// entries are minors of the input, which for float-free safety are tracked in
// int64 first and retried with arbitrary precision when they escape.
int bareiss_rank_int64(std::vector<std::vector<long long>> a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    long long prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                __int128 num = static_cast<__int128>(a[r][c]) * a[rank][col] -
                               static_cast<__int128>(a[r][col]) * a[rank][c];
                __int128 q = num / prev;
                if (q > INT64_MAX || q < INT64_MIN) throw Int64Overflow{};
                a[r][c] = static_cast<long long>(q);
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

int bareiss_rank_bigint(const SparseIntMatrix& m) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols, 0));
    for (int c = 0; c < m.cols; ++c)
        for (auto [r, v] : m.col_entries[c]) a[r][c] = v;
    cpp_int prev = 1;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c)
                a[r][c] = (a[r][c] * a[rank][col] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

int SparseElimination::dense_residual_rank(std::vector<std::vector<long long>> a) const {
    if (a.empty()) return 0;
    return bareiss_rank_int64(std::move(a));
}

int modular_rank(const SparseIntMatrix& m, long long p) {
    std::vector<std::vector<long long>> a(m.rows, std::vector<long long>(m.cols, 0));
    for (int c = 0; c < m.cols; ++c)
        for (auto [r, v] : m.col_entries[c]) a[r][c] = ((v % p) + p) % p;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // normalize pivot row
        long long inv = 1, base = a[rank][col] % p, e = p - 2;
        while (e) {  // Fermat inverse
            if (e & 1) inv = static_cast<__int128>(inv) * base % p;
            base = static_cast<__int128>(base) * base % p;
            e >>= 1;
        }
        for (int c = col; c < m.cols; ++c) a[rank][c] = static_cast<__int128>(a[rank][c]) * inv % p;
        for (int r = rank + 1; r < m.rows; ++r) {
            if (a[r][col] == 0) continue;
            long long f = a[r][col];
            for (int c = col; c < m.cols; ++c)
                a[r][c] = ((a[r][c] - static_cast<__int128>(f) * a[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int rank_over(const SparseIntMatrix& m, FieldSpec field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    // tiny matrices go straight to the dense routines
    if (static_cast<long>(m.rows) * m.cols <= 64 * 64) {
        if (field.characteristic != 0) return modular_rank(m, field.characteristic);
        std::vector<std::vector<long long>> a(m.rows, std::vector<long long>(m.cols, 0));
        for (int c = 0; c < m.cols; ++c)
            for (auto [r, v] : m.col_entries[c]) a[r][c] = v;
        try {
            return bareiss_rank_int64(std::move(a));
        } catch (const Int64Overflow&) {
            return bareiss_rank_bigint(m);
        }
    }
    try {
        SparseElimination elim(m, field.characteristic);
        return elim.run();
    } catch (const Int64Overflow&) {
        return bareiss_rank_bigint(m);
    }
}

ChainComplexData boundary_matrices(const SimplicialComplexData& complex) {
    ChainComplexData cc;
    int top = static_cast<int>(complex.faces_by_card.size());
    cc.dims.resize(top);
    for (int k = 0; k < top; ++k) cc.dims[k] = static_cast<int>(complex.faces_by_card[k].size());
    if (cc.dims.empty() || cc.dims[0] != 1) fail(Errc::unknown_element, "complex must contain exactly the empty face");
    cc.boundaries.resize(top);
    for (int k = 1; k < top; ++k) {
        const auto& faces = complex.faces_by_card[k];
        const auto& below = complex.faces_by_card[k - 1];
        SparseIntMatrix b(static_cast<int>(below.size()), static_cast<int>(faces.size()));
        std::vector<int> sub;
        for (size_t f = 0; f < faces.size(); ++f) {
            sub.assign(faces[f].begin(), faces[f].end());
            for (size_t drop = 0; drop < faces[f].size(); ++drop) {
                std::vector<int> facet;
                facet.reserve(faces[f].size() - 1);
                for (size_t i = 0; i < faces[f].size(); ++i)
                    if (i != drop) facet.push_back(faces[f][i]);
                auto it = std::lower_bound(below.begin(), below.end(), facet);
                int row = static_cast<int>(it - below.begin());
                int sign = drop % 2 == 0 ? 1 : -1;
                b.col_entries[f].push_back({row, sign});
            }
        }
        cc.boundaries[k] = std::move(b);
    }
    // ∂∘∂ = 0, checked on construction
    for (int k = 2; k < top; ++k) {
        const auto& hi = cc.boundaries[k];
        const auto& lo = cc.boundaries[k - 1];
        for (int c = 0; c < hi.cols; ++c) {
            std::map<int, int> acc;
            for (auto [mid, v1] : hi.col_entries[c])
                for (auto [r, v2] : lo.col_entries[mid]) acc[r] += v1 * v2;
            for (auto [r, v] : acc)
                if (v != 0) fail(Errc::unknown_element, "boundary composition is nonzero");
        }
    }
    return cc;
}

std::map<int, long> reduced_homology_ranks(const SimplicialComplexData& complex, FieldSpec field) {
    ChainComplexData cc = boundary_matrices(complex);
    int top = static_cast<int>(cc.dims.size());
    std::vector<int> ranks(top + 1, 0);
    for (int k = 1; k < top; ++k) ranks[k] = rank_over(cc.boundaries[k], field);
    std::map<int, long> h;
    for (int k = 0; k < top; ++k) {
        int incoming = k + 1 < top ? ranks[k + 1] : 0;
        h[k - 1] = cc.dims[k] - ranks[k] - incoming;
    }
    return h;
}

bool is_acyclic(const SimplicialComplexData& complex, FieldSpec field) {
    for (auto [deg, r] : reduced_homology_ranks(complex, field))
        if (r != 0) return false;
    return true;
}

}  // namespace milab
