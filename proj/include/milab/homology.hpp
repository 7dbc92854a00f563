#pragma once

#include <map>
#include <string>
#include <vector>

#include "milab/error.hpp"
#include "milab/poset.hpp"

namespace milab {

// Coefficient field: the rationals (characteristic 0) or a prime field.
struct FieldSpec {
    int characteristic = 0;

    static FieldSpec rational() { return {0}; }
    static FieldSpec prime(int p);
    static FieldSpec parse(const std::string& tag);  // "q" or "fp:<p>"
    std::string tag() const { return characteristic == 0 ? "q" : "fp:" + std::to_string(characteristic); }
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Integer matrix stored sparse by columns; entries are small (boundary signs).
struct SparseIntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, int>>> col_entries;  // (row, value)

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), col_entries(c) {}
};

// Exact rank over the chosen field. Over the rationals: fraction-free Bareiss
// elimination on int64 with an automatic big-integer retry on overflow.
int rank_over(const SparseIntMatrix& m, FieldSpec field);

// Augmented chain complex of a simplicial complex: degree k-1 is spanned by
// the cardinality-k faces (k = 0 is the empty face), boundaries[k] maps
// cardinality k to k-1 with alternating signs in the fixed vertex order.
struct ChainComplexData {
    std::vector<int> dims;                     // dims[k] = #faces of cardinality k
    std::vector<SparseIntMatrix> boundaries;   // boundaries[k]: card k -> card k-1 (k >= 1)
};

ChainComplexData boundary_matrices(const SimplicialComplexData& complex);

// Reduced homology ranks, degrees -1 .. dim (all listed, zeros included).
std::map<int, long> reduced_homology_ranks(const SimplicialComplexData& complex, FieldSpec field);

bool is_acyclic(const SimplicialComplexData& complex, FieldSpec field);

}  // namespace milab
