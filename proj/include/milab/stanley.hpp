#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milab/monomial.hpp"

namespace milab {

enum class Side { quotient, ideal };

inline std::string side_tag(Side s) { return s == Side::quotient ? "quotient" : "ideal"; }

// All exponent vectors below the cap g on one side of the ideal (in it or
// out of it), ordered componentwise. rho(b) counts coordinates at the cap.
struct CharacteristicPoset {
    std::vector<int> g;
    Side side = Side::quotient;
    std::vector<std::vector<int>> points;  // sorted by (total degree, lex)
    std::vector<int> rho;                  // per point
    std::vector<int32_t> grid;             // mixed-radix grid index -> point index or -1
    std::vector<long> radix;               // strides for the grid

    int size() const { return static_cast<int>(points.size()); }
    long grid_index(const std::vector<int>& e) const {
        long idx = 0;
        for (size_t j = 0; j < e.size(); ++j) idx += radix[j] * e[j];
        return idx;
    }
    // point index, or -1 when the vector is off the grid or the other side
    int point_at(const std::vector<int>& e) const {
        if (e.size() != g.size()) return -1;
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] < 0 || e[j] > g[j]) return -1;
        return grid[grid_index(e)];
    }
    bool leq(int a, int b) const {
        for (size_t j = 0; j < g.size(); ++j)
            if (points[a][j] > points[b][j]) return false;
        return true;
    }
};

CharacteristicPoset characteristic_poset(const MonomialIdeal& ideal, Side side,
                                         const std::optional<Monomial>& g_extension = {},
                                         long grid_budget = 1'000'000);

// Disjoint intervals [a, b] (point indices) covering the whole poset;
// value = min over intervals of rho(b).
struct IntervalPartition {
    std::vector<std::pair<int, int>> intervals;
    int value = 0;
};

// Complete backtracking search for a partition whose interval tops all have
// rho >= k; nullopt is an exact absence verdict. Throws BudgetExceededError
// when the expansion cap is hit.
std::optional<IntervalPartition> exists_partition_with_min_rho(const CharacteristicPoset& p, int k,
                                                               long long budget = 100'000'000);

struct SdepthResult {
    int value = 0;
    IntervalPartition certificate;
};

SdepthResult sdepth(const CharacteristicPoset& p, long long budget = 100'000'000);
SdepthResult sdepth(const MonomialIdeal& ideal, Side side, long long budget = 100'000'000);
int spdim(const MonomialIdeal& ideal, Side side, long long budget = 100'000'000);

struct StanleySpace {
    Monomial generator;
    std::vector<int> var_indices;  // the Z of K[Z]
};

struct StanleyDecomposition {
    std::vector<StanleySpace> spaces;
};

StanleyDecomposition partition_to_stanley_decomposition(const CharacteristicPoset& p, const IntervalPartition& part);

struct PartitionDiagnostics {
    bool ok = false;
    std::string problem;                      // empty when ok
    std::optional<std::vector<int>> witness;  // clashing or missing point
    int value = 0;                            // min rho over interval tops
};

PartitionDiagnostics verify_partition(const CharacteristicPoset& p, const IntervalPartition& part);

}  // namespace milab
