#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "milab/error.hpp"

namespace milab {

// Exponent vector of a monomial; length = ambient variable count.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int nvars() const { return static_cast<int>(exps.size()); }
    bool is_unit() const {
        for (int e : exps)
            if (e != 0) return false;
        return true;
    }
    bool divides(const Monomial& other) const {
        if (exps.size() != other.exps.size()) return false;
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }
    Monomial lcm_with(const Monomial& other) const {
        Monomial r = *this;
        for (size_t i = 0; i < exps.size(); ++i)
            if (other.exps[i] > r.exps[i]) r.exps[i] = other.exps[i];
        return r;
    }
    long total_degree() const {
        long d = 0;
        for (int e : exps) d += e;
        return d;
    }
    bool is_squarefree() const {
        for (int e : exps)
            if (e > 1) return false;
        return true;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps <=> b.exps; }
};

// Dense row-major bit matrix; row i is the set bits over column index.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(static_cast<size_t>(rows) * words_per_row_, 0) {}

    bool get(int r, int c) const { return (bits_[static_cast<size_t>(r) * words_per_row_ + c / 64] >> (c % 64)) & 1u; }
    void set(int r, int c) { bits_[static_cast<size_t>(r) * words_per_row_ + c / 64] |= uint64_t(1) << (c % 64); }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return words_per_row_; }
    const uint64_t* row(int r) const { return bits_.data() + static_cast<size_t>(r) * words_per_row_; }
    uint64_t* row(int r) { return bits_.data() + static_cast<size_t>(r) * words_per_row_; }

private:
    int rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<uint64_t> bits_;
};

// Finite poset on nodes 0..n-1 with the full reflexive-transitive comparability
// table stored densely (up-sets and down-sets as bit rows).
class FinitePoset {
public:
    FinitePoset() = default;

    // Reflexive-transitive closure of the given strict generators.
    // Throws CycleDetected if the closure would violate antisymmetry.
    static FinitePoset from_relations(int n, const std::vector<std::pair<int, int>>& relations);

    // Adopts a relation already known to be reflexive+transitive+antisymmetric
    // (checked).
    static FinitePoset from_leq(int n, const BitMatrix& leq);

    int size() const { return n_; }
    bool leq(int a, int b) const { return up_.get(a, b); }
    bool less(int a, int b) const { return a != b && up_.get(a, b); }

    const BitMatrix& up() const { return up_; }      // row a = {b : a <= b}
    const BitMatrix& down() const { return down_; }  // row a = {b : b <= a}

    const std::vector<std::vector<int>>& upper_covers() const { return covers_up_; }
    const std::vector<std::vector<int>>& lower_covers() const { return covers_dn_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<Monomial>& labels() const { return labels_; }
    void set_labels(std::vector<Monomial> labels);
    const Monomial& label(int a) const { return labels_.at(a); }

    // Induced subposet on `keep` (ascending node ids); keep[i] becomes node i.
    FinitePoset induced(const std::vector<int>& keep) const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

private:
    void finalize();  // covers from the table

    int n_ = 0;
    BitMatrix up_, down_;
    std::vector<std::vector<int>> covers_up_, covers_dn_;
    std::vector<Monomial> labels_;
};

// Maximal number of strict steps in a chain; EmptyPoset on the empty poset.
int length(const FinitePoset& p);

// Finite lattice: poset plus verified total meet/join tables, bottom, atoms.
class FiniteLattice {
public:
    FiniteLattice() = default;

    // Verifies every pair has a unique meet and join; NotALattice(pair) otherwise.
    static FiniteLattice from_poset(FinitePoset p);

    const FinitePoset& poset() const { return poset_; }
    int size() const { return poset_.size(); }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * size() + b]; }
    int join(int a, int b) const { return join_[static_cast<size_t>(a) * size() + b]; }
    const std::vector<int>& atoms() const { return atoms_; }
    bool atomistic() const { return atomistic_; }

    // Number of atoms below a; UnknownElement if a is out of range.
    int rank(int a) const;

    // Atoms below a, as a bitmask over atom list positions (atom count <= 64).
    uint64_t atom_support(int a) const;

    // All a such that a = b ∧ c forces a ∈ {b, c}.
    std::vector<int> meet_irreducibles() const;
    bool is_meet_irreducible(int a) const;

    // Induced sublattice without node a (a meet-irreducible, a != bottom);
    // rebuilt tables are re-validated. orig, if given, receives the original
    // node id of each new node.
    FiniteLattice remove_element(int a, std::vector<int>* orig = nullptr) const;

    // Induced subposet relabeled to a lattice; NotALattice if it fails.
    FiniteLattice induced_sublattice(const std::vector<int>& keep, std::vector<int>* orig = nullptr) const;

private:
    FinitePoset poset_;
    std::vector<int> meet_, join_;
    int bottom_ = -1, top_ = -1;
    std::vector<int> atoms_;
    bool atomistic_ = false;
};

int rank(const FiniteLattice& l, int a);

// Simplicial complex: faces grouped by cardinality; faces_by_card[0] = {{}}
// always (the empty face), faces_by_card[k] = sorted k-subsets of vertices.
struct SimplicialComplexData {
    int vertex_count = 0;
    std::vector<std::vector<std::vector<int>>> faces_by_card;

    // Validates downward closure and the presence of the empty face.
    static SimplicialComplexData from_faces(int vertex_count, std::vector<std::vector<int>> faces);
    // Downward closure of the given facets.
    static SimplicialComplexData closure(int vertex_count, const std::vector<std::vector<int>>& facets);

    int dim() const { return static_cast<int>(faces_by_card.size()) - 2; }
    long face_count() const {
        long c = 0;
        for (auto& fs : faces_by_card) c += static_cast<long>(fs.size());
        return c;
    }
    SimplicialComplexData cone() const;
};

// Order complex of the open interval (0̂, m): vertices are elements strictly
// between bottom and m, faces are the chains. BottomExcluded if m = bottom.
SimplicialComplexData open_lower_complex(const FiniteLattice& l, int m);

// All intersections of subfamilies of B inside 2^{0..n-1}; the empty
// subfamily contributes the full set. Returned ordered by inclusion with
// 0/1 exponent-vector labels; `subsets` receives the member per node.
FiniteLattice meet_closure(int atom_count, const std::vector<uint64_t>& b_family,
                           std::vector<uint64_t>* subsets = nullptr);

// Canonical byte string: equal strings iff order-isomorphic. Encoding "MP1:".
std::string canonical_form(const FinitePoset& p);
bool is_isomorphic(const FinitePoset& p, const FinitePoset& q);

struct DecreasingRankChain {
    std::vector<FiniteLattice> lattices;            // L_0 = L down to L_r
    std::vector<std::vector<int>> original_ids;     // per step: node -> id in L_0
    std::vector<int> removed;                       // ids in L_0, removal order
};

// Removes L \ M one element at a time by weakly decreasing rank (ties by
// ascending node id), validating each step. M must contain bottom and top and
// be closed under meets.
DecreasingRankChain decreasing_rank_chain(const FiniteLattice& l, const std::vector<int>& m_nodes);

// Boolean algebra on k atoms, nodes ordered by (popcount, value).
FiniteLattice boolean_lattice(int k);

}  // namespace milab
