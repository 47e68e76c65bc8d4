#pragma once

// Exact maximisation of weight products over cross-t-intersecting tuples.
//
// The engine enumerates closed pairs (mutually compatible maximal
// configurations, i.e. maximal bicliques of the compatibility relation)
// by canonical closure generation, pruning subtrees whose attainable
// weight product cannot reach the best value found. A brute-force path
// over explicit subsets serves as the independent oracle.
//
// Reduction used throughout (tested against the oracle): with strictly
// positive weights, enlarging one side of a cross-t-intersecting pair to
// the full set of members compatible with the other side never decreases
// the product, so every maximizer with positive value is a closed pair.

#include "crosstint/setfam.hpp"
#include "crosstint/weights.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace crosstint {

// Fixed-width bit vector; wide enough for any family used as a search side.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t width, bool ones = false);

    std::size_t width() const { return width_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    std::size_t count() const;
    bool any() const;
    BitVec& operator&=(const BitVec& other);
    bool is_subset_of(const BitVec& other) const;
    std::vector<std::uint32_t> to_indices() const;
    // Applies fn to every set index in ascending order.
    void for_each(const std::function<void(std::size_t)>& fn) const;
    // First set index at or after from; width() when none.
    std::size_t next_set(std::size_t from) const;

    bool operator==(const BitVec&) const = default;
    std::strong_ordering operator<=>(const BitVec& other) const;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

inline BitVec operator&(BitVec a, const BitVec& b) {
    a &= b;
    return a;
}

enum class SearchMethod { Concept, BruteForce };

enum class Side { Left, Right };

// The t-intersection compatibility relation between two families.
struct CompatRelation {
    Family left, right;
    int t = 0;
    std::vector<BitVec> rows;  // per left member: compatible right members
    std::vector<BitVec> cols;  // per right member: compatible left members

    static CompatRelation between(Family left, Family right, int t);
};

// All members on the opposite side compatible with every member of sub;
// the entire opposite side when sub is empty.
Family compat(const CompatRelation& rel, const Family& sub, Side side);

// ---------------------------------------------------------------------
// Index-level engine. Works on a tuple of abstract sides so that labeled
// sets and multisets reuse it unchanged.
// ---------------------------------------------------------------------

struct ProductInstance {
    std::vector<std::size_t> sizes;                    // k sides
    std::vector<std::vector<std::vector<BitVec>>> rel; // rel[a][b][i]: over side b
    std::vector<std::vector<Rat>> weights;             // positive

    std::size_t k() const { return sizes.size(); }

    static ProductInstance from_families(const std::vector<Family>& fams, int t,
                                         const std::vector<WeightFn>& weights);
    static ProductInstance from_predicate(
        const std::vector<std::size_t>& sizes,
        const std::function<bool(std::size_t, std::size_t, std::size_t, std::size_t)>& compatible,
        const std::vector<std::vector<Rat>>& weights);
};

struct IndexTuple {
    std::vector<std::vector<std::uint32_t>> sides;  // chosen member indices per side
    Rat value;
};

struct IndexReport {
    Rat max_value = 0;
    std::vector<IndexTuple> maximizers;  // canonically ordered, all attaining max
    std::uint64_t nodes = 0;
    SearchMethod method = SearchMethod::Concept;
    bool truncated = false;
};

inline constexpr std::size_t kMaximizerCap = 10000;
inline constexpr std::size_t kBruteForceSideCap = 14;
inline constexpr std::size_t kFamilyCountCap = 4;

// Exact maximum of the k-fold weight product over cross-compatible tuples.
IndexReport search_product(const ProductInstance& inst, SearchMethod method);

// Maximum-weight clique in a symmetric compatibility graph (self-loops
// mark admissible vertices). Branch and bound with a remaining-weight
// bound; reports every maximum clique up to the cap.
IndexReport search_max_clique(const std::vector<BitVec>& adjacency, const std::vector<bool>& admissible,
                              const std::vector<Rat>& weights);

// ---------------------------------------------------------------------
// Family-level operations.
// ---------------------------------------------------------------------

struct ClosedPair {
    Family a, b;
    Rat value;
};

struct SearchReport {
    Rat max_value = 0;
    std::vector<ClosedPair> maximizers;
    std::uint64_t nodes = 0;
    SearchMethod method = SearchMethod::Concept;
    bool truncated = false;
};

// Maximum of g(A) h(B) over cross-t-intersecting A in G, B in H.
SearchReport max_product_pair(const Family& G, const Family& H, int t, const WeightFn& gw,
                              const WeightFn& hw);

// Exhaustive oracle; refuses sides larger than kBruteForceSideCap.
SearchReport brute_force_pair(const Family& G, const Family& H, int t, const WeightFn& gw,
                              const WeightFn& hw);

struct CliqueReport {
    Rat max_value = 0;
    std::vector<Family> maximizers;
    std::uint64_t nodes = 0;
    bool truncated = false;
};

// Maximum total weight of a t-intersecting subfamily of F.
CliqueReport max_t_intersecting(const Family& F, int t, const WeightFn& w);

struct TupleReport {
    Rat max_value = 0;
    std::vector<std::vector<Family>> maximizers;
    std::uint64_t nodes = 0;
    SearchMethod method = SearchMethod::Concept;
    bool truncated = false;
};

// k-family product search. The brute-force path enumerates subsets of the
// first k-1 families and closes the last; it refuses more than
// kFamilyCountCap families or sides above kBruteForceSideCap.
TupleReport k_family_search(const std::vector<Family>& fams, int t, const std::vector<WeightFn>& weights,
                            SearchMethod method = SearchMethod::Concept);

}  // namespace crosstint
