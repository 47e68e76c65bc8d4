#pragma once

// Ground sets, bit-packed subsets, set families, intersection predicates,
// and generators for the named families used across the library.

#include "crosstint/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace crosstint {

// One machine word per set; large enough for every desk-scale instance.
inline constexpr int kGroundCap = 62;

// A subset of [n] = {1, ..., n}. Element i occupies bit i-1.
class SetBits {
public:
    SetBits() = default;
    static SetBits empty(int ground);
    static SetBits full(int ground);
    static SetBits from_mask(int ground, std::uint64_t mask);
    static SetBits of(int ground, std::initializer_list<int> elems);
    static SetBits of(int ground, std::span<const int> elems);
    // [a, b] as a set; empty when a > b.
    static SetBits interval(int ground, int a, int b);

    int ground() const { return ground_; }
    std::uint64_t mask() const { return bits_; }
    int size() const;
    bool is_empty() const { return bits_ == 0; }
    bool contains(int element) const;
    SetBits with(int element) const;
    SetBits without(int element) const;

    bool subset_of(const SetBits& other) const { return (bits_ & ~other.bits_) == 0; }
    int intersection_size(const SetBits& other) const;
    SetBits intersect(const SetBits& other) const;

    std::vector<int> elements() const;
    std::string to_string() const;  // "{1 3 4}", "-" for the empty set

    // Canonical order: ascending numeric bitmask.
    std::strong_ordering operator<=>(const SetBits& other) const {
        if (auto c = bits_ <=> other.bits_; c != 0) return c;
        return ground_ <=> other.ground_;
    }
    bool operator==(const SetBits&) const = default;

private:
    SetBits(int ground, std::uint64_t bits) : ground_(ground), bits_(bits) {}
    int ground_ = 0;
    std::uint64_t bits_ = 0;
};

// Ordered duplicate-free collection of subsets of one ground set.
class Family {
public:
    Family() = default;
    explicit Family(int ground) : ground_(ground) {}
    // Sorts into canonical order and removes duplicates; every member must
    // carry the family's ground size.
    static Family of(int ground, std::vector<SetBits> members);
    static Family from_masks(int ground, std::span<const std::uint64_t> masks);

    int ground() const { return ground_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<SetBits>& members() const { return members_; }
    const SetBits& operator[](std::size_t i) const { return members_[i]; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(const SetBits& set) const;
    // Index of a member in canonical order; npos when absent.
    std::size_t index_of(const SetBits& set) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool operator==(const Family&) const = default;

private:
    int ground_ = 0;
    std::vector<SetBits> members_;
};

// The pair (t, u) of Theorem hypotheses; u kept exact so that the regime
// test u > (6-t)/3 is decidable.
struct IntersectionParams {
    int t = 1;
    Rat u = 0;

    IntersectionParams(int t_, Rat u_);
    bool in_paper_regime() const { return u > Rat(6 - t, 3); }
};

// All r-subsets of [n], canonically ordered.
Family gen_k_subsets(int n, int r);

// All subsets of [n] of size at most r; the power set when r = n.
Family gen_upto_r(int n, int r);

inline Family power_set(int n) { return gen_upto_r(n, n); }

// {F in fam : T subset of F}.
Family t_star(const Family& fam, const SetBits& T);

// True iff every member of one family t-intersects every member of each
// other. Vacuously true when any family is empty or fewer than two given.
// Grounds may differ; intersections are taken on common positions.
bool is_cross_t_intersecting(std::span<const Family> fams, int t);
bool is_cross_t_intersecting(const Family& a, const Family& b, int t);

// Every two members (a set paired with itself included) t-intersect.
bool is_t_intersecting(const Family& fam, int t);

// Closed under taking subsets (a union of power sets).
bool is_hereditary(const Family& fam);

// Invariant under every left-compression.
bool is_compressed(const Family& fam);

// {A in C([n], r) : |A intersect [t+i+j]| >= t+i}.
Family frankl_family(int n, int r, int t, int i, int j);

}  // namespace crosstint
