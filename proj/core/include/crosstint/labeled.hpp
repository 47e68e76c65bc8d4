#pragma once

// Labeled sets over IP capacity sequences, the value-to-first-level
// compression and its full cascade, and the projection that reduces
// labeled-set problems to weighted set problems.

#include "crosstint/setfam.hpp"
#include "crosstint/weights.hpp"

#include <span>
#include <utility>
#include <vector>

namespace crosstint {

// Increasing positive capacity sequence (c_1, ..., c_n).
class IPSequence {
public:
    IPSequence() = default;
    explicit IPSequence(std::vector<int> caps);
    static IPSequence constant(int n, int cap);

    int length() const { return static_cast<int>(caps_.size()); }
    int cap(int position) const { return caps_.at(static_cast<std::size_t>(position - 1)); }
    int max_cap() const { return caps_.empty() ? 0 : caps_.back(); }
    const std::vector<int>& caps() const { return caps_; }
    bool operator==(const IPSequence&) const = default;

private:
    std::vector<int> caps_;
};

// A set of (position, value) pairs with pairwise distinct positions,
// stored sorted by position.
class LabeledSet {
public:
    LabeledSet() = default;
    explicit LabeledSet(std::vector<std::pair<int, int>> pairs);

    int size() const { return static_cast<int>(pairs_.size()); }
    bool empty() const { return pairs_.empty(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    bool contains(int x, int y) const;
    int value_at(int x) const;  // 0 when position absent
    bool subset_of(const LabeledSet& other) const;
    int intersection_size(const LabeledSet& other) const;  // common pairs
    bool valid_against(const IPSequence& caps) const;
    std::string to_string() const;  // "(1,2)(3,1)"

    auto operator<=>(const LabeledSet&) const = default;

private:
    std::vector<std::pair<int, int>> pairs_;
};

// [t] x [1] = {(1,1), ..., (t,1)}.
LabeledSet first_level_prefix(int t);

// Ordered duplicate-free labeled sets, all valid against one capacity
// sequence, of size r (or mixed sizes <= r).
struct LabeledFamily {
    IPSequence caps;
    int r = 0;
    std::vector<LabeledSet> members;  // canonically sorted, duplicate-free

    static LabeledFamily of(IPSequence caps, int r, std::vector<LabeledSet> members);
    std::size_t size() const { return members.size(); }
    bool contains(const LabeledSet& s) const;
    bool operator==(const LabeledFamily&) const = default;
};

// All labeled sets of size r valid against caps.
LabeledFamily gen_labeled(const IPSequence& caps, int r);

// Members containing T.
LabeledFamily labeled_star(const LabeledFamily& fam, const LabeledSet& T);

// Sends (x, y) to (x, 1) when present; y >= 2 required.
LabeledSet gamma(const LabeledSet& a, int x, int y);

// Family-level compression: image plus members whose image is present.
LabeledFamily gamma_compress(const LabeledFamily& fam, int x, int y);

// The full cascade over x = 1..l, y = 2..h with l = max ground length and
// h = max cap, applied to all families simultaneously. Inputs must be
// cross-t-intersecting (plain set intersection of pairs); afterwards every
// cross pair meets in >= t first-level pairs.
std::vector<LabeledFamily> gamma_cascade(std::vector<LabeledFamily> fams, int t);

bool labeled_cross_t_intersecting(std::span<const LabeledFamily> fams, int t);

// Projection weight of the labeled family onto first-level supports:
// w(A) = #{L in S_{c,r} : L has first-level support exactly A}. The domain
// is C([n], <= r) shrunk to the sets with positive count; full_domain
// records whether anything was dropped (always full when c_1 >= 2).
struct ProjectionWeight {
    WeightFn weight;
    bool full_domain = true;
};
ProjectionWeight projection_weight(const IPSequence& caps, int r);

// First-level supports of the members, as a set family over [n].
Family project_to_sets(const LabeledFamily& fam);

// Embeds labeled sets into subsets of a (position, value) grid so that the
// pair-set intersection size becomes a bitset intersection size. Grid cell
// (x, y) becomes element (x-1)*h + y of a ground set of size l*h.
Family encode_on_grid(const LabeledFamily& fam, int l, int h);
LabeledSet decode_from_grid(const SetBits& set, int h);

}  // namespace crosstint
