#pragma once

// Closed-form extremal bounds, hypothesis thresholds, conjectured maxima
// over the two-parameter extremal families, and the three counterexample
// constructions.

#include "crosstint/labeled.hpp"
#include "crosstint/multiset.hpp"
#include "crosstint/setfam.hpp"
#include "crosstint/weights.hpp"

#include <utility>
#include <vector>

namespace crosstint {

struct ReductionProfile {
    long m = 0, n = 0, r = 0, s = 0;
    int t = 1;
    Rat u = 0;
    long p_window() const { return r + s - t; }

    ReductionProfile(long m_, long n_, long r_, long s_, int t_, Rat u_);
};

// C(m-t, r-t) C(n-t, s-t).
Int thm_nrs_bound(const ReductionProfile& profile);

// (t+u+2)(s-t) + r - 1, exact.
Rat thm_nrs_threshold(long r, long s, int t, const Rat& u);
// Least integer ground size satisfying the hypothesis.
Int thm_nrs_min_ground(long r, long s, int t, const Rat& u);

// Product of the two sum-of-products star counts over the tails of c and d.
Int thm_seq_bound(const IPSequence& c, const IPSequence& d, int r, int s, int t);

// C(m+r-t-1, r-t) C(n+s-t-1, s-t).
Int thm_multi_bound(long m, long n, long r, long s, int t);

// (t+u+1)(s-t) + r - t, exact.
Rat thm_multi_threshold(long r, long s, int t, const Rat& u);
Int thm_multi_min_ground(long r, long s, int t, const Rat& u);

struct KFamilyBound {
    Int bound;
    bool threshold_ok = false;
    Rat threshold;  // (t+u+2)(r_k - t) + r_{k-1} - 1
};

// profiles = (n_i, r_i) pairs; requires t <= r_1 <= ... <= r_k.
KFamilyBound k_family_bound(const std::vector<std::pair<long, long>>& profiles, int t, const Rat& u);

// Sizes of the window families behind the conjectured complete solutions.
Int frankl_size(long n, long r, int t, int i, int j);                       // r-sets
Int seq_frankl_size(const IPSequence& c, int r, int t, int i, int j);       // labeled sets
Int multi_frankl_size(long n, long r, int t, int i, int j);                 // multisets

enum class ConjectureKind { Sets, Seq, Multi };

struct ConjectureMax {
    Int value;
    std::vector<std::pair<int, int>> argmax;  // all attaining (i, j), lexicographic
};

ConjectureMax conjecture_max_sets(long m, long n, long r, long s, int t);
ConjectureMax conjecture_max_seq(const IPSequence& c, const IPSequence& d, int r, int s, int t);
ConjectureMax conjecture_max_multi(long m, long n, long r, long s, int t);

// Weighted pair over 2^[n] beating the star product when the decay factor
// x = t+u drops below t: A = B = {A : |A intersect [t+2]| >= t+1} with
// geometric weights x^(n-|A|).
struct Remark2Example {
    int n = 0, t = 0, x = 0;
    Family family;          // both sides
    WeightSpec weight;      // geometric(x)
    Rat side_value;         // (x+1)^(n-t-2) (tx + 2x + 1)
    Rat star_value;         // (x+1)^(n-t)
    Rat pair_product;       // side_value^2
    Rat star_product;       // star_value^2
    Rat margin;             // pair_product - star_product
};
Remark2Example build_remark2(int n, int t, int x);

// Labeled-set pair with caps x+1 < t+1 on one side and t+1 on the other,
// r = s = n, beating the labeled star product.
struct SeqLowCapExample {
    int n = 0, t = 0, x = 0;
    LabeledFamily a, b;
    Int a_size_closed_form;  // (x+1)^(n-t-2) (tx + 2x + 1)
    Int a_star;              // (x+1)^(n-t)
    Int b_size_closed_form;  // (t+1)^(n-t)
    Int b_star;              // (t+1)^(n-t)
    Int pair_product;
    Int star_product;
};
SeqLowCapExample build_seq_lowcap(int n, int t, int x);

// Multiset family on a ground below the threshold, r = s, m = n,
// A = {A in M_{n,r} : |S_A intersect [t+2]| >= t+1}.
struct MultiLowNExample {
    int n = 0, t = 0, r = 0;
    std::vector<MultisetSeq> family;  // both sides
    Int size_closed_form;             // (t+2) C(n+r-t-3, r-t-1) + C(n+r-t-3, r-t-2)
    Int star_count;                   // C(n+r-t-1, r-t)
    Int pair_product;
    Int star_product;
};
MultiLowNExample build_multi_lown(int n, int t, int r);

// The k-family product identity behind the pairwise reduction:
// (prod a_i)^(k-1) == prod over i < j of a_i a_j.
bool product_trick_holds(const std::vector<Int>& values);

}  // namespace crosstint
