#include "crosstint/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace crosstint {

ReductionProfile::ReductionProfile(long m_, long n_, long r_, long s_, int t_, Rat u_)
    : m(m_), n(n_), r(r_), s(s_), t(t_), u(std::move(u_)) {
    if (t < 1 || r < t || s < r)
        throw std::invalid_argument("reduction profile needs 1 <= t <= r <= s");
    if (u < 0) throw std::invalid_argument("u must be >= 0");
}

Int thm_nrs_bound(const ReductionProfile& p) {
    return binom(p.m - p.t, p.r - p.t) * binom(p.n - p.t, p.s - p.t);
}

Rat thm_nrs_threshold(long r, long s, int t, const Rat& u) {
    return (Rat(t) + u + 2) * Rat(s - t) + Rat(r - 1);
}

Int thm_nrs_min_ground(long r, long s, int t, const Rat& u) {
    return ceil_rat(thm_nrs_threshold(r, s, t, u));
}

Int thm_seq_bound(const IPSequence& c, const IPSequence& d, int r, int s, int t) {
    if (t < 1 || r < t || s < t || r > c.length() || s > d.length())
        throw std::invalid_argument("thm_seq_bound: need t <= r <= m, t <= s <= n");
    auto tail_star = [](const IPSequence& caps, int size, int t_) {
        // sum over (size-t)-subsets I of [t+1, length] of prod_{i in I} c_i
        int n = caps.length();
        int need = size - t_;
        std::vector<Int> esym(static_cast<std::size_t>(need) + 1, 0);
        esym[0] = 1;
        for (int x = t_ + 1; x <= n; ++x)
            for (int k = need; k >= 1; --k)
                esym[static_cast<std::size_t>(k)] += esym[static_cast<std::size_t>(k - 1)] * caps.cap(x);
        return esym[static_cast<std::size_t>(need)];
    };
    return tail_star(c, r, t) * tail_star(d, s, t);
}

Int thm_multi_bound(long m, long n, long r, long s, int t) {
    return binom(m + r - t - 1, r - t) * binom(n + s - t - 1, s - t);
}

Rat thm_multi_threshold(long r, long s, int t, const Rat& u) {
    return (Rat(t) + u + 1) * Rat(s - t) + Rat(r - t);
}

Int thm_multi_min_ground(long r, long s, int t, const Rat& u) {
    return ceil_rat(thm_multi_threshold(r, s, t, u));
}

KFamilyBound k_family_bound(const std::vector<std::pair<long, long>>& profiles, int t, const Rat& u) {
    if (profiles.size() < 2) throw std::invalid_argument("k_family_bound: need k >= 2 profiles");
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        long r = profiles[i].second;
        if (r < t || (i > 0 && r < profiles[i - 1].second))
            throw std::invalid_argument("k_family_bound: need t <= r_1 <= ... <= r_k");
    }
    KFamilyBound out;
    out.bound = 1;
    long min_n = profiles.front().first;
    for (auto [n, r] : profiles) {
        out.bound *= binom(n - t, r - t);
        min_n = std::min(min_n, n);
    }
    long r_k = profiles.back().second;
    long r_km1 = profiles[profiles.size() - 2].second;
    out.threshold = (Rat(t) + u + 2) * Rat(r_k - t) + Rat(r_km1 - 1);
    out.threshold_ok = Rat(min_n) >= out.threshold;
    return out;
}

Int frankl_size(long n, long r, int t, int i, int j) {
    long w = t + i + j;
    Int total = 0;
    for (long a = t + i; a <= std::min(w, r); ++a) total += binom(w, a) * binom(n - w, r - a);
    return total;
}

Int seq_frankl_size(const IPSequence& c, int r, int t, int i, int j) {
    int n = c.length();
    int w = t + i + j;
    if (w > n) throw std::invalid_argument("seq_frankl_size: t+i+j exceeds sequence length");
    // Choose the first-level window positions F (|F| = a >= t+i), then the
    // remaining r-a positions with a non-window-first-level value each:
    // in-window positions contribute c_e - 1 choices, outside ones c_e.
    Int total = 0;
    for (int a = t + i; a <= std::min(w, r); ++a) {
        // Sum over F in C([w], a) and E in C([n] \ F, r - a) of the value
        // products; iterate F explicitly, then an elementary symmetric sum
        // handles E.
        for (const SetBits& f : gen_k_subsets(w, a)) {
            int need = r - a;
            std::vector<Int> esym(static_cast<std::size_t>(need) + 1, 0);
            esym[0] = 1;
            for (int x = 1; x <= n; ++x) {
                if (x <= w && f.contains(x)) continue;
                Int mult = x <= w ? c.cap(x) - 1 : c.cap(x);
                for (int k = need; k >= 1; --k)
                    esym[static_cast<std::size_t>(k)] += esym[static_cast<std::size_t>(k - 1)] * mult;
            }
            total += esym[static_cast<std::size_t>(need)];
        }
    }
    return total;
}

Int multi_frankl_size(long n, long r, int t, int i, int j) {
    long w = t + i + j;
    Int total = 0;
    for (long a = t + i; a <= std::min({w, r, n}); ++a)
        total += binom(w, a) * binom(n + r - w - 1, r - a);
    return total;
}

namespace {

template <typename SizeFn>
ConjectureMax conjecture_max_impl(long min_ground, int t, SizeFn product_at) {
    ConjectureMax out;
    out.value = 0;
    for (int i = 0; t + i <= min_ground; ++i) {
        for (int j = 0; t + i + j <= min_ground; ++j) {
            Int v = product_at(i, j);
            if (v > out.value) {
                out.value = v;
                out.argmax.clear();
            }
            if (v == out.value) out.argmax.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace

ConjectureMax conjecture_max_sets(long m, long n, long r, long s, int t) {
    return conjecture_max_impl(std::min(m, n), t, [&](int i, int j) {
        return frankl_size(m, r, t, i, j) * frankl_size(n, s, t, j, i);
    });
}

ConjectureMax conjecture_max_seq(const IPSequence& c, const IPSequence& d, int r, int s, int t) {
    long min_ground = std::min(c.length(), d.length());
    return conjecture_max_impl(min_ground, t, [&](int i, int j) {
        return seq_frankl_size(c, r, t, i, j) * seq_frankl_size(d, s, t, j, i);
    });
}

ConjectureMax conjecture_max_multi(long m, long n, long r, long s, int t) {
    return conjecture_max_impl(std::min(m, n), t, [&](int i, int j) {
        return multi_frankl_size(m, r, t, i, j) * multi_frankl_size(n, s, t, j, i);
    });
}

Remark2Example build_remark2(int n, int t, int x) {
    if (!(1 <= x && x < t && t <= n - 2))
        throw std::invalid_argument("remark2 needs 1 <= x < t <= n-2");
    Remark2Example out;
    out.n = n;
    out.t = t;
    out.x = x;
    std::vector<SetBits> members;
    SetBits window = SetBits::interval(n, 1, t + 2);
    for (const SetBits& a : power_set(n))
        if (a.intersection_size(window) >= t + 1) members.push_back(a);
    out.family = Family::of(n, std::move(members));
    out.weight = WeightSpec::geometric(Rat(x));
    out.side_value = rat_pow(Rat(x + 1), n - t - 2) * Rat(t * x + 2 * x + 1);
    out.star_value = rat_pow(Rat(x + 1), n - t);
    out.pair_product = out.side_value * out.side_value;
    out.star_product = out.star_value * out.star_value;
    out.margin = out.pair_product - out.star_product;
    return out;
}

SeqLowCapExample build_seq_lowcap(int n, int t, int x) {
    if (!(x + 1 < t + 1 && n >= t + 2))
        throw std::invalid_argument("seq-lowcap needs caps x+1 < t+1 and n >= t+2");
    SeqLowCapExample out;
    out.n = n;
    out.t = t;
    out.x = x;
    IPSequence c = IPSequence::constant(n, x + 1);
    IPSequence d = IPSequence::constant(n, t + 1);
    auto window_family = [&](const IPSequence& caps) {
        std::vector<LabeledSet> members;
        for (const LabeledSet& a : gen_labeled(caps, n).members) {
            int first_level_in_window = 0;
            for (int pos = 1; pos <= t + 2; ++pos)
                if (a.contains(pos, 1)) ++first_level_in_window;
            if (first_level_in_window >= t + 1) members.push_back(a);
        }
        return LabeledFamily::of(caps, n, std::move(members));
    };
    out.a = window_family(c);
    out.b = window_family(d);
    auto ipow = [](long base, int e) {
        Int v = 1;
        for (int k = 0; k < e; ++k) v *= base;
        return v;
    };
    out.a_size_closed_form = ipow(x + 1, n - t - 2) * (static_cast<long>(t) * x + 2 * x + 1);
    out.a_star = ipow(x + 1, n - t);
    out.b_size_closed_form = ipow(t + 1, n - t);
    out.b_star = ipow(t + 1, n - t);
    out.pair_product = out.a_size_closed_form * out.b_size_closed_form;
    out.star_product = out.a_star * out.b_star;
    return out;
}

MultiLowNExample build_multi_lown(int n, int t, int r) {
    if (!(n < t * (r - t) + 2))
        throw std::invalid_argument("multi-lown needs n < t(r-t) + 2");
    if (t + 2 > n) throw std::invalid_argument("multi-lown needs n >= t+2");
    MultiLowNExample out;
    out.n = n;
    out.t = t;
    out.r = r;
    SetBits window = SetBits::interval(n, 1, t + 2);
    for (const MultisetSeq& a : gen_multisets(n, r))
        if (support(a).intersection_size(window) >= t + 1) out.family.push_back(a);
    out.size_closed_form = Int(t + 2) * binom(n + r - t - 3, r - t - 1) + binom(n + r - t - 3, r - t - 2);
    out.star_count = binom(n + r - t - 1, r - t);
    out.pair_product = out.size_closed_form * out.size_closed_form;
    out.star_product = out.star_count * out.star_count;
    return out;
}

bool product_trick_holds(const std::vector<Int>& values) {
    const std::size_t k = values.size();
    Int prod = 1;
    for (const Int& v : values) prod *= v;
    Int lhs = 1;
    for (std::size_t e = 0; e + 1 < k; ++e) lhs *= prod;  // prod^(k-1)
    Int rhs = 1;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) rhs *= values[i] * values[j];
    return lhs == rhs;
}

}  // namespace crosstint
