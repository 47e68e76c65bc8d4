#include "crosstint/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace crosstint {

// ---------------------------------------------------------------------
// BitVec
// ---------------------------------------------------------------------

BitVec::BitVec(std::size_t width, bool ones) : width_(width), words_((width + 63) / 64, 0) {
    if (ones && width > 0) {
        for (auto& w : words_) w = ~std::uint64_t{0};
        if (width & 63) words_.back() &= ~std::uint64_t{0} >> (64 - (width & 63));
    }
}

std::size_t BitVec::count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVec::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

bool BitVec::is_subset_of(const BitVec& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

std::vector<std::uint32_t> BitVec::to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        for (std::uint64_t w = words_[wi]; w; w &= w - 1)
            out.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w)));
    return out;
}

void BitVec::for_each(const std::function<void(std::size_t)>& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        for (std::uint64_t w = words_[wi]; w; w &= w - 1) fn(wi * 64 + std::countr_zero(w));
}

std::size_t BitVec::next_set(std::size_t from) const {
    if (from >= width_) return width_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
        if (++wi == words_.size()) return width_;
        w = words_[wi];
    }
}

std::strong_ordering BitVec::operator<=>(const BitVec& other) const {
    if (auto c = width_ <=> other.width_; c != 0) return c;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------
// CompatRelation
// ---------------------------------------------------------------------

CompatRelation CompatRelation::between(Family left, Family right, int t) {
    CompatRelation rel;
    rel.t = t;
    rel.left = std::move(left);
    rel.right = std::move(right);
    rel.rows.assign(rel.left.size(), BitVec(rel.right.size()));
    rel.cols.assign(rel.right.size(), BitVec(rel.left.size()));
    for (std::size_t i = 0; i < rel.left.size(); ++i)
        for (std::size_t j = 0; j < rel.right.size(); ++j)
            if (rel.left[i].intersection_size(rel.right[j]) >= t) {
                rel.rows[i].set(j);
                rel.cols[j].set(i);
            }
    return rel;
}

Family compat(const CompatRelation& rel, const Family& sub, Side side) {
    const Family& own = side == Side::Left ? rel.left : rel.right;
    const Family& other = side == Side::Left ? rel.right : rel.left;
    const auto& vecs = side == Side::Left ? rel.rows : rel.cols;
    BitVec acc(other.size(), true);
    for (const SetBits& s : sub) {
        std::size_t idx = own.index_of(s);
        if (idx == Family::npos)
            throw std::invalid_argument("compat: {" + s.to_string() + "} is not a member of the " +
                                        (side == Side::Left ? "left" : "right") + " family");
        acc &= vecs[idx];
    }
    std::vector<SetBits> members;
    acc.for_each([&](std::size_t j) { members.push_back(other[j]); });
    return Family::of(other.ground(), std::move(members));
}

// ---------------------------------------------------------------------
// ProductInstance
// ---------------------------------------------------------------------

ProductInstance ProductInstance::from_families(const std::vector<Family>& fams, int t,
                                               const std::vector<WeightFn>& weights) {
    if (fams.size() != weights.size())
        throw std::invalid_argument("from_families: one weight function per family required");
    ProductInstance inst;
    const std::size_t k = fams.size();
    inst.sizes.reserve(k);
    for (const Family& f : fams) inst.sizes.push_back(f.size());
    inst.weights.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
        if (weights[a].domain() != fams[a])
            throw std::invalid_argument("weight domain mismatch on family " + std::to_string(a + 1));
        inst.weights[a] = weights[a].values();
    }
    inst.rel.assign(k, std::vector<std::vector<BitVec>>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b) continue;
            inst.rel[a][b].assign(fams[a].size(), BitVec(fams[b].size()));
            for (std::size_t i = 0; i < fams[a].size(); ++i)
                for (std::size_t j = 0; j < fams[b].size(); ++j)
                    if (fams[a][i].intersection_size(fams[b][j]) >= t) inst.rel[a][b][i].set(j);
        }
    return inst;
}

ProductInstance ProductInstance::from_predicate(
    const std::vector<std::size_t>& sizes,
    const std::function<bool(std::size_t, std::size_t, std::size_t, std::size_t)>& compatible,
    const std::vector<std::vector<Rat>>& weights) {
    ProductInstance inst;
    inst.sizes = sizes;
    inst.weights = weights;
    const std::size_t k = sizes.size();
    inst.rel.assign(k, std::vector<std::vector<BitVec>>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b) continue;
            inst.rel[a][b].assign(sizes[a], BitVec(sizes[b]));
            for (std::size_t i = 0; i < sizes[a]; ++i)
                for (std::size_t j = 0; j < sizes[b]; ++j)
                    if (compatible(a, i, b, j)) inst.rel[a][b][i].set(j);
        }
    return inst;
}

// ---------------------------------------------------------------------
// Concept-enumeration engine
// ---------------------------------------------------------------------

namespace {

bool tuple_less(const IndexTuple& x, const IndexTuple& y) { return x.sides < y.sides; }

// Shared collector for best value and all attaining configurations.
class BestSet {
public:
    const Rat& best() const { return best_; }
    bool truncated() const { return truncated_; }
    std::vector<IndexTuple> take_sorted() {
        std::sort(found_.begin(), found_.end(), tuple_less);
        return std::move(found_);
    }
    void seed(const Rat& value) {
        if (value > best_) best_ = value;
    }
    void consider(const Rat& value, std::vector<std::vector<std::uint32_t>> tuple) {
        if (value < best_) return;
        if (value > best_) {
            best_ = value;
            found_.clear();
            truncated_ = false;
        }
        if (found_.size() >= kMaximizerCap) {
            truncated_ = true;
            return;
        }
        found_.push_back(IndexTuple{std::move(tuple), value});
    }

private:
    Rat best_ = 0;
    std::vector<IndexTuple> found_;
    bool truncated_ = false;
};

class ConceptEngine {
public:
    explicit ConceptEngine(const ProductInstance& inst) : inst_(inst), k_(inst.k()) {}

    IndexReport run() {
        std::vector<BitVec> cands;
        cands.reserve(k_);
        for (std::size_t s : inst_.sizes) cands.emplace_back(s, true);
        std::vector<std::vector<std::uint32_t>> chosen;
        level(0, cands, chosen, Rat(1));
        IndexReport report;
        report.max_value = best_.best();
        report.truncated = best_.truncated();
        report.maximizers = best_.take_sorted();
        report.nodes = nodes_;
        report.method = SearchMethod::Concept;
        return report;
    }

private:
    struct LevelCtx {
        std::size_t d = 0;
        std::vector<BitVec> cands;                    // sides d.. restricted so far
        std::vector<std::vector<Rat>> colweight;      // per later side: side-d weight of each member's column
        std::vector<std::vector<std::uint32_t>>* chosen = nullptr;
        Rat partial;
    };

    const ProductInstance& inst_;
    std::size_t k_;
    BestSet best_;
    std::uint64_t nodes_ = 0;

    Rat wsum(std::size_t side, const BitVec& members) const {
        Rat sum = 0;
        members.for_each([&](std::size_t i) { sum += inst_.weights[side][i]; });
        return sum;
    }

    void level(std::size_t d, const std::vector<BitVec>& cands,
               std::vector<std::vector<std::uint32_t>>& chosen, const Rat& partial) {
        if (d + 1 == k_) {
            ++nodes_;
            const BitVec& last = cands[d];
            if (!last.any()) return;
            Rat value = partial * wsum(d, last);
            auto tuple = chosen;
            tuple.push_back(last.to_indices());
            best_.consider(value, std::move(tuple));
            return;
        }

        LevelCtx ctx;
        ctx.d = d;
        ctx.cands = cands;
        ctx.chosen = &chosen;
        ctx.partial = partial;
        ctx.colweight.resize(k_);
        for (std::size_t j = d + 1; j < k_; ++j) {
            ctx.colweight[j].assign(inst_.sizes[j], Rat(0));
            for (std::size_t b = 0; b < inst_.sizes[j]; ++b) {
                if (!cands[j].test(b)) continue;
                Rat w = 0;
                cands[d].for_each([&](std::size_t i) {
                    if (inst_.rel[d][j][i].test(b)) w += inst_.weights[d][i];
                });
                ctx.colweight[j][b] = std::move(w);
            }
        }

        // Pair seed: any single right member b pairs with its full column,
        // so colweight[b] * w[b] is an attainable value.
        if (k_ == 2 && d == 0) {
            for (std::size_t b = 0; b < inst_.sizes[1]; ++b)
                if (cands[1].test(b) && ctx.colweight[1][b] > 0)
                    best_.seed(ctx.colweight[1][b] * inst_.weights[1][b]);
        }

        // Root concept: extent compatible with every later candidate.
        std::vector<BitVec> intent(ctx.cands.begin() + static_cast<std::ptrdiff_t>(d) + 1,
                                   ctx.cands.end());
        BitVec extent = closure(ctx, intent);
        cbo(ctx, extent, intent, 0);
    }

    // {i in cands[d] : every member of every intent side is compatible with i}
    BitVec closure(const LevelCtx& ctx, const std::vector<BitVec>& intent) const {
        BitVec extent = ctx.cands[ctx.d];
        const std::size_t nd = inst_.sizes[ctx.d];
        for (std::size_t i = 0; i < nd; ++i) {
            if (!extent.test(i)) continue;
            for (std::size_t j = ctx.d + 1; j < k_; ++j)
                if (!intent[j - ctx.d - 1].is_subset_of(inst_.rel[ctx.d][j][i])) {
                    extent.reset(i);
                    break;
                }
        }
        return extent;
    }

    void cbo(const LevelCtx& ctx, const BitVec& extent, const std::vector<BitVec>& intent,
             std::size_t gen_from) {
        ++nodes_;
        const std::size_t d = ctx.d;

        // This concept as the side-d choice.
        if (extent.any()) {
            bool later_nonempty = true;
            for (const BitVec& b : intent)
                if (!b.any()) {
                    later_nonempty = false;
                    break;
                }
            if (later_nonempty) {
                Rat val_d = wsum(d, extent);
                Rat ub = ctx.partial * val_d;
                for (std::size_t j = d + 1; j < k_; ++j) ub *= wsum(j, intent[j - d - 1]);
                if (ub >= best_.best()) {
                    ctx.chosen->push_back(extent.to_indices());
                    std::vector<BitVec> child_cands = ctx.cands;
                    for (std::size_t j = d + 1; j < k_; ++j) child_cands[j] = intent[j - d - 1];
                    level(d + 1, child_cands, *ctx.chosen, ctx.partial * val_d);
                    ctx.chosen->pop_back();
                }
            }
        }

        // Children: extend the extent by each later generator, canonically.
        const BitVec& universe = ctx.cands[d];
        for (std::size_t g = universe.next_set(gen_from); g < universe.width();
             g = universe.next_set(g + 1)) {
            if (extent.test(g)) continue;

            std::vector<BitVec> child_intent;
            child_intent.reserve(intent.size());
            bool child_any = false;
            for (std::size_t j = d + 1; j < k_; ++j) {
                child_intent.push_back(intent[j - d - 1] & inst_.rel[d][j][g]);
                if (child_intent.back().any()) child_any = true;
            }
            // No compatible member left on any later side: the subtree
            // holds no positive-value tuple.
            if (!child_any) continue;

            BitVec child_extent = closure(ctx, child_intent);
            // Canonicity: the closure must not introduce members below g.
            std::size_t first_new = child_extent.width();
            for (std::size_t i = child_extent.next_set(0); i < child_extent.width();
                 i = child_extent.next_set(i + 1)) {
                if (!extent.test(i)) {
                    first_new = i;
                    break;
                }
            }
            if (first_new != g) continue;

            // Subtree bound: no descendant tuple can beat
            // partial * (best column weight) * (remaining later weights).
            Rat later = 1;
            bool later_all = true;
            for (std::size_t j = d + 1; j < k_; ++j) {
                if (!child_intent[j - d - 1].any()) {
                    later_all = false;
                    break;
                }
                later *= wsum(j, child_intent[j - d - 1]);
            }
            if (!later_all) continue;
            Rat maxcol = 0;
            for (std::size_t j = d + 1; j < k_; ++j)
                child_intent[j - d - 1].for_each([&](std::size_t b) {
                    if (ctx.colweight[j][b] > maxcol) maxcol = ctx.colweight[j][b];
                });
            if (ctx.partial * maxcol * later < best_.best()) continue;

            cbo(ctx, child_extent, child_intent, g + 1);
        }
    }
};

// ---------------------------------------------------------------------
// Brute-force oracle on plain masks; an independent code path.
// ---------------------------------------------------------------------

class BruteEngine {
public:
    explicit BruteEngine(const ProductInstance& inst) : inst_(inst), k_(inst.k()) {
        if (k_ > kFamilyCountCap)
            throw std::invalid_argument("brute force: more than " + std::to_string(kFamilyCountCap) +
                                        " families");
        for (std::size_t s : inst_.sizes)
            if (s > kBruteForceSideCap)
                throw std::invalid_argument("brute force: side of size " + std::to_string(s) +
                                            " exceeds cap " + std::to_string(kBruteForceSideCap));
        rows_.assign(k_, {});
        for (std::size_t a = 0; a < k_; ++a)
            for (std::size_t b = 0; b < k_; ++b) {
                if (a == b) continue;
                std::vector<std::uint32_t> r(inst_.sizes[a], 0);
                for (std::size_t i = 0; i < inst_.sizes[a]; ++i) {
                    std::uint32_t mask = 0;
                    for (std::size_t j = 0; j < inst_.sizes[b]; ++j)
                        if (inst_.rel[a][b][i].test(j)) mask |= std::uint32_t{1} << j;
                    r[i] = mask;
                }
                rows_[a].resize(k_);
                rows_[a][b] = std::move(r);
            }
    }

    IndexReport run() {
        std::vector<std::uint32_t> chosen(k_, 0);
        std::vector<std::uint32_t> avail(k_, 0);
        for (std::size_t a = 0; a < k_; ++a)
            avail[a] = inst_.sizes[a] >= 32 ? ~std::uint32_t{0}
                                            : (std::uint32_t{1} << inst_.sizes[a]) - 1;
        recurse(0, chosen, avail, Rat(1));
        IndexReport report;
        report.max_value = best_.best();
        report.truncated = best_.truncated();
        report.maximizers = best_.take_sorted();
        report.nodes = nodes_;
        report.method = SearchMethod::BruteForce;
        return report;
    }

private:
    const ProductInstance& inst_;
    std::size_t k_;
    std::vector<std::vector<std::vector<std::uint32_t>>> rows_;
    BestSet best_;
    std::uint64_t nodes_ = 0;

    Rat mask_weight(std::size_t side, std::uint32_t mask) const {
        Rat sum = 0;
        for (std::uint32_t m = mask; m; m &= m - 1)
            sum += inst_.weights[side][static_cast<std::size_t>(std::countr_zero(m))];
        return sum;
    }

    static std::vector<std::uint32_t> mask_indices(std::uint32_t mask) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t m = mask; m; m &= m - 1)
            out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
        return out;
    }

    void recurse(std::size_t d, std::vector<std::uint32_t>& chosen, std::vector<std::uint32_t> avail,
                 const Rat& partial) {
        if (d + 1 == k_) {
            ++nodes_;
            std::uint32_t last = avail[d];
            if (!last) return;
            Rat value = partial * mask_weight(d, last);
            if (value < best_.best()) return;
            std::vector<std::vector<std::uint32_t>> tuple;
            tuple.reserve(k_);
            for (std::size_t a = 0; a + 1 < k_; ++a) tuple.push_back(mask_indices(chosen[a]));
            tuple.push_back(mask_indices(last));
            best_.consider(value, std::move(tuple));
            return;
        }
        // All nonempty submasks of the available candidates on side d.
        const std::uint32_t full = avail[d];
        for (std::uint32_t sub = full;; sub = (sub - 1) & full) {
            if (sub) {
                chosen[d] = sub;
                std::vector<std::uint32_t> next_avail = avail;
                for (std::size_t b = d + 1; b < k_; ++b) {
                    std::uint32_t acc = next_avail[b];
                    for (std::uint32_t m = sub; m; m &= m - 1)
                        acc &= rows_[d][b][static_cast<std::size_t>(std::countr_zero(m))];
                    next_avail[b] = acc;
                }
                recurse(d + 1, chosen, std::move(next_avail), partial * mask_weight(d, sub));
            }
            if (sub == 0) break;
        }
        chosen[d] = 0;
    }
};

}  // namespace

IndexReport search_product(const ProductInstance& inst, SearchMethod method) {
    if (inst.k() == 0) throw std::invalid_argument("search_product: no families");
    if (method == SearchMethod::BruteForce) return BruteEngine(inst).run();
    return ConceptEngine(inst).run();
}

IndexReport search_max_clique(const std::vector<BitVec>& adjacency, const std::vector<bool>& admissible,
                              const std::vector<Rat>& weights) {
    const std::size_t n = adjacency.size();
    BestSet best;
    std::uint64_t nodes = 0;

    std::vector<std::uint32_t> clique;
    auto expand = [&](auto&& self, const BitVec& candidates, const Rat& weight) -> void {
        ++nodes;
        if (!clique.empty()) best.consider(weight, {clique});
        Rat remaining = 0;
        candidates.for_each([&](std::size_t v) { remaining += weights[v]; });
        for (std::size_t v = candidates.next_set(0); v < n; v = candidates.next_set(v + 1)) {
            if (weight + remaining < best.best()) return;
            BitVec next = candidates & adjacency[v];
            // restrict to vertices above v
            for (std::size_t u = next.next_set(0); u <= v && u < n; u = next.next_set(u + 1))
                next.reset(u);
            clique.push_back(static_cast<std::uint32_t>(v));
            self(self, next, weight + weights[v]);
            clique.pop_back();
            remaining -= weights[v];
        }
    };

    BitVec start(n);
    for (std::size_t v = 0; v < n; ++v)
        if (admissible[v]) start.set(v);
    expand(expand, start, Rat(0));

    IndexReport report;
    report.max_value = best.best();
    report.truncated = best.truncated();
    report.maximizers = best.take_sorted();
    report.nodes = nodes;
    report.method = SearchMethod::Concept;
    return report;
}

// ---------------------------------------------------------------------
// Family-level wrappers
// ---------------------------------------------------------------------

namespace {

Family subfamily(const Family& base, const std::vector<std::uint32_t>& indices) {
    std::vector<SetBits> members;
    members.reserve(indices.size());
    for (std::uint32_t i : indices) members.push_back(base[i]);
    return Family::of(base.ground(), std::move(members));
}

SearchReport to_pair_report(const IndexReport& rep, const Family& G, const Family& H) {
    SearchReport out;
    out.max_value = rep.max_value;
    out.nodes = rep.nodes;
    out.method = rep.method;
    out.truncated = rep.truncated;
    out.maximizers.reserve(rep.maximizers.size());
    for (const IndexTuple& t : rep.maximizers)
        out.maximizers.push_back(ClosedPair{subfamily(G, t.sides[0]), subfamily(H, t.sides[1]), t.value});
    return out;
}

}  // namespace

SearchReport max_product_pair(const Family& G, const Family& H, int t, const WeightFn& gw,
                              const WeightFn& hw) {
    ProductInstance inst = ProductInstance::from_families({G, H}, t, {gw, hw});
    return to_pair_report(search_product(inst, SearchMethod::Concept), G, H);
}

SearchReport brute_force_pair(const Family& G, const Family& H, int t, const WeightFn& gw,
                              const WeightFn& hw) {
    ProductInstance inst = ProductInstance::from_families({G, H}, t, {gw, hw});
    return to_pair_report(search_product(inst, SearchMethod::BruteForce), G, H);
}

CliqueReport max_t_intersecting(const Family& F, int t, const WeightFn& w) {
    if (w.domain() != F) throw std::invalid_argument("weight domain mismatch");
    const std::size_t n = F.size();
    std::vector<BitVec> adjacency(n, BitVec(n));
    std::vector<bool> admissible(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        admissible[i] = F[i].size() >= t;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && F[i].intersection_size(F[j]) >= t) adjacency[i].set(j);
    }
    IndexReport rep = search_max_clique(adjacency, admissible, w.values());
    CliqueReport out;
    out.max_value = rep.max_value;
    out.nodes = rep.nodes;
    out.truncated = rep.truncated;
    out.maximizers.reserve(rep.maximizers.size());
    for (const IndexTuple& tup : rep.maximizers) out.maximizers.push_back(subfamily(F, tup.sides[0]));
    return out;
}

TupleReport k_family_search(const std::vector<Family>& fams, int t, const std::vector<WeightFn>& weights,
                            SearchMethod method) {
    if (fams.size() < 2) throw std::invalid_argument("k_family_search: need at least two families");
    if (fams.size() > kFamilyCountCap)
        throw std::invalid_argument("k_family_search: more than " + std::to_string(kFamilyCountCap) +
                                    " families");
    ProductInstance inst = ProductInstance::from_families(fams, t, weights);
    IndexReport rep = search_product(inst, method);
    TupleReport out;
    out.max_value = rep.max_value;
    out.nodes = rep.nodes;
    out.method = rep.method;
    out.truncated = rep.truncated;
    out.maximizers.reserve(rep.maximizers.size());
    for (const IndexTuple& tup : rep.maximizers) {
        std::vector<Family> sides;
        sides.reserve(fams.size());
        for (std::size_t a = 0; a < fams.size(); ++a) sides.push_back(subfamily(fams[a], tup.sides[a]));
        out.maximizers.push_back(std::move(sides));
    }
    return out;
}

}  // namespace crosstint
