#include "crosstint/labeled.hpp"

#include <algorithm>
#include <stdexcept>

namespace crosstint {

IPSequence::IPSequence(std::vector<int> caps) : caps_(std::move(caps)) {
    for (std::size_t i = 0; i < caps_.size(); ++i) {
        if (caps_[i] < 1) throw std::invalid_argument("IP sequence entries must be >= 1");
        if (i > 0 && caps_[i] < caps_[i - 1])
            throw std::invalid_argument("IP sequence must be increasing");
    }
}

IPSequence IPSequence::constant(int n, int cap) {
    return IPSequence(std::vector<int>(static_cast<std::size_t>(n), cap));
}

LabeledSet::LabeledSet(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].first < 1 || pairs_[i].second < 1)
            throw std::invalid_argument("labeled set pairs must be positive");
        if (i > 0 && pairs_[i].first == pairs_[i - 1].first)
            throw std::invalid_argument("labeled set positions must be distinct");
    }
}

bool LabeledSet::contains(int x, int y) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(x, y));
}

int LabeledSet::value_at(int x) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(x, 0));
    if (it == pairs_.end() || it->first != x) return 0;
    return it->second;
}

bool LabeledSet::subset_of(const LabeledSet& other) const {
    return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

int LabeledSet::intersection_size(const LabeledSet& other) const {
    int count = 0;
    auto a = pairs_.begin();
    auto b = other.pairs_.begin();
    while (a != pairs_.end() && b != other.pairs_.end()) {
        if (*a < *b)
            ++a;
        else if (*b < *a)
            ++b;
        else {
            ++count;
            ++a;
            ++b;
        }
    }
    return count;
}

bool LabeledSet::valid_against(const IPSequence& caps) const {
    for (auto [x, y] : pairs_)
        if (x > caps.length() || y > caps.cap(x)) return false;
    return true;
}

std::string LabeledSet::to_string() const {
    if (pairs_.empty()) return "-";
    std::string out;
    for (auto [x, y] : pairs_) out += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    return out;
}

LabeledSet first_level_prefix(int t) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(t));
    for (int x = 1; x <= t; ++x) pairs.emplace_back(x, 1);
    return LabeledSet(std::move(pairs));
}

LabeledFamily LabeledFamily::of(IPSequence caps, int r, std::vector<LabeledSet> members) {
    for (const LabeledSet& m : members) {
        if (m.size() > r)
            throw std::invalid_argument("labeled member larger than family size bound");
        if (!m.valid_against(caps))
            throw std::invalid_argument("labeled member " + m.to_string() + " exceeds capacities");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    LabeledFamily fam;
    fam.caps = std::move(caps);
    fam.r = r;
    fam.members = std::move(members);
    return fam;
}

bool LabeledFamily::contains(const LabeledSet& s) const {
    return std::binary_search(members.begin(), members.end(), s);
}

namespace {

void gen_labeled_rec(const IPSequence& caps, int r, int next_pos, std::vector<std::pair<int, int>>& acc,
                     std::vector<LabeledSet>& out) {
    if (static_cast<int>(acc.size()) == r) {
        out.emplace_back(acc);
        return;
    }
    int needed = r - static_cast<int>(acc.size());
    for (int x = next_pos; x + needed - 1 <= caps.length(); ++x) {
        for (int y = 1; y <= caps.cap(x); ++y) {
            acc.emplace_back(x, y);
            gen_labeled_rec(caps, r, x + 1, acc, out);
            acc.pop_back();
        }
    }
}

}  // namespace

LabeledFamily gen_labeled(const IPSequence& caps, int r) {
    if (r < 1 || r > caps.length())
        throw std::invalid_argument("gen_labeled: need 1 <= r <= sequence length");
    std::vector<LabeledSet> out;
    std::vector<std::pair<int, int>> acc;
    gen_labeled_rec(caps, r, 1, acc, out);
    return LabeledFamily::of(caps, r, std::move(out));
}

LabeledFamily labeled_star(const LabeledFamily& fam, const LabeledSet& T) {
    std::vector<LabeledSet> out;
    for (const LabeledSet& m : fam.members)
        if (T.subset_of(m)) out.push_back(m);
    return LabeledFamily::of(fam.caps, fam.r, std::move(out));
}

LabeledSet gamma(const LabeledSet& a, int x, int y) {
    if (y < 2) throw std::invalid_argument("gamma: y must be >= 2");
    if (!a.contains(x, y)) return a;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(a.pairs().size());
    for (auto [px, py] : a.pairs()) {
        if (px == x && py == y)
            pairs.emplace_back(x, 1);
        else
            pairs.emplace_back(px, py);
    }
    return LabeledSet(std::move(pairs));
}

LabeledFamily gamma_compress(const LabeledFamily& fam, int x, int y) {
    std::vector<LabeledSet> out;
    out.reserve(fam.members.size());
    for (const LabeledSet& a : fam.members) {
        LabeledSet image = gamma(a, x, y);
        if (image == a || !fam.contains(image))
            out.push_back(std::move(image));
        else
            out.push_back(a);
    }
    return LabeledFamily::of(fam.caps, fam.r, std::move(out));
}

bool labeled_cross_t_intersecting(std::span<const LabeledFamily> fams, int t) {
    for (std::size_t i = 0; i < fams.size(); ++i)
        for (std::size_t j = i + 1; j < fams.size(); ++j)
            for (const LabeledSet& a : fams[i].members)
                for (const LabeledSet& b : fams[j].members)
                    if (a.intersection_size(b) < t) return false;
    return true;
}

std::vector<LabeledFamily> gamma_cascade(std::vector<LabeledFamily> fams, int t) {
    if (!labeled_cross_t_intersecting(fams, t)) {
        // Name one offending pair for the diagnostic.
        for (std::size_t i = 0; i < fams.size(); ++i)
            for (std::size_t j = i + 1; j < fams.size(); ++j)
                for (const LabeledSet& a : fams[i].members)
                    for (const LabeledSet& b : fams[j].members)
                        if (a.intersection_size(b) < t)
                            throw std::invalid_argument("gamma_cascade: " + a.to_string() + " and " +
                                                        b.to_string() + " do not " + std::to_string(t) +
                                                        "-intersect");
    }
    int l = 0, h = 0;
    for (const LabeledFamily& f : fams) {
        l = std::max(l, f.caps.length());
        h = std::max(h, f.caps.max_cap());
    }
    for (int x = 1; x <= l; ++x)
        for (int y = 2; y <= h; ++y)
            for (LabeledFamily& f : fams) f = gamma_compress(f, x, y);
    return fams;
}

ProjectionWeight projection_weight(const IPSequence& caps, int r) {
    const int n = caps.length();
    if (r > n) throw std::invalid_argument("projection_weight: r exceeds sequence length");

    // w(A) = sum over E in C([n] \ A, r - |A|) of prod_{e in E} (c_e - 1):
    // members of S_{c,r} whose first-level part is exactly A x [1] choose
    // the remaining positions E with values >= 2.
    Family domain = gen_upto_r(n, r);
    std::vector<SetBits> kept;
    std::vector<Rat> values;
    bool full = true;
    for (const SetBits& a : domain) {
        // Sum of products over (r - |A|)-subsets of the complement.
        std::vector<int> rest;
        for (int x = 1; x <= n; ++x)
            if (!a.contains(x)) rest.push_back(caps.cap(x) - 1);
        int need = r - a.size();
        // Elementary symmetric polynomial e_need over rest.
        std::vector<Int> esym(static_cast<std::size_t>(need) + 1, 0);
        esym[0] = 1;
        for (int v : rest)
            for (int k = need; k >= 1; --k) esym[static_cast<std::size_t>(k)] += esym[static_cast<std::size_t>(k - 1)] * v;
        Int count = esym[static_cast<std::size_t>(need)];
        if (count > 0) {
            kept.push_back(a);
            values.emplace_back(count);
        } else {
            full = false;
        }
    }
    ProjectionWeight out;
    out.weight = WeightFn(Family::of(n, std::move(kept)), std::move(values));
    out.full_domain = full;
    return out;
}

Family project_to_sets(const LabeledFamily& fam) {
    const int n = fam.caps.length();
    std::vector<SetBits> supports;
    supports.reserve(fam.members.size());
    for (const LabeledSet& m : fam.members) {
        SetBits s = SetBits::empty(n);
        for (auto [x, y] : m.pairs())
            if (y == 1) s = s.with(x);
        supports.push_back(s);
    }
    return Family::of(n, std::move(supports));
}

Family encode_on_grid(const LabeledFamily& fam, int l, int h) {
    if (l * h > kGroundCap)
        throw std::invalid_argument("encode_on_grid: grid " + std::to_string(l) + "x" + std::to_string(h) +
                                    " exceeds the ground cap");
    std::vector<SetBits> members;
    members.reserve(fam.members.size());
    for (const LabeledSet& m : fam.members) {
        SetBits s = SetBits::empty(l * h);
        for (auto [x, y] : m.pairs()) s = s.with((x - 1) * h + y);
        members.push_back(s);
    }
    return Family::of(l * h, std::move(members));
}

LabeledSet decode_from_grid(const SetBits& set, int h) {
    std::vector<std::pair<int, int>> pairs;
    for (int e : set.elements()) pairs.emplace_back((e - 1) / h + 1, (e - 1) % h + 1);
    return LabeledSet(std::move(pairs));
}

}  // namespace crosstint
