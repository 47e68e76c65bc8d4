#include "crosstint/weights.hpp"

#include "crosstint/compress.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace crosstint {

WeightFn::WeightFn(Family domain, std::vector<Rat> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (domain_.size() != values_.size())
        throw std::invalid_argument("WeightFn: value count does not match domain size");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] <= 0)
            throw std::invalid_argument("WeightFn: nonpositive weight at member {" +
                                        domain_[i].to_string() + "}");
}

const Rat& WeightFn::at(const SetBits& member) const {
    std::size_t idx = domain_.index_of(member);
    if (idx == Family::npos)
        throw std::invalid_argument("WeightFn: {" + member.to_string() + "} not in domain");
    return values_[idx];
}

Rat WeightFn::total() const {
    Rat sum = 0;
    for (const Rat& v : values_) sum += v;
    return sum;
}

WeightSpec WeightSpec::uniform() { return {}; }

WeightSpec WeightSpec::product_measure(Rat p) {
    if (p <= 0 || p >= 1) throw std::invalid_argument("product measure needs p in (0,1)");
    WeightSpec s;
    s.kind = Kind::ProductMeasure;
    s.p = std::move(p);
    return s;
}

WeightSpec WeightSpec::geometric(Rat x) {
    if (x <= 0) throw std::invalid_argument("geometric weight needs x > 0");
    WeightSpec s;
    s.kind = Kind::Geometric;
    s.x = std::move(x);
    return s;
}

WeightSpec WeightSpec::binomial_completion(long m, long r, long p_window) {
    WeightSpec s;
    s.kind = Kind::BinomialCompletion;
    s.m = m;
    s.r = r;
    s.p_window = p_window;
    return s;
}

WeightSpec WeightSpec::multiset_completion(long m, long r, long p_window) {
    WeightSpec s;
    s.kind = Kind::MultisetCompletion;
    s.m = m;
    s.r = r;
    s.p_window = p_window;
    return s;
}

WeightSpec WeightSpec::explicit_map(std::map<std::uint64_t, Rat> values) {
    WeightSpec s;
    s.kind = Kind::Explicit;
    s.explicit_values = std::move(values);
    return s;
}

WeightFn build_weight(const WeightSpec& spec, const Family& domain) {
    const int n = domain.ground();
    std::vector<Rat> values;
    values.reserve(domain.size());
    for (const SetBits& member : domain) {
        Rat v;
        switch (spec.kind) {
            case WeightSpec::Kind::Uniform:
                v = 1;
                break;
            case WeightSpec::Kind::ProductMeasure:
                v = rat_pow(spec.p, member.size()) * rat_pow(1 - spec.p, n - member.size());
                break;
            case WeightSpec::Kind::Geometric:
                v = rat_pow(spec.x, n - member.size());
                break;
            case WeightSpec::Kind::BinomialCompletion:
                v = Rat(binom(spec.m - spec.p_window, spec.r - member.size()));
                break;
            case WeightSpec::Kind::MultisetCompletion:
                v = Rat(binom(spec.m + spec.r - spec.p_window - 1, spec.r - member.size()));
                break;
            case WeightSpec::Kind::Explicit: {
                auto it = spec.explicit_values.find(member.mask());
                if (it == spec.explicit_values.end())
                    throw std::invalid_argument("explicit weight missing member {" + member.to_string() + "}");
                v = it->second;
                break;
            }
        }
        if (v <= 0)
            throw std::invalid_argument("weight construction: nonpositive value at member {" +
                                        member.to_string() + "}");
        values.push_back(std::move(v));
    }
    return WeightFn(domain, std::move(values));
}

ConditionReport check_condition_a(const WeightFn& w, const IntersectionParams& params) {
    const Family& dom = w.domain();
    const Rat factor = Rat(params.t) + params.u;
    for (std::size_t bi = 0; bi < dom.size(); ++bi) {
        const SetBits& b = dom[bi];
        std::uint64_t m = b.mask();
        if (m == 0) continue;
        // Proper submasks A of B with |A| >= t.
        for (std::uint64_t s = (m - 1) & m;; s = (s - 1) & m) {
            if (std::popcount(s) >= params.t) {
                SetBits a = SetBits::from_mask(dom.ground(), s);
                std::size_t ai = dom.index_of(a);
                if (ai != Family::npos && w.at(ai) < factor * w.at(bi)) {
                    ConditionReport rep;
                    rep.ok = false;
                    rep.witness_a = a;
                    rep.witness_b = b;
                    rep.detail = "w({" + a.to_string() + "}) < (t+u) w({" + b.to_string() + "})";
                    return rep;
                }
            }
            if (s == 0) break;
        }
    }
    return {};
}

ConditionReport check_condition_b(const WeightFn& w) {
    const Family& dom = w.domain();
    const int n = dom.ground();
    for (std::size_t ci = 0; ci < dom.size(); ++ci) {
        const SetBits& c = dom[ci];
        for (int j = 2; j <= n; ++j) {
            if (!c.contains(j)) continue;
            for (int i = 1; i < j; ++i) {
                if (c.contains(i)) continue;
                SetBits image = c.without(j).with(i);
                std::size_t ii = dom.index_of(image);
                if (ii == Family::npos)
                    throw std::invalid_argument("condition (b): delta image of {" + c.to_string() +
                                                "} under (i=" + std::to_string(i) + ", j=" +
                                                std::to_string(j) + ") lies outside the domain");
                if (w.at(ii) < w.at(ci)) {
                    ConditionReport rep;
                    rep.ok = false;
                    rep.witness_a = image;
                    rep.witness_b = c;
                    rep.witness_i = i;
                    rep.witness_j = j;
                    rep.detail = "w(delta_{" + std::to_string(i) + "," + std::to_string(j) + "}({" +
                                 c.to_string() + "})) < w({" + c.to_string() + "})";
                    return rep;
                }
            }
        }
    }
    return {};
}

Rat total_weight(const WeightFn& w, const Family& sub) {
    Rat sum = 0;
    for (const SetBits& s : sub) {
        std::size_t idx = w.domain().index_of(s);
        if (idx == Family::npos)
            throw std::invalid_argument("total_weight: {" + s.to_string() + "} not in weight domain");
        sum += w.at(idx);
    }
    return sum;
}

Rat star_weight(const WeightFn& w, const SetBits& T) {
    return total_weight(w, t_star(w.domain(), T));
}

}  // namespace crosstint
