#pragma once

// Weight functions over set families: the built-in constructors, the two
// hypothesis checks on weights, and total/star weight sums. All values are
// exact positive rationals.

#include "crosstint/setfam.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crosstint {

class WeightFn {
public:
    WeightFn() = default;
    // values parallel to domain.members(); all must be > 0.
    WeightFn(Family domain, std::vector<Rat> values);

    const Family& domain() const { return domain_; }
    const std::vector<Rat>& values() const { return values_; }
    const Rat& at(const SetBits& member) const;  // throws if not in domain
    const Rat& at(std::size_t index) const { return values_[index]; }
    Rat total() const;

private:
    Family domain_;
    std::vector<Rat> values_;
};

struct WeightSpec {
    enum class Kind { Uniform, ProductMeasure, Geometric, BinomialCompletion, MultisetCompletion, Explicit };

    Kind kind = Kind::Uniform;
    Rat p;                                 // ProductMeasure: p in (0,1)
    Rat x;                                 // Geometric: x > 0
    long m = 0, r = 0, p_window = 0;       // completion weights
    std::map<std::uint64_t, Rat> explicit_values;  // member mask -> value

    static WeightSpec uniform();
    static WeightSpec product_measure(Rat p);
    static WeightSpec geometric(Rat x);
    static WeightSpec binomial_completion(long m, long r, long p_window);
    static WeightSpec multiset_completion(long m, long r, long p_window);
    static WeightSpec explicit_map(std::map<std::uint64_t, Rat> values);
};

// Evaluates the spec over the domain. Throws a construction error naming
// the offending member if any value would be nonpositive or missing.
WeightFn build_weight(const WeightSpec& spec, const Family& domain);

// Diagnostic result of a weight-hypothesis check; witness set on failure.
struct ConditionReport {
    bool ok = true;
    std::optional<SetBits> witness_a;  // the smaller / shifted set
    std::optional<SetBits> witness_b;  // the larger / original set
    int witness_i = 0, witness_j = 0;  // condition (b) only
    std::string detail;
};

// Condition (a): w(A) >= (t+u) w(B) whenever A is a proper subset of B and
// |A| >= t, both in the domain.
ConditionReport check_condition_a(const WeightFn& w, const IntersectionParams& params);

// Condition (b): w(delta_{i,j}(C)) >= w(C) for all members C and i < j.
// The domain must contain every such delta image (compressed domains do);
// otherwise a precondition error names C, i, j.
ConditionReport check_condition_b(const WeightFn& w);

// Exact sum over a subfamily; the subfamily must lie inside the domain.
Rat total_weight(const WeightFn& w, const Family& sub);

// total_weight over t_star(domain, T).
Rat star_weight(const WeightFn& w, const SetBits& T);

}  // namespace crosstint
