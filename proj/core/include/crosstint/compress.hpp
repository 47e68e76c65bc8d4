#pragma once

// Left-compression operators on families, fixpoint compression, and the
// simultaneous compression of cross-t-intersecting tuples.

#include "crosstint/setfam.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace crosstint {

// (A \ {j}) u {i} when j in A and i not in A; A otherwise.
SetBits delta(const SetBits& a, int i, int j);

// The compression operation: image of delta plus the members whose image
// is already present. Preserves family size.
Family compress(const Family& fam, int i, int j);

struct CompressResult {
    Family family;
    int steps = 0;  // effective left-compressions applied
};

// Trace callback: (i, j, potential after the step).
using CompressTrace = std::function<void(int, int, std::int64_t)>;

// Applies left-compressions in lexicographic (i, j) order, restarting the
// scan after every change, until invariant under all of them.
CompressResult compress_to_fixpoint(const Family& fam, const CompressTrace& trace = nullptr);

// Same scan, each effective left-compression applied to all families at
// once. Inputs must be cross-t-intersecting; outputs are compressed and
// remain cross-t-intersecting with sizes preserved.
std::vector<Family> co_compress(std::vector<Family> fams, int t, const CompressTrace& trace = nullptr);

// Sum of all elements over all members; strictly decreases under any
// effective left-compression, so it bounds the number of fixpoint steps.
std::int64_t potential(const Family& fam);

std::int64_t potential(std::span<const Family> fams);

}  // namespace crosstint
