#include "crosstint/compress.hpp"

#include <stdexcept>
#include <string>

namespace crosstint {

namespace {

void check_indices(int ground, int i, int j) {
    if (i < 1 || i > ground || j < 1 || j > ground)
        throw std::invalid_argument("compression index outside ground [1, " + std::to_string(ground) + "]");
    if (i == j) throw std::invalid_argument("compression indices must differ");
}

}  // namespace

SetBits delta(const SetBits& a, int i, int j) {
    check_indices(a.ground(), i, j);
    if (a.contains(j) && !a.contains(i)) return a.without(j).with(i);
    return a;
}

Family compress(const Family& fam, int i, int j) {
    check_indices(fam.ground(), i, j);
    std::vector<SetBits> out;
    out.reserve(fam.size());
    for (const SetBits& a : fam) {
        SetBits image = delta(a, i, j);
        if (image == a || !fam.contains(image)) {
            out.push_back(image);
        } else {
            out.push_back(a);  // image already present; keep the original
        }
    }
    return Family::of(fam.ground(), std::move(out));
}

CompressResult compress_to_fixpoint(const Family& fam, const CompressTrace& trace) {
    CompressResult result{fam, 0};
    const int n = fam.ground();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= n && !changed; ++i) {
            for (int j = i + 1; j <= n && !changed; ++j) {
                Family next = compress(result.family, i, j);
                if (next != result.family) {
                    result.family = std::move(next);
                    ++result.steps;
                    if (trace) trace(i, j, potential(result.family));
                    changed = true;
                }
            }
        }
    }
    return result;
}

std::vector<Family> co_compress(std::vector<Family> fams, int t, const CompressTrace& trace) {
    if (!is_cross_t_intersecting(fams, t))
        throw std::invalid_argument("co_compress: input families are not cross-" + std::to_string(t) +
                                    "-intersecting");
    int n = 0;
    for (const Family& f : fams) n = std::max(n, f.ground());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= n && !changed; ++i) {
            for (int j = i + 1; j <= n && !changed; ++j) {
                std::vector<Family> next;
                next.reserve(fams.size());
                bool any = false;
                for (const Family& f : fams) {
                    if (j > f.ground()) {
                        next.push_back(f);
                        continue;
                    }
                    Family g = compress(f, i, j);
                    if (g != f) any = true;
                    next.push_back(std::move(g));
                }
                if (any) {
                    fams = std::move(next);
                    if (trace) trace(i, j, potential(fams));
                    changed = true;
                }
            }
        }
    }
    return fams;
}

std::int64_t potential(const Family& fam) {
    std::int64_t sum = 0;
    for (const SetBits& f : fam)
        for (int e : f.elements()) sum += e;
    return sum;
}

std::int64_t potential(std::span<const Family> fams) {
    std::int64_t sum = 0;
    for (const Family& f : fams) sum += potential(f);
    return sum;
}

}  // namespace crosstint
