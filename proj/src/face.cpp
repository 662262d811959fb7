#include "collapsat/face.hpp"

#include "collapsat/error.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <string>

namespace collapsat {

void check_face(const Face& f, int n) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || f[i] >= n)
            throw Error(errc::index_out_of_range,
                        "vertex " + std::to_string(f[i]) + " outside [0," + std::to_string(n) + ")");
        if (i > 0 && f[i] == f[i - 1])
            throw Error(errc::duplicate_vertex, "vertex " + std::to_string(f[i]) + " repeated");
        if (i > 0 && f[i] < f[i - 1])
            throw Error(errc::bad_input, "face vertices not strictly increasing");
    }
}

Mask face_to_mask(const Face& f) {
    Mask m = 0;
    for (int v : f) m |= Mask{1} << v;
    return m;
}

Face mask_to_face(Mask m) {
    Face f;
    while (m) {
        int v = std::countr_zero(m);
        f.push_back(v);
        m &= m - 1;
    }
    return f;
}

int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t next = result * static_cast<std::uint64_t>(n - k + i);
        if (next / static_cast<std::uint64_t>(n - k + i) != result)
            throw Error(errc::parameter_range, "binomial overflow");
        result = next / static_cast<std::uint64_t>(i);
    }
    return result;
}

void for_each_subset(int n, int k, const std::function<void(const Face&)>& fn) {
    if (k < 0 || k > n) return;
    Face cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        fn(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

void for_each_subface(const Face& base, int k, const std::function<void(const Face&)>& fn) {
    int n = static_cast<int>(base.size());
    for_each_subset(n, k, [&](const Face& idx) {
        Face sub(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) sub[i] = base[idx[i]];
        fn(sub);
    });
}

Face kth_subset(int n, int k, std::uint64_t rank) {
    Face out;
    out.reserve(k);
    int v = 0;
    for (int slot = k; slot > 0; --slot) {
        while (true) {
            std::uint64_t block = binomial(n - v - 1, slot - 1);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        out.push_back(v);
        ++v;
    }
    return out;
}

Face face_union(const Face& a, const Face& b) {
    Face out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face face_minus(const Face& a, const Face& b) {
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool face_contains(const Face& a, int v) {
    return std::binary_search(a.begin(), a.end(), v);
}

} // namespace collapsat
