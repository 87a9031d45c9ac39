#pragma once

#include <vector>

#include "quadlabel/types.hpp"

namespace quadlabel {

/// Union-find with path compression; roots are the smallest reachable ids.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<Label>(i);
    }

    Label find(Label x) {
        Label root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            Label next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    // Smaller root wins so representatives are stable under insertion order.
    void unite(Label a, Label b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b)
            parent_[b] = a;
        else
            parent_[a] = b;
    }

    bool same(Label a, Label b) { return find(a) == find(b); }
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<Label> parent_;
};

/// Reference two-pass connected component labelling, 8-connectivity.
/// Output labels are 1..N in first-touch raster order; deterministic.
LabelImage label_reference(const BinaryImage& img);

/// True when a label bijection maps `a` onto `b` pointwise and background
/// coincides. Throws std::invalid_argument on dimension mismatch.
bool equivalent_up_to_relabeling(const LabelImage& a, const LabelImage& b);

}  // namespace quadlabel
