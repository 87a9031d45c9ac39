#include "quadlabel/oracle.hpp"

#include <stdexcept>
#include <unordered_map>

namespace quadlabel {

LabelImage label_reference(const BinaryImage& img) {
    LabelImage out = LabelImage::zeros(img.width, img.height);
    if (img.width == 0 || img.height == 0) return out;

    // First pass: provisional labels plus equivalences.
    std::vector<Label> provisional(static_cast<std::size_t>(img.width) * img.height, 0);
    Label next = 0;
    DisjointSet uf(static_cast<std::size_t>(img.width) * img.height / 2 + 2);

    auto prov = [&](int r, int c) -> Label {
        if (r < 0 || c < 0 || c >= img.width) return 0;
        return provisional[static_cast<std::size_t>(r) * img.width + c];
    };

    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            if (!img.at(r, c)) continue;
            Label nb[4] = {prov(r - 1, c - 1), prov(r - 1, c), prov(r - 1, c + 1), prov(r, c - 1)};
            Label chosen = 0;
            for (Label l : nb)
                if (l && (chosen == 0 || l < chosen)) chosen = l;
            if (chosen == 0) {
                chosen = ++next;
            } else {
                for (Label l : nb)
                    if (l) uf.unite(chosen, l);
            }
            provisional[static_cast<std::size_t>(r) * img.width + c] = chosen;
        }
    }

    // Second pass: map roots to dense labels in first-touch raster order.
    std::vector<Label> dense(static_cast<std::size_t>(next) + 1, 0);
    Label assigned = 0;
    for (std::size_t i = 0; i < provisional.size(); ++i) {
        if (!provisional[i]) continue;
        Label root = uf.find(provisional[i]);
        if (dense[root] == 0) dense[root] = ++assigned;
        out.data[i] = dense[root];
    }
    return out;
}

bool equivalent_up_to_relabeling(const LabelImage& a, const LabelImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("label images differ in dimensions");

    std::unordered_map<Label, Label> fwd;
    std::unordered_map<Label, Label> rev;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const Label la = a.data[i];
        const Label lb = b.data[i];
        if ((la == 0) != (lb == 0)) return false;
        if (la == 0) continue;
        auto [fit, finserted] = fwd.try_emplace(la, lb);
        if (!finserted && fit->second != lb) return false;
        auto [rit, rinserted] = rev.try_emplace(lb, la);
        if (!rinserted && rit->second != la) return false;
    }
    return true;
}

}  // namespace quadlabel
