#pragma once

#include <cassert>
#include <vector>

#include "quadlabel/types.hpp"

namespace quadlabel {

/// One table write: cell `address` receives `data` (address > data).
struct TableWrite {
    Label address = 0;
    Label data = 0;

    friend bool operator==(const TableWrite&, const TableWrite&) = default;
};

/// One chain stack entry (larger > smaller).
struct StackPush {
    Label larger = 0;
    Label smaller = 0;

    friend bool operator==(const StackPush&, const StackPush&) = default;
};

/// label -> label map over 0..2^bits-1, identity initialised.
/// Cells only ever point downward (table[x] <= x).
class EquivalenceTable {
public:
    explicit EquivalenceTable(int bits = 10) : bits_(bits) {
        assert(bits >= 1 && bits <= 16);
        cells_.resize(std::size_t(1) << bits_);
        init_identity();
    }

    void init_identity() {
        for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] = static_cast<Label>(i);
    }

    void record(const TableWrite& w) {
        assert(w.address > w.data);
        cells_[w.address] = w.data;
    }

    /// Chain repair: the stored datum is recoded through the table, the
    /// address is not. Returns the value written.
    Label resolve_chain(Label larger, Label smaller) {
        assert(larger > smaller);
        const Label data = cells_[smaller];
        cells_[larger] = data;
        return data;
    }

    Label recode_one(Label x) const { return cells_[x]; }

    LabelGroup recode(const LabelGroup& g) const {
        LabelGroup out = g;
        for (auto& l : out.labels) l = cells_[l];
        return out;
    }

    /// Recode through to the roots. Between line drains an entry can sit one
    /// level deep; chasing keeps re-read labels current so a merged-away
    /// label can never resurface in a context.
    LabelGroup recode_roots(const LabelGroup& g) const {
        LabelGroup out = g;
        for (auto& l : out.labels) l = root_of(l);
        return out;
    }

    /// In ascending cell order, replace each cell with its own target's cell.
    /// For a downward-pointing table this flattens every chain completely.
    void final_recode() {
        for (std::size_t x = 0; x < cells_.size(); ++x) cells_[x] = cells_[cells_[x]];
    }

    /// Follow cells to the fixpoint. Downward pointers make this terminate.
    Label root_of(Label x) const {
        while (cells_[x] != x) x = cells_[x];
        return x;
    }

    Label at(Label x) const { return cells_[x]; }
    std::size_t size() const { return cells_.size(); }
    int bits() const { return bits_; }
    Label max_label() const { return static_cast<Label>(cells_.size() - 1); }

    bool downward_pointing() const {
        for (std::size_t x = 0; x < cells_.size(); ++x)
            if (cells_[x] > x) return false;
        return true;
    }
    bool idempotent() const {
        for (std::size_t x = 0; x < cells_.size(); ++x)
            if (cells_[cells_[x]] != cells_[x]) return false;
        return true;
    }

    friend bool operator==(const EquivalenceTable&, const EquivalenceTable&) = default;

private:
    int bits_;
    std::vector<Label> cells_;
};

/// Two table banks swapped between frames so one can be recoded and
/// reinitialised while the other operates.
class BankPair {
public:
    enum class Phase { operating, final_recode, initialising, ready };

    explicit BankPair(int bits = 10) : banks_{EquivalenceTable(bits), EquivalenceTable(bits)} {}

    /// Swap roles at frame start. Fails when the standby bank has not been
    /// brought back to identity within the inter-frame budget.
    FrameStatus begin_frame() {
        const int standby = 1 - active_;
        if (phase_[standby] != Phase::ready) return FrameStatus::bank_not_ready;
        active_ = standby;
        phase_[active_] = Phase::operating;
        return FrameStatus::ok;
    }

    /// Retire the operating bank: final recode (the caller snapshots the
    /// result), then identity reinitialisation back to ready.
    void finish_frame() {
        phase_[active_] = Phase::final_recode;
        banks_[active_].final_recode();
    }
    void reinitialise_retired() {
        phase_[active_] = Phase::initialising;
        banks_[active_].init_identity();
        phase_[active_] = Phase::ready;
    }

    EquivalenceTable& operating() { return banks_[active_]; }
    const EquivalenceTable& operating() const { return banks_[active_]; }
    int active_index() const { return active_; }
    Phase phase(int bank) const { return phase_[bank]; }

private:
    EquivalenceTable banks_[2];
    Phase phase_[2] = {Phase::ready, Phase::ready};
    int active_ = 1;  // first begin_frame() lands on bank 0
};

}  // namespace quadlabel
