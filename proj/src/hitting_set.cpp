#include "blrc/hitting_set.hpp"

#include <algorithm>

#include "blrc/bit_matrix.hpp"

namespace blrc {

namespace {

class Solver {
public:
    Solver(std::vector<BitVector> sets, std::size_t universe) : sets_(std::move(sets)), universe_(universe) {}

    std::vector<std::size_t> solve() {
        best_ = greedy();
        std::vector<std::size_t> chosen;
        BitVector forbidden(universe_);
        std::vector<std::size_t> unhit(sets_.size());
        for (std::size_t i = 0; i < unhit.size(); ++i) unhit[i] = i;
        branch(chosen, forbidden, unhit);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    std::vector<std::size_t> greedy() const {
        std::vector<std::size_t> picked;
        std::vector<bool> hit(sets_.size(), false);
        std::size_t remaining = sets_.size();
        while (remaining) {
            std::size_t best_elem = 0, best_count = 0;
            for (std::size_t e = 0; e < universe_; ++e) {
                std::size_t count = 0;
                for (std::size_t i = 0; i < sets_.size(); ++i) count += !hit[i] && sets_[i].get(e);
                if (count > best_count) {
                    best_count = count;
                    best_elem = e;
                }
            }
            picked.push_back(best_elem);
            for (std::size_t i = 0; i < sets_.size(); ++i) {
                if (!hit[i] && sets_[i].get(best_elem)) {
                    hit[i] = true;
                    --remaining;
                }
            }
        }
        return picked;
    }

    // Size of a greedily built family of pairwise disjoint unhit sets: each
    // needs its own element, so this bounds the remaining cost from below.
    std::size_t disjoint_bound(const std::vector<std::size_t>& unhit) const {
        BitVector used(universe_);
        std::size_t count = 0;
        for (auto i : unhit) {
            bool disjoint = true;
            const auto a = used.words();
            const auto b = sets_[i].words();
            for (std::size_t w = 0; w < a.size(); ++w) {
                if (a[w] & b[w]) {
                    disjoint = false;
                    break;
                }
            }
            if (disjoint) {
                used ^= sets_[i];
                ++count;
            }
        }
        return count;
    }

    void branch(std::vector<std::size_t>& chosen, BitVector& forbidden, const std::vector<std::size_t>& unhit) {
        if (unhit.empty()) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + disjoint_bound(unhit) >= best_.size()) return;

        // Branch on the unhit set with the fewest allowed elements.
        std::size_t pick = unhit.front();
        std::size_t pick_size = universe_ + 1;
        for (auto i : unhit) {
            std::size_t size = 0;
            for (auto e : sets_[i].support()) size += !forbidden.get(e);
            if (size == 0) return;
            if (size < pick_size) {
                pick_size = size;
                pick = i;
            }
        }

        std::vector<std::size_t> added;
        for (auto e : sets_[pick].support()) {
            if (forbidden.get(e)) continue;
            std::vector<std::size_t> next;
            for (auto i : unhit) {
                if (!sets_[i].get(e)) next.push_back(i);
            }
            chosen.push_back(e);
            branch(chosen, forbidden, next);
            chosen.pop_back();
            // Later branches exclude e: any solution containing e was covered above.
            forbidden.set(e);
            added.push_back(e);
        }
        for (auto e : added) forbidden.set(e, false);
    }

    std::vector<BitVector> sets_;
    std::size_t universe_;
    std::vector<std::size_t> best_;
};

}  // namespace

std::optional<std::vector<std::size_t>> minimum_hitting_set(std::span<const std::vector<std::size_t>> sets) {
    std::vector<std::size_t> elements;
    for (const auto& s : sets) {
        if (s.empty()) return std::nullopt;
        elements.insert(elements.end(), s.begin(), s.end());
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (sets.empty()) return std::vector<std::size_t>{};

    std::vector<BitVector> packed;
    packed.reserve(sets.size());
    for (const auto& s : sets) {
        BitVector v(elements.size());
        for (auto e : s) {
            v.set(static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), e) - elements.begin()));
        }
        packed.push_back(std::move(v));
    }
    auto local = Solver(std::move(packed), elements.size()).solve();
    std::vector<std::size_t> result;
    result.reserve(local.size());
    for (auto e : local) result.push_back(elements[e]);
    return result;
}

}  // namespace blrc
