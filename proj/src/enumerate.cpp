#include "hilbemb/enumerate.hpp"

#include <algorithm>

#include "hilbemb/error.hpp"

namespace hilbemb {

namespace {

class IdealEnumerator {
public:
    IdealEnumerator(const RingPtr& ring, const EnumerationConstraints& c, const IdealVisitor& visit,
                    std::size_t budget)
        : ring_(ring), visit_(visit), budget_(budget) {
        const auto& r = *ring_;
        for (int d = 0; d <= r.cap(); ++d) bounds_.emplace_back(0, r.dim(d));
        for (std::size_t d = 0; d < c.size_bounds.size() && d < bounds_.size(); ++d) {
            bounds_[d].first = std::max(bounds_[d].first, c.size_bounds[d].first);
            bounds_[d].second = std::min(bounds_[d].second, c.size_bounds[d].second);
        }
        if (c.target) {
            auto t = c.target->padded(r.cap());
            for (std::size_t d = 0; d < bounds_.size(); ++d) {
                auto want = static_cast<std::size_t>(t[d]);
                bounds_[d].first = std::max(bounds_[d].first, want);
                bounds_[d].second = std::min(bounds_[d].second, want);
            }
        }
    }

    std::size_t run() {
        for (const auto& [lo, hi] : bounds_) {
            if (lo > hi) return 0;
        }
        pieces_.clear();
        descend(0);
        return visited_;
    }

private:
    // Returns false once the visitor asked to stop.
    bool descend(int d) {
        const auto& r = *ring_;
        if (d > r.cap()) {
            ++visited_;
            if (budget_ && visited_ > budget_) {
                throw BudgetExceeded("monomial ideal enumeration exceeded budget of " + std::to_string(budget_));
            }
            return visit_(MonomialIdeal(ring_, pieces_));
        }
        IndexSet forced(r.dim(d));
        if (d > 0) forced = r.growth_graph().growth(d - 1, pieces_.back());
        auto [lo, hi] = bounds_[static_cast<std::size_t>(d)];
        std::size_t have = forced.count();
        if (have > hi) return true;
        std::vector<std::size_t> free;
        for (std::size_t k = 0; k < r.dim(d); ++k) {
            if (!forced.test(k)) free.push_back(k);
        }
        std::size_t kmin = lo > have ? lo - have : 0;
        std::size_t kmax = std::min(hi - have, free.size());
        for (std::size_t k = kmin; k <= kmax; ++k) {
            std::vector<std::size_t> pick(k);
            for (std::size_t i = 0; i < k; ++i) pick[i] = i;
            while (true) {
                IndexSet piece = forced;
                for (auto i : pick) piece.set(free[i]);
                pieces_.push_back(std::move(piece));
                bool go_on = descend(d + 1);
                pieces_.pop_back();
                if (!go_on) return false;
                // next k-combination of free indices
                std::size_t i = k;
                while (i > 0 && pick[i - 1] == free.size() - k + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return true;
    }

    const RingPtr& ring_;
    const IdealVisitor& visit_;
    std::size_t budget_;
    std::vector<std::pair<std::size_t, std::size_t>> bounds_;
    std::vector<IndexSet> pieces_;
    std::size_t visited_ = 0;
};

} // namespace

std::size_t enumerate_monomial_ideals(const RingPtr& ring, const EnumerationConstraints& constraints,
                                      const IdealVisitor& visit, std::size_t budget) {
    IdealEnumerator e(ring, constraints, visit, budget);
    return e.run();
}

std::vector<MonomialIdeal> all_monomial_ideals(const RingPtr& ring, const EnumerationConstraints& constraints,
                                               std::size_t budget) {
    std::vector<MonomialIdeal> out;
    enumerate_monomial_ideals(
        ring, constraints,
        [&](const MonomialIdeal& i) {
            out.push_back(i);
            return true;
        },
        budget);
    return out;
}

std::optional<MonomialIdeal> find_ideal_with_series(const RingPtr& ring, const HilbertSeries& series) {
    std::optional<MonomialIdeal> found;
    EnumerationConstraints c;
    c.target = series.padded(ring->cap());
    enumerate_monomial_ideals(ring, c, [&](const MonomialIdeal& i) {
        found = i;
        return false;
    });
    return found;
}

} // namespace hilbemb
