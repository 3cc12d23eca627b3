#include "hilbemb/growth.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace hilbemb {

IndexSet make_index_set(std::size_t n, std::span<const std::size_t> elems) {
    IndexSet s(n);
    for (std::size_t k : elems) s.set(k);
    return s;
}

IndexSet prefix_set(std::size_t n, std::size_t k) {
    IndexSet s(n);
    for (std::size_t i = 0; i < k && i < n; ++i) s.set(i);
    return s;
}

std::vector<std::size_t> members(const IndexSet& s) {
    std::vector<std::size_t> out;
    out.reserve(s.count());
    for (auto k = s.find_first(); k != IndexSet::npos; k = s.find_next(k)) out.push_back(k);
    return out;
}

GrowthGraph::GrowthGraph(std::vector<std::size_t> sizes, std::vector<std::vector<IndexSet>> successors)
    : sizes_(std::move(sizes)), succ_(std::move(successors)) {
    if (sizes_.empty()) throw std::invalid_argument("GrowthGraph needs at least one level");
    if (succ_.size() + 1 != sizes_.size()) throw std::invalid_argument("GrowthGraph: successor levels mismatch");
    for (std::size_t d = 0; d < succ_.size(); ++d) {
        if (succ_[d].size() != sizes_[d]) throw std::invalid_argument("GrowthGraph: level size mismatch");
        for (const auto& s : succ_[d]) {
            if (s.size() != sizes_[d + 1]) throw std::invalid_argument("GrowthGraph: successor width mismatch");
        }
    }
}

const IndexSet& GrowthGraph::successors(int d, std::size_t k) const {
    if (d < 0 || d >= top_degree()) throw std::out_of_range("growth from the top degree is not defined");
    return succ_[static_cast<std::size_t>(d)].at(k);
}

IndexSet GrowthGraph::growth(int d, const IndexSet& v) const {
    if (d < 0 || d >= top_degree()) throw std::out_of_range("growth from the top degree is not defined");
    const auto& level = succ_[static_cast<std::size_t>(d)];
    if (v.size() != level.size()) throw std::invalid_argument("growth: set width does not match level");
    IndexSet out(size(d + 1));
    for (auto k = v.find_first(); k != IndexSet::npos; k = v.find_next(k)) out |= level[k];
    return out;
}

GrowthGraph GrowthGraph::veronese(int m) const {
    if (m < 1) throw std::invalid_argument("Veronese degree must be positive");
    int top = top_degree() / m;
    std::vector<std::size_t> sizes;
    std::vector<std::vector<IndexSet>> succ;
    for (int i = 0; i <= top; ++i) sizes.push_back(size(i * m));
    for (int i = 0; i < top; ++i) {
        std::vector<IndexSet> level;
        for (std::size_t k = 0; k < size(i * m); ++k) {
            IndexSet cur(size(i * m));
            cur.set(k);
            for (int step = 0; step < m; ++step) cur = growth(i * m + step, cur);
            level.push_back(std::move(cur));
        }
        succ.push_back(std::move(level));
    }
    return GrowthGraph(std::move(sizes), std::move(succ));
}

namespace {

struct MinGrowthSearch {
    const std::vector<IndexSet>& succ;
    std::size_t r;
    std::size_t best;

    void run(std::size_t chosen, std::size_t start, const IndexSet& acc) {
        if (acc.count() >= best) return;
        if (chosen == r) {
            best = acc.count();
            return;
        }
        std::size_t n = succ.size();
        for (std::size_t i = start; i + (r - chosen) <= n; ++i) {
            IndexSet next = acc | succ[i];
            if (next.count() < best) run(chosen + 1, i + 1, next);
        }
    }
};

} // namespace

std::size_t min_growth(const GrowthGraph& g, int d, std::size_t r) {
    std::size_t n = g.size(d);
    if (r > n) throw std::out_of_range("min_growth: r exceeds the basis size");
    if (d >= g.top_degree()) throw std::out_of_range("min_growth: no growth from the top degree");
    if (r == 0) return 0;
    std::vector<IndexSet> succ;
    succ.reserve(n);
    for (std::size_t k = 0; k < n; ++k) succ.push_back(g.successors(d, k));
    // Seed the bound with the first r basis elements.
    IndexSet seed(g.size(d + 1));
    for (std::size_t k = 0; k < r; ++k) seed |= succ[k];
    MinGrowthSearch search{succ, r, seed.count() + 1};
    search.run(0, 0, IndexSet(g.size(d + 1)));
    return search.best;
}

std::vector<std::size_t> min_growth_table(const GrowthGraph& g, int d, int workers) {
    std::size_t n = g.size(d);
    std::vector<std::size_t> table(n + 1, 0);
    if (workers <= 1) {
        for (std::size_t r = 0; r <= n; ++r) table[r] = min_growth(g, d, r);
        return table;
    }
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t r = static_cast<std::size_t>(w); r <= n; r += static_cast<std::size_t>(workers)) {
                table[r] = min_growth(g, d, r);
            }
        });
    }
    pool.clear();
    return table;
}

} // namespace hilbemb
