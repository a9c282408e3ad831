#include "antimagic/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <string>

namespace antimagic {

namespace {

constexpr std::size_t kHardEdgeCap = 20;

void check_budget(const Graph& g, std::size_t max_edges) {
    if (g.edge_count() > max_edges || g.edge_count() > kHardEdgeCap) {
        throw Error(ErrorCode::BudgetExceeded, "exhaustive search over " + std::to_string(g.edge_count()) +
                                                   " edges exceeds the budget of " + std::to_string(max_edges));
    }
}

// Vertices whose last incident edge (in id order) is e; they become fully
// labeled exactly when edge e gets its label.
std::vector<std::vector<VertexId>> completion_schedule(const Graph& g) {
    std::vector<std::vector<VertexId>> done_at(g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        EdgeId last = 0;
        for (const auto& inc : g.incident(v)) last = std::max(last, inc.edge);
        done_at[last].push_back(v);
    }
    return done_at;
}

std::size_t isolated_count(const Graph& g) {
    std::size_t c = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) c += g.degree(v) == 0 ? 1 : 0;
    return c;
}

class AntimagicSearch {
  public:
    AntimagicSearch(const Graph& g, const std::vector<std::vector<VertexId>>& done_at)
        : g_(g), done_at_(done_at), label_(g.edge_count(), 0), sum_(g.vertex_count(), 0) {
        if (isolated_count(g) == 1) finished_.push_back(0);
    }

    // Searches with edge 0 fixed to `first` (1-based). Returns false early if
    // a lower first label already succeeded elsewhere.
    bool run_from(Label first, const std::atomic<Label>* best_first) {
        best_first_ = best_first;
        first_ = first;
        return assign(0, first) && (descend(1) || (undo(0), false));
    }

    bool run_all() {
        for (Label x = 1; x <= static_cast<Label>(label_.size()); ++x) {
            if (run_from(x, nullptr)) return true;
        }
        return false;
    }

    [[nodiscard]] Labeling labeling() const { return {label_}; }

  private:
    bool cancelled() const {
        return best_first_ != nullptr && best_first_->load(std::memory_order_relaxed) < first_;
    }

    // Assigns x to edge e; false (with state restored) if a completed vertex collides.
    bool assign(EdgeId e, Label x) {
        label_[e] = x;
        used_ |= bit(x);
        sum_[g_.edge(e).u] += x;
        sum_[g_.edge(e).v] += x;
        const std::size_t mark = finished_.size();
        for (const VertexId v : done_at_[e]) {
            if (std::find(finished_.begin(), finished_.end(), sum_[v]) != finished_.end()) {
                finished_.resize(mark);
                undo_partial(e);
                return false;
            }
            finished_.push_back(sum_[v]);
        }
        marks_.push_back(mark);
        return true;
    }

    void undo(EdgeId e) {
        finished_.resize(marks_.back());
        marks_.pop_back();
        undo_partial(e);
    }

    void undo_partial(EdgeId e) {
        const Label x = label_[e];
        used_ &= ~bit(x);
        sum_[g_.edge(e).u] -= x;
        sum_[g_.edge(e).v] -= x;
        label_[e] = 0;
    }

    bool descend(EdgeId e) {
        if (e == label_.size()) return true;
        if (cancelled()) return false;
        for (Label x = 1; x <= static_cast<Label>(label_.size()); ++x) {
            if ((used_ & bit(x)) != 0) continue;
            if (!assign(e, x)) continue;
            if (descend(e + 1)) return true;
            undo(e);
        }
        return false;
    }

    static std::uint32_t bit(Label x) { return std::uint32_t{1} << x; }

    const Graph& g_;
    const std::vector<std::vector<VertexId>>& done_at_;
    std::vector<Label> label_;
    std::vector<Label> sum_;
    std::vector<Label> finished_;
    std::vector<std::size_t> marks_;
    std::uint32_t used_ = 0;
    const std::atomic<Label>* best_first_ = nullptr;
    Label first_ = 0;
};

class MinDeltaSearch {
  public:
    MinDeltaSearch(const Graph& g, const std::vector<std::vector<VertexId>>& done_at, Label bound)
        : g_(g), done_at_(done_at), sum_(g.vertex_count(), 0), used_(g.edge_count() + 1, false), best_(bound) {
        if (isolated_count(g) > 0) {
            lo_ = 0;
            hi_ = 0;
        }
    }

    void run_from(EdgeId e, Label x, std::atomic<Label>* shared) {
        shared_ = shared;
        place(e, x);
    }

    void run_all() {
        for (Label x = 1; x <= static_cast<Label>(g_.edge_count()); ++x) place(0, x);
    }

    [[nodiscard]] Label best() const { return best_; }

  private:
    Label bound() const {
        return shared_ == nullptr ? best_ : std::min(best_, shared_->load(std::memory_order_relaxed));
    }

    void place(EdgeId e, Label x) {
        used_[static_cast<std::size_t>(x)] = true;
        sum_[g_.edge(e).u] += x;
        sum_[g_.edge(e).v] += x;
        const Label saved_lo = lo_;
        const Label saved_hi = hi_;
        for (const VertexId v : done_at_[e]) {
            lo_ = std::min(lo_, sum_[v]);
            hi_ = std::max(hi_, sum_[v]);
        }
        if (hi_ < lo_ || hi_ - lo_ < bound()) {
            if (e + 1 == g_.edge_count()) {
                best_ = std::max<Label>(0, hi_ - lo_);
                if (shared_ != nullptr) {
                    Label cur = shared_->load();
                    while (best_ < cur && !shared_->compare_exchange_weak(cur, best_)) {
                    }
                }
            } else {
                for (Label y = 1; y <= static_cast<Label>(g_.edge_count()); ++y) {
                    if (!used_[static_cast<std::size_t>(y)]) place(e + 1, y);
                }
            }
        }
        lo_ = saved_lo;
        hi_ = saved_hi;
        sum_[g_.edge(e).u] -= x;
        sum_[g_.edge(e).v] -= x;
        used_[static_cast<std::size_t>(x)] = false;
    }

    const Graph& g_;
    const std::vector<std::vector<VertexId>>& done_at_;
    std::vector<Label> sum_;
    std::vector<bool> used_;
    Label lo_ = std::numeric_limits<Label>::max();
    Label hi_ = std::numeric_limits<Label>::min();
    Label best_;
    std::atomic<Label>* shared_ = nullptr;
};

AntimagicSearchResult trivial_antimagic(const Graph& g) {
    if (isolated_count(g) > 1) return {SearchStatus::NotAntimagic, std::nullopt};
    return {SearchStatus::Found, Labeling{}};
}

}  // namespace

AntimagicSearchResult brute_force_antimagic_serial(const Graph& g, std::size_t max_edges) {
    check_budget(g, max_edges);
    if (g.edge_count() == 0 || isolated_count(g) > 1) return trivial_antimagic(g);
    const auto done_at = completion_schedule(g);
    AntimagicSearch search(g, done_at);
    if (search.run_all()) return {SearchStatus::Found, search.labeling()};
    return {SearchStatus::NotAntimagic, std::nullopt};
}

AntimagicSearchResult brute_force_antimagic(const Graph& g, std::size_t max_edges) {
    check_budget(g, max_edges);
    if (g.edge_count() == 0 || isolated_count(g) > 1) return trivial_antimagic(g);
    const auto done_at = completion_schedule(g);
    const auto m = static_cast<Label>(g.edge_count());

    std::vector<std::optional<Labeling>> found(static_cast<std::size_t>(m) + 1);
    std::atomic<Label> best_first{m + 1};

#pragma omp parallel for schedule(dynamic, 1)
    for (Label first = 1; first <= m; ++first) {
        if (best_first.load(std::memory_order_relaxed) < first) continue;
        AntimagicSearch search(g, done_at);
        if (search.run_from(first, &best_first)) {
            found[static_cast<std::size_t>(first)] = search.labeling();
            Label cur = best_first.load();
            while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
            }
        }
    }

    for (Label first = 1; first <= m; ++first) {
        if (found[static_cast<std::size_t>(first)]) return {SearchStatus::Found, found[static_cast<std::size_t>(first)]};
    }
    return {SearchStatus::NotAntimagic, std::nullopt};
}

Label brute_force_min_delta_serial(const Graph& g, std::size_t max_edges) {
    check_budget(g, max_edges);
    if (g.edge_count() == 0) return 0;
    const auto done_at = completion_schedule(g);
    MinDeltaSearch search(g, done_at, std::numeric_limits<Label>::max());
    search.run_all();
    return search.best();
}

Label brute_force_min_delta(const Graph& g, std::size_t max_edges) {
    check_budget(g, max_edges);
    if (g.edge_count() == 0) return 0;
    const auto done_at = completion_schedule(g);
    const auto m = static_cast<Label>(g.edge_count());
    std::atomic<Label> shared{std::numeric_limits<Label>::max()};

#pragma omp parallel for schedule(dynamic, 1)
    for (Label first = 1; first <= m; ++first) {
        MinDeltaSearch search(g, done_at, std::numeric_limits<Label>::max());
        search.run_from(0, first, &shared);
    }
    return shared.load();
}

}  // namespace antimagic
