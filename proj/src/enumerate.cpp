#include "loops/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace loops {

namespace {

// Row/column bitmask backtracker over the free (n-1) x (n-1) block.
// candidate_order, when non-null, supplies a per-cell symbol preference
// (used by the sampling path); by default symbols are tried ascending so
// completed tables stream in lexicographic order.
struct Backtracker {
    int n;
    std::vector<Elem> grid;          // n*n, row-major
    std::vector<std::uint32_t> row_used, col_used;
    const std::function<bool(const Loop&)>* sink = nullptr;
    bool stopped = false;
    std::mt19937_64* rng = nullptr;

    explicit Backtracker(int order) : n(order) {
        grid.assign(static_cast<std::size_t>(n) * n, 0);
        row_used.assign(static_cast<std::size_t>(n), 0);
        col_used.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            grid[static_cast<std::size_t>(i)] = Elem(i);                   // row 0
            grid[static_cast<std::size_t>(i) * n] = Elem(i);               // column 0
            row_used[static_cast<std::size_t>(i)] = 1u << i;
            col_used[static_cast<std::size_t>(i)] = 1u << i;
        }
        row_used[0] = col_used[0] = (n == 32 ? ~0u : (1u << n) - 1);
    }

    void emit() {
        Loop l = as_loop(CayleyTable(n, grid));
        if (!(*sink)(l)) stopped = true;
    }

    void fill(int cell) {
        if (stopped) return;
        if (cell == n * n) {
            emit();
            return;
        }
        int r = cell / n, c = cell % n;
        if (r == 0 || c == 0) {
            fill(cell + 1);
            return;
        }
        std::uint32_t avail = ~(row_used[static_cast<std::size_t>(r)] | col_used[static_cast<std::size_t>(c)]) &
                              ((1u << n) - 1);
        if (!rng) {
            while (avail && !stopped) {
                int v = std::countr_zero(avail);
                avail &= avail - 1;
                place(cell, r, c, v);
            }
        } else {
            std::vector<int> symbols;
            std::uint32_t a = avail;
            while (a) {
                symbols.push_back(std::countr_zero(a));
                a &= a - 1;
            }
            std::shuffle(symbols.begin(), symbols.end(), *rng);
            for (int v : symbols) {
                if (stopped) break;
                place(cell, r, c, v);
            }
        }
    }

    void place(int cell, int r, int c, int v) {
        grid[static_cast<std::size_t>(cell)] = Elem(v);
        row_used[static_cast<std::size_t>(r)] |= 1u << v;
        col_used[static_cast<std::size_t>(c)] |= 1u << v;
        fill(cell + 1);
        row_used[static_cast<std::size_t>(r)] &= ~(1u << v);
        col_used[static_cast<std::size_t>(c)] &= ~(1u << v);
    }
};

}  // namespace

void for_each_loop(int order, const std::function<bool(const Loop&)>& fn) {
    if (order < 1 || order > kEnumMaxOrder) throw OrderTooLarge(kEnumMaxOrder);
    if (order == 1) {
        fn(as_loop(CayleyTable(1, {0})));
        return;
    }
    Backtracker bt(order);
    bt.sink = &fn;
    bt.fill(0);
}

std::vector<Loop> enumerate_loops(int order) {
    std::vector<Loop> out;
    for_each_loop(order, [&](const Loop& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

void for_each_special(int order, int min_h,
                      const std::function<bool(const SpecialLoop&)>& fn) {
    if (min_h < 2) min_h = 2;
    for_each_loop(order, [&](const Loop& l) {
        for (const std::vector<Elem>& h : all_subloops(l)) {
            if (int(h.size()) < min_h) continue;
            std::vector<int> subset(h.begin(), h.end());
            if (!fn(SpecialLoop::make(l, subset))) return false;
        }
        return true;
    });
}

std::vector<SpecialLoop> enumerate_special(int order, int min_h) {
    std::vector<SpecialLoop> out;
    for_each_special(order, min_h, [&](const SpecialLoop& gh) {
        out.push_back(gh);
        return true;
    });
    return out;
}

namespace {

// Applies the relabeling "element x becomes pi(x)" to the table.
std::vector<Elem> relabel_flat(const Loop& l, const std::vector<Elem>& pi) {
    const int n = l.order();
    std::vector<Elem> out(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out[static_cast<std::size_t>(pi[static_cast<std::size_t>(x)]) * n + pi[static_cast<std::size_t>(y)]] =
                pi[l.mul(x, y)];
    return out;
}

// Visits every bijection sending the identity to 0.
void for_each_identity_fixing_relabel(
    const Loop& l, const std::function<void(const std::vector<Elem>&)>& fn) {
    const int n = l.order();
    std::vector<Elem> rest;
    for (int x = 0; x < n; ++x)
        if (x != l.identity()) rest.push_back(Elem(x));
    std::vector<Elem> targets(rest.size());
    for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = Elem(i + 1);
    auto pi = std::vector<Elem>(static_cast<std::size_t>(n));
    do {
        pi[static_cast<std::size_t>(l.identity())] = 0;
        for (std::size_t i = 0; i < rest.size(); ++i) pi[rest[i]] = targets[i];
        fn(pi);
    } while (std::next_permutation(targets.begin(), targets.end()));
}

}  // namespace

std::vector<Elem> canonical_key(const Loop& l) {
    if (l.order() > kEnumMaxOrder) throw OrderTooLarge(kEnumMaxOrder);
    std::vector<Elem> best;
    for_each_identity_fixing_relabel(l, [&](const std::vector<Elem>& pi) {
        std::vector<Elem> flat = relabel_flat(l, pi);
        if (best.empty() || flat < best) best = std::move(flat);
    });
    return best;
}

namespace {

// Canonical key plus the lexicographically least image of the subloop among
// the relabelings attaining that key, so isomorphic (G, H) pairs collide.
std::pair<std::vector<Elem>, std::vector<Elem>> canonical_pair_key(
    const Loop& l, const std::vector<Elem>& subloop) {
    std::vector<Elem> best;
    std::vector<Elem> best_sub;
    for_each_identity_fixing_relabel(l, [&](const std::vector<Elem>& pi) {
        std::vector<Elem> flat = relabel_flat(l, pi);
        if (!best.empty() && flat > best) return;
        std::vector<Elem> sub;
        sub.reserve(subloop.size());
        for (Elem h : subloop) sub.push_back(pi[h]);
        std::sort(sub.begin(), sub.end());
        if (best.empty() || flat < best || sub < best_sub) {
            best = std::move(flat);
            best_sub = std::move(sub);
        }
    });
    return {best, best_sub};
}

FindingFlags compute_flags(const SpecialLoop& gh) {
    FindingFlags f;
    f.s2_bol = check(gh, Prop::S2_BOL).holds;
    f.bol = check(gh, Prop::BOL).holds;
    f.s2_rip = check(gh, Prop::S2_RIP).holds;
    f.s2_rap = check(gh, Prop::S2_RAP).holds;
    f.exponent2 = is_smarandache_exponent_two(gh);
    return f;
}

void scan_loop_for_findings(const Loop& l, std::uint64_t loop_index, int order,
                            bool exhaustive, SearchOrderStats& stats,
                            std::set<std::pair<std::vector<Elem>, std::vector<Elem>>>& seen,
                            std::vector<Finding>& findings) {
    int bol_state = -1;  // lazily computed: 0 fails, 1 holds
    for (const std::vector<Elem>& h : all_subloops(l)) {
        if (h.size() < 2 || int(h.size()) == l.order()) continue;
        ++stats.pairs_scanned;
        std::vector<int> subset(h.begin(), h.end());
        SpecialLoop gh = SpecialLoop::make(l, subset);
        // restricted identity first: the sweep is |G|^2 |H| against |G|^3
        if (!check(gh, Prop::S2_BOL).holds) continue;
        if (bol_state < 0)
            bol_state = check(gh, Prop::BOL).holds ? 1 : 0;
        if (bol_state == 1) continue;
        // beyond the canonical-key cap duplicates are only caught verbatim
        auto key = l.order() <= kEnumMaxOrder
                       ? canonical_pair_key(l, h)
                       : std::pair(l.table().entries(), h);
        if (!seen.insert(key).second) continue;
        findings.push_back(Finding{l, h, compute_flags(gh), key.first,
                                   key.second, order, loop_index, exhaustive});
        ++stats.findings;
    }
}

}  // namespace

SearchOutcome search_s2bl_not_bol(int max_order, const SearchOptions& opt) {
    SearchOutcome out;
    std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> seen;
    for (int order = std::max(1, opt.min_order); order <= max_order; ++order) {
        SearchOrderStats stats;
        stats.order = order;
        if (order <= kEnumMaxOrder) {
            stats.exhaustive = true;
            std::uint64_t idx = 0;
            for_each_loop(order, [&](const Loop& l) {
                scan_loop_for_findings(l, idx++, order, true, stats, seen,
                                       out.findings);
                return true;
            });
            stats.loops_scanned = idx;
        } else {
            // sampling fallback: seeded random completions, deduplicated on
            // the raw table (canonical keys are capped at the exhaustive
            // orders)
            stats.exhaustive = false;
            std::mt19937_64 rng(opt.seed + std::uint64_t(order));
            std::set<std::vector<Elem>> tables;
            std::uint64_t idx = 0;
            for (int i = 0; i < opt.samples_per_order; ++i) {
                Backtracker bt(order);
                bt.rng = &rng;
                std::function<bool(const Loop&)> take = [&](const Loop& l) {
                    if (tables.insert(l.table().entries()).second)
                        scan_loop_for_findings(l, idx++, order, false, stats,
                                               seen, out.findings);
                    return false;  // first completed square per restart
                };
                bt.sink = &take;
                bt.fill(0);
            }
            stats.loops_scanned = idx;
        }
        out.per_order.push_back(stats);
    }
    return out;
}

}  // namespace loops
