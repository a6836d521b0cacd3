#include "loops/subloop.hpp"

#include <algorithm>
#include <set>

namespace loops {

namespace {

// Worklist closure. Processing element i against all j <= i (both orders)
// covers every pair once both partners have been processed.
std::vector<Elem> close_under_ops(const Loop& l, const std::vector<Elem>& seed) {
    std::vector<bool> in(static_cast<std::size_t>(l.order()), false);
    std::vector<Elem> members;
    auto push = [&](Elem v) {
        if (!in[v]) {
            in[v] = true;
            members.push_back(v);
        }
    };
    push(Elem(l.identity()));
    for (Elem s : seed) push(s);
    for (std::size_t i = 0; i < members.size(); ++i) {
        Elem a = members[i];
        push(l.left_inv(a));
        push(l.right_inv(a));
        for (std::size_t j = 0; j <= i; ++j) {
            Elem b = members[j];
            push(l.mul(a, b));
            push(l.mul(b, a));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

std::vector<Elem> generated_subloop(const Loop& l, const std::vector<int>& seed) {
    if (seed.empty())
        throw LoopError("generated_subloop: empty seed");
    std::vector<Elem> start;
    for (int v : seed) {
        if (v < 0 || v >= l.order())
            throw LoopError("generated_subloop: seed element out of range");
        start.push_back(Elem(v));
    }
    return close_under_ops(l, start);
}

std::vector<std::vector<Elem>> all_subloops(const Loop& l) {
    // Grow the lattice from {e}: adjoining one outside element to a known
    // subloop and closing reaches every subloop.
    std::set<std::vector<Elem>> seen;
    std::vector<std::vector<Elem>> queue;
    std::vector<Elem> base = generated_subloop(l, {l.identity()});
    seen.insert(base);
    queue.push_back(base);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::vector<Elem> cur = queue[i];
        std::vector<bool> in(static_cast<std::size_t>(l.order()), false);
        for (Elem v : cur) in[v] = true;
        for (int x = 0; x < l.order(); ++x) {
            if (in[static_cast<std::size_t>(x)]) continue;
            std::vector<Elem> ext = cur;
            ext.push_back(Elem(x));
            std::vector<int> seed(ext.begin(), ext.end());
            std::vector<Elem> closed = generated_subloop(l, seed);
            if (seen.insert(closed).second)
                queue.push_back(std::move(closed));
        }
    }
    std::vector<std::vector<Elem>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

SpecialLoop SpecialLoop::make(Loop loop, std::vector<int> subset) {
    const int n = loop.order();
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    std::vector<Elem> members;
    for (int v : subset) {
        if (v < 0 || v >= n)
            throw LoopError("subloop element out of range");
        if (!mask[static_cast<std::size_t>(v)]) {
            mask[static_cast<std::size_t>(v)] = true;
            members.push_back(Elem(v));
        }
    }
    std::sort(members.begin(), members.end());

    if (!mask[static_cast<std::size_t>(loop.identity())])
        throw MissingIdentity();
    if (members.size() < 2 && members.size() != static_cast<std::size_t>(n))
        throw TrivialSubloop();
    for (Elem a : members) {
        for (Elem b : members)
            if (!mask[loop.mul(a, b)])
                throw NotClosed(a, b);
        if (!mask[loop.left_inv(a)] || !mask[loop.right_inv(a)])
            throw NotClosed(a, a);
    }
    return SpecialLoop(std::move(loop), std::move(members), std::move(mask));
}

SpecialLoop make_special(Loop loop, std::vector<int> subset) {
    return SpecialLoop::make(std::move(loop), std::move(subset));
}

Loop SpecialLoop::restricted() const {
    const int m = subloop_size();
    std::vector<int> pos(static_cast<std::size_t>(order()), -1);
    for (int i = 0; i < m; ++i) pos[subset_[static_cast<std::size_t>(i)]] = i;
    std::vector<Elem> entries(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            entries[static_cast<std::size_t>(i) * m + j] =
                Elem(pos[loop_.mul(subset_[static_cast<std::size_t>(i)], subset_[static_cast<std::size_t>(j)])]);
    return as_loop(CayleyTable(m, std::move(entries)));
}

bool is_smarandache_exponent_two(const SpecialLoop& gh) {
    const Loop& l = gh.loop();
    for (Elem s : gh.subset())
        if (l.mul(s, s) != l.identity()) return false;
    return true;
}

}  // namespace loops
