#include "loops/cayley.hpp"

#include <algorithm>

namespace loops {

CayleyTable::CayleyTable(int order, std::vector<Elem> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order < 1 || order > kMaxOrder)
        throw OrderTooLarge(kMaxOrder);
    if (entries_.size() != static_cast<std::size_t>(order) * order)
        throw LengthMismatch(static_cast<std::size_t>(order) * order, entries_.size());
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            if (at(x, y) >= order)
                throw OutOfRangeEntry(x, y, at(x, y));
}

CayleyTable build_table(int order, const std::vector<int>& entries) {
    if (order < 1 || order > kMaxOrder)
        throw OrderTooLarge(kMaxOrder);
    if (entries.size() != static_cast<std::size_t>(order) * order)
        throw LengthMismatch(static_cast<std::size_t>(order) * order, entries.size());
    std::vector<Elem> bytes;
    bytes.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        int v = entries[i];
        if (v < 0 || v >= order)
            throw OutOfRangeEntry(int(i) / order, int(i) % order, v);
        bytes.push_back(Elem(v));
    }
    return CayleyTable(order, std::move(bytes));
}

Permutation::Permutation(std::vector<Elem> image) : image_(std::move(image)) {
    const std::size_t n = image_.size();
    if (n == 0 || n > static_cast<std::size_t>(kMaxOrder))
        throw OrderTooLarge(kMaxOrder);
    std::vector<bool> seen(n, false);
    for (Elem v : image_) {
        if (v >= n || seen[v])
            throw LoopError("permutation image is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<Elem> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = Elem(i);
    return Permutation(std::move(img));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.order() != b.order())
        throw OrderMismatch();
    std::vector<Elem> img(static_cast<std::size_t>(a.order()));
    for (int x = 0; x < a.order(); ++x) img[static_cast<std::size_t>(x)] = b(a(x));
    return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
    std::vector<Elem> img(static_cast<std::size_t>(p.order()));
    for (int x = 0; x < p.order(); ++x) img[p(x)] = Elem(x);
    return Permutation(std::move(img));
}

Loop::Loop(CayleyTable t, int e, std::vector<Elem> linv, std::vector<Elem> rinv)
    : table_(std::move(t)), identity_(e), left_inv_(std::move(linv)),
      right_inv_(std::move(rinv)) {}

Loop as_loop(const CayleyTable& t) {
    const int n = t.order();

    // Latin property: every row and every column is a permutation.
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), false);
        for (int y = 0; y < n; ++y) {
            Elem v = t.at(x, y);
            if (seen[v])
                throw NotAQuasigroup(true, x, v);
            seen[v] = true;
        }
    }
    for (int y = 0; y < n; ++y) {
        std::fill(seen.begin(), seen.end(), false);
        for (int x = 0; x < n; ++x) {
            Elem v = t.at(x, y);
            if (seen[v])
                throw NotAQuasigroup(false, y, v);
            seen[v] = true;
        }
    }

    int e = -1;
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = t.at(c, x) == x && t.at(x, c) == x;
        if (ok) { e = c; break; }
    }
    if (e < 0)
        throw NoIdentity();

    std::vector<Elem> linv(static_cast<std::size_t>(n)), rinv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (t.at(x, y) == e) rinv[static_cast<std::size_t>(x)] = Elem(y);  // x * x^rho = e
            if (t.at(y, x) == e) linv[static_cast<std::size_t>(x)] = Elem(y);  // x^lambda * x = e
        }
    }
    return Loop(t, e, std::move(linv), std::move(rinv));
}

Permutation Loop::left_translation(int x) const {
    std::vector<Elem> img(static_cast<std::size_t>(order()));
    for (int y = 0; y < order(); ++y) img[static_cast<std::size_t>(y)] = mul(x, y);
    return Permutation(std::move(img));
}

Permutation Loop::right_translation(int x) const {
    std::vector<Elem> img(static_cast<std::size_t>(order()));
    for (int y = 0; y < order(); ++y) img[static_cast<std::size_t>(y)] = mul(y, x);
    return Permutation(std::move(img));
}

Permutation Loop::j_rho() const { return Permutation(right_inv_); }

Permutation Loop::j_lambda() const { return Permutation(left_inv_); }

Elem Loop::power(int s, long k) const {
    int base = s;
    if (k < 0) {
        base = right_inv(s);
        k = -k;
    }
    Elem acc = Elem(identity_);
    for (long i = 0; i < k; ++i) acc = mul(acc, base);
    return acc;
}

Elem Loop::power_shift(int x, int s, long k) const {
    int base = s;
    if (k < 0) {
        base = right_inv(s);
        k = -k;
    }
    Elem acc = Elem(x);
    for (long i = 0; i < k; ++i) acc = mul(acc, base);
    return acc;
}

}  // namespace loops
