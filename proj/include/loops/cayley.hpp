#pragma once

// Cayley-table ground layer: raw multiplication tables, validated loops
// (quasigroups with two-sided identity), permutations of the element set,
// translation maps, one-sided inverses and integer powers.
//
// Elements are 0-based indices into the table. Tables are dense, row-major,
// entries[x*n + y] = x*y. Orders above 255 are rejected so an element always
// fits in one byte.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loops {

using Elem = std::uint8_t;

inline constexpr int kMaxOrder = 255;

struct LoopError : std::runtime_error {
    explicit LoopError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfRangeEntry : LoopError {
    int row, col, value;
    OutOfRangeEntry(int r, int c, int v)
        : LoopError("table entry out of range at (" + std::to_string(r) + "," +
                    std::to_string(c) + "): " + std::to_string(v)),
          row(r), col(c), value(v) {}
};

struct LengthMismatch : LoopError {
    std::size_t expected, got;
    LengthMismatch(std::size_t e, std::size_t g)
        : LoopError("expected " + std::to_string(e) + " entries, got " +
                    std::to_string(g)),
          expected(e), got(g) {}
};

// Witness: the offending row (or column) contains some symbol twice.
struct NotAQuasigroup : LoopError {
    bool in_row;   // true: a row repeats a symbol; false: a column does
    int index;     // which row/column
    int symbol;    // the repeated symbol
    NotAQuasigroup(bool row, int idx, int sym)
        : LoopError(std::string(row ? "row " : "column ") + std::to_string(idx) +
                    " repeats symbol " + std::to_string(sym)),
          in_row(row), index(idx), symbol(sym) {}
};

struct NoIdentity : LoopError {
    NoIdentity() : LoopError("table has no two-sided identity element") {}
};

struct OrderMismatch : LoopError {
    OrderMismatch() : LoopError("permutation orders do not match") {}
};

struct OrderTooLarge : LoopError {
    int limit;
    explicit OrderTooLarge(int lim)
        : LoopError("order exceeds the supported limit " + std::to_string(lim)),
          limit(lim) {}
};

class CayleyTable {
public:
    CayleyTable(int order, std::vector<Elem> entries);

    int order() const { return order_; }
    Elem at(int x, int y) const { return entries_[static_cast<std::size_t>(x) * order_ + y]; }
    const std::vector<Elem>& entries() const { return entries_; }

    bool operator==(const CayleyTable&) const = default;

private:
    int order_;
    std::vector<Elem> entries_;
};

// Range-checks only; no algebraic validation.
CayleyTable build_table(int order, const std::vector<int>& entries);

// A bijection of 0..n-1. Mappings act on the right, xP = image[x];
// compose(a, b) applies a first, then b.
class Permutation {
public:
    explicit Permutation(std::vector<Elem> image);
    static Permutation identity(int n);

    int order() const { return int(image_.size()); }
    Elem operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
    const std::vector<Elem>& image() const { return image_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<Elem> image_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

// Validated quasigroup with two-sided identity. Immutable; both one-sided
// inverse arrays are filled at construction.
class Loop {
public:
    int order() const { return table_.order(); }
    int identity() const { return identity_; }
    Elem mul(int x, int y) const { return table_.at(x, y); }
    Elem left_inv(int x) const { return left_inv_[static_cast<std::size_t>(x)]; }    // x^lambda
    Elem right_inv(int x) const { return right_inv_[static_cast<std::size_t>(x)]; }  // x^rho
    const CayleyTable& table() const { return table_; }

    Permutation left_translation(int x) const;   // L_x : y -> x*y
    Permutation right_translation(int x) const;  // R_x : y -> y*x
    Permutation j_rho() const;     // x -> x^rho
    Permutation j_lambda() const;  // x -> x^lambda

    // s^0 = e, s^k = s^(k-1)*s; for k < 0, s^k = (s^rho)^|k|.
    Elem power(int s, long k) const;
    // x right-multiplied by s exactly k times (by s^rho |k| times when k < 0).
    Elem power_shift(int x, int s, long k) const;

    bool operator==(const Loop& o) const { return table_ == o.table_; }

    friend Loop as_loop(const CayleyTable& t);

private:
    Loop(CayleyTable t, int e, std::vector<Elem> linv, std::vector<Elem> rinv);

    CayleyTable table_;
    int identity_;
    std::vector<Elem> left_inv_;
    std::vector<Elem> right_inv_;
};

// Validates the Latin property and locates the two-sided identity.
// Throws NotAQuasigroup or NoIdentity.
Loop as_loop(const CayleyTable& t);

}  // namespace loops
