#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "dgaut/errors.hpp"

namespace dgaut {

/// A finite group given by its full multiplication table. Element 0 is the
/// identity; entry (i, j) is the product i * j.
struct GroupTable {
    int n = 0;
    std::vector<int> entries;  // row-major, n * n

    GroupTable() = default;
    GroupTable(int order, std::vector<int> e) : n(order), entries(std::move(e)) {
        if (n < 1) throw ValidationError("group order must be at least 1");
        if (static_cast<int>(entries.size()) != n * n)
            throw ValidationError("group table must have n*n entries");
    }

    int at(int i, int j) const { return entries[i * n + j]; }

    static GroupTable trivial() { return GroupTable(1, {0}); }

    static GroupTable cyclic(int order) {
        GroupTable g;
        g.n = order;
        g.entries.resize(order * order);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) g.entries[i * order + j] = (i + j) % order;
        return g;
    }

    /// Direct product with elements indexed as i_a * |b| + i_b.
    static GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
        GroupTable g;
        g.n = a.n * b.n;
        g.entries.resize(g.n * g.n);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) {
                int ia = i / b.n, ib = i % b.n;
                int ja = j / b.n, jb = j % b.n;
                g.entries[i * g.n + j] = a.at(ia, ja) * b.n + b.at(ib, jb);
            }
        return g;
    }

    bool operator==(const GroupTable&) const = default;
};

struct GroupValidation {
    bool ok = true;
    std::string detail;
};

/// Checks entry range, identity at index 0, Latin square rows/columns,
/// two-sided inverses, and associativity (naming the first failing triple).
inline GroupValidation validate(const GroupTable& g) {
    const int n = g.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = g.at(i, j);
            if (v < 0 || v >= n)
                return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") out of range"};
        }
    for (int i = 0; i < n; ++i) {
        if (g.at(0, i) != i) return {false, "0 is not a left identity at " + std::to_string(i)};
        if (g.at(i, 0) != i) return {false, "0 is not a right identity at " + std::to_string(i)};
    }
    for (int i = 0; i < n; ++i) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int j = 0; j < n; ++j) {
            if (row[g.at(i, j)]++)
                return {false, "row " + std::to_string(i) + " repeats a value"};
            if (col[g.at(j, i)]++)
                return {false, "column " + std::to_string(i) + " repeats a value"};
        }
    }
    for (int i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (int j = 0; j < n && !has_inverse; ++j)
            has_inverse = g.at(i, j) == 0 && g.at(j, i) == 0;
        if (!has_inverse) return {false, "element " + std::to_string(i) + " has no inverse"};
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
                    return {false, "associativity fails at (" + std::to_string(a) + "," +
                                       std::to_string(b) + "," + std::to_string(c) + ")"};
    return {};
}

inline int order_of(const GroupTable& g, int element) {
    int x = element, k = 1;
    while (x != 0) {
        x = g.at(x, element);
        ++k;
        if (k > g.n) throw ValidationError("order_of: not a group table");
    }
    return k;
}

/// Multiset of element orders, a cheap isomorphism invariant.
inline std::vector<int> order_profile(const GroupTable& g) {
    std::vector<int> orders;
    orders.reserve(g.n);
    for (int i = 0; i < g.n; ++i) orders.push_back(order_of(g, i));
    std::sort(orders.begin(), orders.end());
    return orders;
}

inline bool is_abelian(const GroupTable& g) {
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.at(i, j) != g.at(j, i)) return false;
    return true;
}

}  // namespace dgaut
