#pragma once

#include <string>
#include <vector>

#include "dgaut/derivation.hpp"

namespace dgaut {

/// A free graded-commutative algebra with a candidate differential.
struct Presentation {
    TablePtr table;
    Derivation d;

    Presentation(TablePtr t, Derivation deriv) : table(std::move(t)), d(std::move(deriv)) {
        require_same_table(table, d.table(), "Presentation");
    }
};

struct CertifyEntry {
    std::string generator;
    bool degree_ok = false;
    Element<Rational> residual;  // d(d(generator))

    bool ok() const { return degree_ok && residual.is_zero(); }
};

struct CertifyReport {
    std::vector<CertifyEntry> entries;

    bool ok() const {
        for (const auto& e : entries)
            if (!e.ok()) return false;
        return true;
    }

    /// Human-readable description of the first failure, empty when clean.
    std::string first_failure() const {
        for (const auto& e : entries) {
            if (!e.degree_ok)
                return "d(" + e.generator + ") is not homogeneous of degree |" + e.generator +
                       "| + 1";
            if (!e.residual.is_zero())
                return "d(d(" + e.generator + ")) = " + e.residual.str();
        }
        return {};
    }
};

/// Checks the degree table invariant and d^2 = 0, one entry per generator.
inline CertifyReport certify(const Presentation& p) {
    CertifyReport report;
    for (int g = 0; g < p.table->size(); ++g) {
        CertifyEntry entry{p.table->name(g), p.d.degree_ok(g), p.d.apply(p.d.image(g))};
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace dgaut
