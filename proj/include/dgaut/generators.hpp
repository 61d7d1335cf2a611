#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgaut/errors.hpp"

namespace dgaut {

/// A named generator of a free graded-commutative algebra.
struct GeneratorInfo {
    std::string name;
    int degree = 0;

    bool operator==(const GeneratorInfo&) const = default;
};

namespace detail {

inline bool valid_generator_name(std::string_view name) {
    if (name.empty()) return false;
    auto head = name.front();
    if (!(std::isalpha(static_cast<unsigned char>(head)) || head == '_')) return false;
    // No '-', '+', '*', '^', '/' or whitespace: names must tokenize cleanly
    // inside the polynomial syntax.
    for (char c : name) {
        bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
                  c == '.';
        if (!ok) return false;
    }
    return true;
}

}  // namespace detail

/// Immutable ordered list of generators. The list order is the canonical
/// symbol order used for monomial normalization and serialization.
class GeneratorTable {
  public:
    explicit GeneratorTable(std::vector<GeneratorInfo> gens) : gens_(std::move(gens)) {
        for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
            const auto& g = gens_[i];
            if (!detail::valid_generator_name(g.name))
                throw ValidationError("invalid generator name '" + g.name + "'");
            if (g.degree <= 0)
                throw ValidationError("generator '" + g.name + "' must have positive degree");
            if (!index_.emplace(g.name, i).second)
                throw ValidationError("duplicate generator name '" + g.name + "'");
        }
    }

    int size() const { return static_cast<int>(gens_.size()); }
    const GeneratorInfo& gen(int i) const { return gens_.at(i); }
    const std::string& name(int i) const { return gens_.at(i).name; }
    int degree(int i) const { return gens_.at(i).degree; }
    bool is_odd(int i) const { return degree(i) % 2 != 0; }

    std::optional<int> find(std::string_view name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int require(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw ParseError("unknown generator '" + std::string(name) + "'");
    }

    bool operator==(const GeneratorTable& other) const { return gens_ == other.gens_; }

  private:
    std::vector<GeneratorInfo> gens_;
    std::map<std::string, int, std::less<>> index_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

inline TablePtr make_table(std::vector<GeneratorInfo> gens) {
    return std::make_shared<const GeneratorTable>(std::move(gens));
}

/// Tables match when they are the same object or have identical content.
inline bool same_table(const TablePtr& a, const TablePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

inline void require_same_table(const TablePtr& a, const TablePtr& b, const char* where) {
    if (!same_table(a, b))
        throw TableMismatchError(std::string(where) + ": operands use different generator tables");
}

}  // namespace dgaut
