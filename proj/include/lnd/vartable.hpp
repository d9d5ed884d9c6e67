#pragma once

// A VarTable fixes the ambient polynomial ring: an ordered list of variable
// names.  Position in the list is the variable index used everywhere else;
// the monomial order treats higher indices as larger variables.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace lnd {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

class VarTable {
  public:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw std::invalid_argument("empty variable name");
            auto [it, fresh] = index_.emplace(names_[i], i);
            (void)it;
            if (!fresh) throw std::invalid_argument("duplicate variable name: " + names_[i]);
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const std::string& name) const {
        auto i = find(name);
        if (!i) throw std::out_of_range("unknown variable: " + name);
        return *i;
    }

    bool operator==(const VarTable& o) const { return names_ == o.names_; }
    bool operator!=(const VarTable& o) const { return !(*this == o); }

    // prefix0, prefix1, ..., prefixN.
    static VarTablePtr indexed(const std::string& prefix, std::size_t count) {
        std::vector<std::string> n;
        n.reserve(count);
        for (std::size_t i = 0; i < count; ++i) n.push_back(prefix + std::to_string(i));
        return std::make_shared<VarTable>(std::move(n));
    }

    static VarTablePtr of(std::vector<std::string> names) {
        return std::make_shared<VarTable>(std::move(names));
    }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_table(const VarTablePtr& a, const VarTablePtr& b) {
    if (!same_table(a, b)) throw std::invalid_argument("operands live in different rings");
}

}  // namespace lnd
