#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace painleq {

// Immutable, shared list of variable names. The order is fixed at
// construction and induces the monomial order used everywhere.
class VarSet {
public:
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names) {
        return std::shared_ptr<const VarSet>(new VarSet(std::move(names)));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool operator==(const VarSet& other) const {
        return this == &other || names_ == other.names_;
    }

private:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace painleq
