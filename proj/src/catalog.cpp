#include "crnid/catalog.hpp"

#include "crnid/error.hpp"

namespace crnid {

Catalog::Catalog(std::vector<VarInfo> vars) : vars_(std::move(vars)) {
    by_name_.reserve(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name.empty())
            throw PreconditionError("catalog variable with empty name");
        auto [it, inserted] = by_name_.emplace(vars_[i].name, static_cast<int>(i));
        if (!inserted)
            throw PreconditionError("duplicate catalog variable name '" + vars_[i].name + "'");
    }
}

CatalogPtr Catalog::make(std::vector<VarInfo> vars) {
    return CatalogPtr(new Catalog(std::move(vars)));
}

int Catalog::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? -1 : it->second;
}

std::vector<int> Catalog::indices_of(VarRole role) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (vars_[static_cast<size_t>(i)].role == role) out.push_back(i);
    return out;
}

bool Catalog::same_as(const Catalog& other) const {
    if (this == &other) return true;
    if (vars_.size() != other.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i) {
        const VarInfo& u = vars_[i];
        const VarInfo& v = other.vars_[i];
        if (u.name != v.name || u.role != v.role) return false;
    }
    return true;
}

bool compatible(const CatalogPtr& a, const CatalogPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

}  // namespace crnid
