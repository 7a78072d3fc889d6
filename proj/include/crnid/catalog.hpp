#ifndef CRNID_CATALOG_HPP
#define CRNID_CATALOG_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace crnid {

// Role of a catalog variable. Roles partition the index set; ordering of the
// blocks (states before covariances before rates before slacks) is what the
// default term order ties are broken by.
enum class VarRole : std::uint8_t {
    State,           // x_j
    Covariance,      // p_{ab}, a <= b
    Rate,            // k_i
    Slack,           // y_j
    StateCopy,       // x_{j,c}, per-component copy
    CovarianceCopy,  // p_{ab,c}, per-component copy
};

struct VarInfo {
    std::string name;
    VarRole role = VarRole::State;
    // Role payload, 1-based: states use a (=j); covariances use (a,b) with
    // a <= b; rates use a (=i); slacks use a (=j); copies add the component.
    std::int16_t a = 0;
    std::int16_t b = 0;
    std::int16_t component = 0;
};

class Catalog;
using CatalogPtr = std::shared_ptr<const Catalog>;

// Immutable ordered list of named variables. Index 0 is the largest
// variable under every supported term order. Polynomials hold a CatalogPtr
// and refuse to combine across structurally different catalogs.
class Catalog {
  public:
    static CatalogPtr make(std::vector<VarInfo> vars);

    int size() const { return static_cast<int>(vars_.size()); }
    const VarInfo& var(int i) const { return vars_[static_cast<size_t>(i)]; }
    const std::string& name(int i) const { return vars_[static_cast<size_t>(i)].name; }

    // Index of a name, or -1.
    int find(std::string_view name) const;

    // Indices carrying the given role, in catalog order.
    std::vector<int> indices_of(VarRole role) const;

    bool same_as(const Catalog& other) const;

  private:
    explicit Catalog(std::vector<VarInfo> vars);
    std::vector<VarInfo> vars_;
    std::unordered_map<std::string, int> by_name_;
};

// True when two catalog handles are interchangeable (same object or
// structurally equal).
bool compatible(const CatalogPtr& a, const CatalogPtr& b);

}  // namespace crnid

#endif
