#ifndef CRNID_CRN_HPP
#define CRNID_CRN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crnid/poly_matrix.hpp"
#include "crnid/polynomial.hpp"

namespace crnid {

struct Reaction {
    std::vector<int> reactant;  // per-species molecule counts consumed
    std::vector<int> product;   // per-species molecule counts produced
    std::string rate_symbol;    // user-facing name, mapped to k_i internally
};

// Mass-action reaction network: species, reactions, rate symbols. The
// internal rate indexing k_1..k_r follows declaration order.
struct CrnModel {
    std::vector<std::string> species;
    std::vector<Reaction> reactions;
    std::string source;  // file name or label, informational

    int num_species() const { return static_cast<int>(species.size()); }
    int num_reactions() const { return static_cast<int>(reactions.size()); }

    // S[j][i] = product - reactant molecules of species j in reaction i.
    std::vector<std::vector<int>> stoichiometry() const;

    int species_index(std::string_view name) const;  // -1 if absent
    int rate_index(std::string_view symbol) const;    // -1 if absent

    // Throws PreconditionError on invariant violations (empty network,
    // duplicate rate symbols, a no-op reaction, negative stoichiometry).
    void validate() const;
};

enum class RateSign { StrictPositive, NonNegative };

// Declarative description of the admissible rate set K as parsed from a CRN
// file; lifted into slack-variable polynomials by the certify module.
struct KSpec {
    std::vector<RateSign> signs;                      // one per rate
    std::optional<std::pair<int, int>> exactly_one;   // 0-based rate indices

    static KSpec all_positive(int r) { return {std::vector<RateSign>(size_t(r), RateSign::StrictPositive), std::nullopt}; }
};

// Extrinsic-noise declaration: finite U with weights, the known rate
// modulation g (polynomials in u evaluated at rational points), and
// constitutive-reporter parameters.
struct ExtrinsicSpec {
    int dim = 0;                                  // s
    std::vector<std::vector<Rational>> points;    // U, each of length s
    std::vector<Rational> weights;                // rho, same length as points
    CatalogPtr u_catalog;                         // u1..us
    std::vector<Polynomial> g;                    // r entries over u_catalog
    std::vector<Rational> alpha;                  // s positive reporter gains
    Rational gamma = 1;

    int num_points() const { return static_cast<int>(points.size()); }
    // g evaluated at U[c]; componentwise >= 0 enforced by validate().
    std::vector<Rational> g_at(int c) const;
    // All g components strictly positive at every point of U.
    bool g_strictly_positive() const;
    void validate(int num_rates) const;
};

struct ParsedCrn {
    CrnModel model;
    KSpec constraints;  // defaults to all-positive
    std::optional<ExtrinsicSpec> extrinsic;
};

// Parses the line-oriented CRN description language. Diagnostics carry
// 1-based line/column. `source_name` labels the model.
ParsedCrn parse_crn(std::string_view text, std::string source_name = "");

// Canonical text form; parse_crn(to_text(p)) reconstructs an equal model.
std::string to_text(const ParsedCrn& parsed);

// Catalog over x-block, p-block (upper triangle), k-block, y-block, in that
// (descending) significance order.
CatalogPtr make_crn_catalog(const CrnModel& m, int slack_count);

// Catalog index helpers; 1-based species/rate arguments, a <= b for
// covariances. Throw UnknownVariableError when absent.
int state_var(const CatalogPtr& cat, int j);
int cov_var(const CatalogPtr& cat, int a, int b);
int rate_var(const CatalogPtr& cat, int i);
int slack_var(const CatalogPtr& cat, int j);

// Mass-action propensities q_i = k_i * prod_j x_j^{reactant_ji}.
std::vector<Polynomial> propensities(const CrnModel& m, const CatalogPtr& cat, TermOrder ord = {});
std::vector<Polynomial> propensities(const CrnModel& m);

// Drift f = S q; linear in the rate block.
std::vector<Polynomial> drift(const CrnModel& m, const CatalogPtr& cat, TermOrder ord = {});
std::vector<Polynomial> drift(const CrnModel& m);

// Diffusion matrix S diag(q) S^T; symmetric, linear in the rate block.
PolyMatrix diffusion(const CrnModel& m, const CatalogPtr& cat, TermOrder ord = {});
PolyMatrix diffusion(const CrnModel& m);

// The stationary-moment matrix: (n^2+3n)/2 rows (n drift rows, then the
// n(n+1)/2 upper-triangle Lyapunov rows in row-major order) by r columns;
// entries are k-free polynomials in x and p with A k reproducing the
// stacked stationary residuals.
struct StationaryMatrix {
    PolyMatrix A;
    std::vector<std::string> row_labels;
};

StationaryMatrix stationary_matrix(const CrnModel& m, const CatalogPtr& cat, TermOrder ord = {});
StationaryMatrix stationary_matrix(const CrnModel& m);

}  // namespace crnid

#endif
