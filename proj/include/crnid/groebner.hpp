#ifndef CRNID_GROEBNER_HPP
#define CRNID_GROEBNER_HPP

#include <deque>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "crnid/polynomial.hpp"

namespace crnid {

// Multivariate division remainder: no monomial of the result is divisible
// by any leading monomial of G; p minus the result lies in <G>. Total
// function; zero and constant inputs pass through untouched when no leading
// monomial divides them.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G, TermOrder ord);

// lcm(LM f, LM g)/LT f * f - lcm(LM f, LM g)/LT g * g, content-normalized.
// Throws PreconditionError on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, TermOrder ord);

// Generating set: nonzero, content-normalized, duplicates removed, feed
// order preserved. nominal_count remembers how many generators the ideal
// was described by before canonicalization dropped zeros/duplicates.
struct IdealGenerators {
    CatalogPtr catalog;
    std::vector<Polynomial> gens;
    unsigned long long nominal_count = 0;

    static IdealGenerators from(CatalogPtr cat, std::vector<Polynomial> raw);
};

struct BuchbergerOptions {
    bool early_unit_abort = true;
    unsigned long long max_pairs = 1'000'000;
    int max_total_degree = 60;
    double max_seconds = 0.0;  // 0 = no wall-clock cap
    int threads = 1;
    bool track_cofactors = false;  // audit output; forces single-threaded runs

    // Catalog indices of variables the caller asserts are invertible modulo
    // the ideal (e.g. v appearing in a generator v*y^2 - 1). Any single-term
    // basis element supported on these variables then implies 1 lies in the
    // ideal, and the engine treats it as a unit; the engine additionally
    // probes periodically whether a power of the product of these variables
    // already reduces to zero, which detects membership well before such an
    // element surfaces. Soundness of the assertion is the caller's
    // responsibility.
    std::vector<int> invertible_vars;
    int unit_probe_max_power = 4;          // highest product power probed
    unsigned long long probe_interval = 64;  // pairs between probes (0 = off)

    // Process pairs whose lcm avoids slack-role variables first. A pure
    // selection-strategy tweak: every queued pair is still processed, so
    // completion and the final basis are unaffected, but ideals built from
    // slack-variable lifts typically reach a unit far sooner.
    bool defer_slack_pairs = true;
};

struct BuchbergerStats {
    unsigned long long pairs_processed = 0;
    unsigned long long reductions_to_zero = 0;
    int max_degree = 0;
    double wall_ms = 0.0;
    unsigned long long generators_fed = 0;
    unsigned long long basis_size = 0;
    bool unit_found = false;
};

enum class GbStatus { Complete, UnitFound, PairBudget, DegreeBudget, TimeBudget, Paused };

inline bool budget_exhausted(GbStatus s) {
    return s == GbStatus::PairBudget || s == GbStatus::DegreeBudget || s == GbStatus::TimeBudget;
}

struct GroebnerBasis {
    CatalogPtr catalog;
    TermOrder order;
    std::vector<Polynomial> elements;  // monic
    bool reduced = false;
    BuchbergerStats stats;

    bool is_unit() const {
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
};

// Buchberger's completion with Gebauer-Moller pair pruning and the normal
// selection strategy. Supports incremental generator feeding: add a batch,
// run(), inspect, add more; the basis is resumed, not recomputed.
class BuchbergerEngine {
  public:
    BuchbergerEngine(CatalogPtr cat, TermOrder ord, BuchbergerOptions opts = {});
    BuchbergerEngine(const BuchbergerEngine&) = delete;
    BuchbergerEngine& operator=(const BuchbergerEngine&) = delete;

    void add_generators(std::span<const Polynomial> gens);

    // Processes queued generators and pairs until completion, unit found
    // (when early_unit_abort), or a budget trips. With stop_at_deferred the
    // run pauses once only deferred (slack-touching) pairs remain, letting
    // callers feed further generator batches before committing to the
    // expensive sector; Paused is returned in that case.
    GbStatus run(bool stop_at_deferred = false);

    bool unit_found() const { return unit_found_; }
    const BuchbergerStats& stats() const { return stats_; }
    const BuchbergerOptions& options() const { return opts_; }
    const TermOrder& order() const { return ord_; }

    // Current (not necessarily reduced) basis, monic. {1} once a unit was
    // found. Cofactors (when tracked) express each element over the
    // generators in feed order.
    GroebnerBasis snapshot() const;
    std::vector<std::vector<Polynomial>> cofactors() const;

  private:
    struct BasisEntry {
        Polynomial poly;  // content-normalized
        Monomial lm;
        std::uint64_t mask;  // folded support mask of lm
        int sugar;
        bool redundant;
        bool tainted;  // any slack-role variable anywhere in the polynomial
    };
    struct Pair {
        int i, j;
        Monomial lcm;
        int degree;
        int sugar;
        bool deferred;
    };
    struct PairLess {
        const BuchbergerEngine* eng;
        bool operator()(const Pair& a, const Pair& b) const;
    };

    // Full normal form against basis_[0..limit); tracks the sugar degree of
    // the result. With `lambda` the arithmetic is exact and the cofactor
    // expansion over the original generators is maintained.
    Polynomial reduce_full(Polynomial p, int sugar_in, int* sugar_out,
                           std::vector<Polynomial>* lambda, size_t limit) const;
    void add_basis_element(Polynomial h, int sugar, std::vector<Polynomial> cof);
    void found_unit();
    GbStatus drain_inbox();
    bool over_time() const;
    Polynomial make_spoly(const Pair& pr, std::vector<Polynomial>* cof) const;
    bool implies_unit(const Polynomial& p) const;
    bool is_tainted(const Polynomial& p) const;
    bool lcm_touches_slack(const Monomial& lcm) const;
    // Membership probe: does some power of the invertible-variable product
    // reduce to zero against the current basis? Fires found_unit() on
    // success. Bounded work; failure is inconclusive.
    bool probe_unit();
    bool monomial_reduces_to_zero(const Monomial& m, size_t limit, size_t max_steps) const;

    CatalogPtr cat_;
    TermOrder ord_;
    BuchbergerOptions opts_;
    BuchbergerStats stats_;

    std::deque<BasisEntry> basis_;  // stable references across push_back
    std::vector<std::vector<Polynomial>> cofs_;  // per basis element, when tracked
    std::set<Pair, PairLess> pairs_;
    std::deque<Polynomial> inbox_;
    std::deque<std::vector<Polynomial>> inbox_cofs_;
    unsigned long long fed_ = 0;
    unsigned long long pairs_at_last_probe_ = 0;
    std::vector<bool> invertible_;
    std::uint64_t slack_mask_ = 0;
    bool unit_found_ = false;
    double elapsed_before_run_ms_ = 0.0;
    mutable double run_start_ms_ = 0.0;
};

struct BuchbergerResult {
    GbStatus status;
    GroebnerBasis basis;  // partial when a budget tripped
};

// One-shot Buchberger on a generator list.
BuchbergerResult buchberger(const IdealGenerators& gens, TermOrder ord,
                            const BuchbergerOptions& opts = {});

// The unique reduced Groebner basis for (ideal, order): minimal,
// inter-reduced, monic, sorted by ascending leading monomial.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

struct TrivialityResult {
    enum class Kind { Trivial, NotTrivial, BudgetExhausted };
    Kind kind;
    // Reduced basis: evidence for NotTrivial, {1} for Trivial (absent when
    // the budget tripped).
    std::optional<GroebnerBasis> basis;
    BuchbergerStats stats;
    GbStatus engine_status = GbStatus::Complete;

    bool trivial() const { return kind == Kind::Trivial; }
};

// Nullstellensatz emptiness test: the ideal contains 1 iff the reduced
// Groebner basis is {1}.
TrivialityResult is_trivial(const IdealGenerators& gens, TermOrder ord,
                            const BuchbergerOptions& opts = {});

}  // namespace crnid

#endif
