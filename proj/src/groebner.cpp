#include "crnid/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "crnid/error.hpp"

namespace crnid {

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

struct DegreeBreach {};

// result := a*h[from..] + b*(m*g); both inputs sorted strictly descending
// under ord. h is consumed; when a == 1 its coefficients are moved, which
// is the common case for monic reducers. Tracks the maximum total degree
// seen so callers can enforce the degree budget.
std::vector<Term> fused_vec(const TermOrder& ord, const Rational& a, std::vector<Term>&& h,
                            size_t from, const Rational& b, const Monomial& m,
                            const std::vector<Term>& g, int* max_degree) {
    std::vector<Term> out;
    out.reserve(h.size() - from + g.size());
    const bool a_is_one = a == 1;
    size_t i = from, j = 0;
    while (i < h.size() || j < g.size()) {
        int take;  // -1: h, +1: g, 0: both
        Monomial gm;
        if (i >= h.size()) {
            take = 1;
            gm = Monomial::mul(m, g[j].mono);
        } else if (j >= g.size()) {
            take = -1;
        } else {
            gm = Monomial::mul(m, g[j].mono);
            int cmp = ord.compare(h[i].mono, gm);
            take = cmp > 0 ? -1 : (cmp < 0 ? 1 : 0);
        }
        if (take < 0) {
            if (max_degree) *max_degree = std::max(*max_degree, h[i].mono.degree());
            if (a_is_one)
                out.push_back(std::move(h[i]));
            else
                out.push_back({a * h[i].coeff, std::move(h[i].mono)});
            ++i;
        } else if (take > 0) {
            Rational c = b * g[j].coeff;
            if (c != 0) {
                if (max_degree) *max_degree = std::max(*max_degree, gm.degree());
                out.push_back({std::move(c), std::move(gm)});
            }
            ++j;
        } else {
            Rational c = a_is_one ? Rational(h[i].coeff + b * g[j].coeff)
                                  : Rational(a * h[i].coeff + b * g[j].coeff);
            if (c != 0) {
                if (max_degree) *max_degree = std::max(*max_degree, gm.degree());
                out.push_back({std::move(c), std::move(gm)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

Integer coeff_gcd_num(const Rational& a, const Rational& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    return g;
}

void scale_terms(std::vector<Term>& terms, const Rational& s) {
    for (Term& t : terms) t.coeff *= s;
}

Integer content_of(const std::vector<Term>& a, const std::vector<Term>& b) {
    Integer g(0);
    for (const Term& t : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    for (const Term& t : b) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    return g;
}


// Geobucket accumulator: terms live in geometrically capped sorted levels so
// a reduction step costs O(|reducer| + levels) instead of O(|accumulator|).
class Geobucket {
  public:
    explicit Geobucket(const TermOrder& ord) : ord_(&ord) {}

    void add(std::vector<Term>&& v) {
        if (v.empty()) return;
        for (const Term& t : v) max_degree_ = std::max(max_degree_, t.mono.degree());
        size_t lvl = 0;
        while (cap(lvl) < v.size()) ++lvl;
        while (true) {
            if (lvl >= levels_.size()) levels_.resize(lvl + 1);
            Level& L = levels_[lvl];
            if (L.live() == 0) {
                L.terms = std::move(v);
                L.head = 0;
            } else {
                v = merge(L.take(), std::move(v));
                L.terms.clear();
                L.head = 0;
                if (v.empty()) return;
                if (v.size() <= cap(lvl)) {
                    L.terms = std::move(v);
                    return;
                }
                ++lvl;
                continue;
            }
            return;
        }
    }

    // Pops and returns the collapsed leading term; false when exhausted.
    bool next(Term& out) {
        while (true) {
            int best = -1;
            for (size_t i = 0; i < levels_.size(); ++i) {
                if (levels_[i].live() == 0) continue;
                if (best < 0 ||
                    ord_->greater(levels_[i].front().mono, levels_[size_t(best)].front().mono))
                    best = static_cast<int>(i);
            }
            if (best < 0) return false;
            Monomial m = levels_[size_t(best)].front().mono;
            Rational c(0);
            for (Level& L : levels_)
                if (L.live() > 0 && L.front().mono == m) {
                    c += L.front().coeff;
                    ++L.head;
                }
            if (c != 0) {
                out = {std::move(c), std::move(m)};
                return true;
            }
        }
    }

    int max_degree() const { return max_degree_; }

  private:
    struct Level {
        std::vector<Term> terms;
        size_t head = 0;
        size_t live() const { return terms.size() - head; }
        const Term& front() const { return terms[head]; }
        std::vector<Term> take() {
            std::vector<Term> out(std::make_move_iterator(terms.begin() + long(head)),
                                  std::make_move_iterator(terms.end()));
            terms.clear();
            head = 0;
            return out;
        }
    };

    static size_t cap(size_t lvl) { return 4ull << (2 * lvl); }

    std::vector<Term> merge(std::vector<Term>&& a, std::vector<Term>&& b) {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j >= b.size()) {
                out.push_back(std::move(a[i++]));
            } else if (i >= a.size()) {
                out.push_back(std::move(b[j++]));
            } else {
                int cmp = ord_->compare(a[i].mono, b[j].mono);
                if (cmp > 0) {
                    out.push_back(std::move(a[i++]));
                } else if (cmp < 0) {
                    out.push_back(std::move(b[j++]));
                } else {
                    Rational c = a[i].coeff + b[j].coeff;
                    if (c != 0) out.push_back({std::move(c), std::move(a[i].mono)});
                    ++i;
                    ++j;
                }
            }
        }
        return out;
    }

    const TermOrder* ord_;
    std::vector<Level> levels_;
    int max_degree_ = 0;
};

}  // namespace

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G, TermOrder ord) {
    if (G.empty()) throw PreconditionError("normal_form needs a nonempty divisor list");
    for (const Polynomial& g : G)
        if (g.is_zero()) throw PreconditionError("normal_form divisor list contains zero");

    struct Div {
        Polynomial g;
        Monomial lm;
        Rational lc;
        std::uint64_t mask;
    };
    std::vector<Div> divs;
    divs.reserve(G.size());
    for (const Polynomial& g : G) {
        Polynomial gg = g.with_order(ord);
        Term lt = gg.leading_term();
        std::uint64_t mask = lt.mono.varmask();
        divs.push_back({std::move(gg), lt.mono, lt.coeff, mask});
    }

    std::vector<Term> h = p.with_order(ord).terms();
    std::vector<Term> rem;
    size_t pos = 0;
    while (pos < h.size()) {
        const Term& lt = h[pos];
        std::uint64_t mask = lt.mono.varmask();
        const Div* red = nullptr;
        for (const Div& d : divs)
            if ((d.mask & ~mask) == 0 && Monomial::divides(d.lm, lt.mono)) {
                red = &d;
                break;
            }
        if (!red) {
            rem.push_back(lt);
            ++pos;
            continue;
        }
        Rational factor = -lt.coeff / red->lc;
        Monomial quot = Monomial::quotient(lt.mono, red->lm);
        h = fused_vec(ord, Rational(1), std::move(h), pos, factor, quot, red->g.terms(), nullptr);
        pos = 0;
    }
    return Polynomial::from_sorted(p.catalog(), std::move(rem), ord);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, TermOrder ord) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("s_polynomial of the zero polynomial");
    Polynomial fo = f.with_order(ord);
    Polynomial go = g.with_order(ord);
    Term ltf = fo.leading_term();
    Term ltg = go.leading_term();
    Monomial L = Monomial::lcm(ltf.mono, ltg.mono);
    Polynomial a = fo.times_monomial(Rational(1) / ltf.coeff, Monomial::quotient(L, ltf.mono));
    Polynomial b = go.times_monomial(Rational(1) / ltg.coeff, Monomial::quotient(L, ltg.mono));
    return (a - b).content_normalized();
}

IdealGenerators IdealGenerators::from(CatalogPtr cat, std::vector<Polynomial> raw) {
    IdealGenerators out;
    out.catalog = std::move(cat);
    out.nominal_count = raw.size();
    for (Polynomial& p : raw) {
        if (p.is_zero()) continue;
        if (!compatible(out.catalog, p.catalog()))
            throw CatalogMismatchError("generator on a different catalog");
        Polynomial c = p.content_normalized();
        bool dup = false;
        for (const Polynomial& q : out.gens)
            if (q == c) {
                dup = true;
                break;
            }
        if (!dup) out.gens.push_back(std::move(c));
    }
    return out;
}

bool BuchbergerEngine::PairLess::operator()(const Pair& a, const Pair& b) const {
    if (a.deferred != b.deferred) return !a.deferred;
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.degree != b.degree) return a.degree < b.degree;
    int cmp = eng->ord_.compare(a.lcm, b.lcm);
    if (cmp != 0) return cmp < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

BuchbergerEngine::BuchbergerEngine(CatalogPtr cat, TermOrder ord, BuchbergerOptions opts)
    : cat_(std::move(cat)), ord_(ord), opts_(opts), pairs_(PairLess{this}) {
    if (opts_.track_cofactors) {
        opts_.threads = 1;
        // Exact cofactor audits want the literal unit, not the implied one.
        opts_.invertible_vars.clear();
    }
    if (opts_.threads < 1) opts_.threads = 1;
    invertible_.assign(static_cast<size_t>(cat_->size()), false);
    for (int v : opts_.invertible_vars) {
        if (v < 0 || v >= cat_->size())
            throw UnknownVariableError("invertible variable index out of range");
        invertible_[static_cast<size_t>(v)] = true;
    }
    slack_mask_ = 0;
    if (opts_.defer_slack_pairs)
        for (int v = 0; v < cat_->size(); ++v)
            if (cat_->var(v).role == VarRole::Slack) slack_mask_ |= 1ull << (v & 63);
}

bool BuchbergerEngine::implies_unit(const Polynomial& p) const {
    if (p.num_terms() != 1) return false;
    const Monomial& m = p.leading_term().mono;
    if (m.is_constant()) return true;
    if (opts_.invertible_vars.empty()) return false;
    for (int v = 0; v < m.nvars(); ++v)
        if (m.exponent(v) > 0 && !invertible_[static_cast<size_t>(v)]) return false;
    return true;
}

bool BuchbergerEngine::is_tainted(const Polynomial& p) const {
    if (slack_mask_ == 0) return false;
    for (const Term& t : p.terms()) {
        if ((t.mono.varmask() & slack_mask_) == 0) continue;
        for (int v = 0; v < t.mono.nvars(); ++v)
            if (t.mono.exponent(v) > 0 && cat_->var(v).role == VarRole::Slack) return true;
    }
    return false;
}

bool BuchbergerEngine::monomial_reduces_to_zero(const Monomial& m, size_t limit,
                                                size_t max_steps) const {
    Geobucket acc(ord_);
    {
        std::vector<Term> init;
        init.push_back({Rational(1), m});
        acc.add(std::move(init));
    }
    Term lt;
    size_t steps = 0;
    while (acc.next(lt)) {
        if (++steps > max_steps || lt.mono.degree() > opts_.max_total_degree) return false;
        std::uint64_t mask = lt.mono.varmask();
        int reducer = -1;
        int reducer_terms = 0;
        for (size_t b = 0; b < limit; ++b) {
            const BasisEntry& e = basis_[b];
            if (e.redundant || (e.mask & ~mask) != 0) continue;
            if (Monomial::divides(e.lm, lt.mono)) {
                int nt = e.poly.num_terms();
                if (reducer < 0 || nt < reducer_terms) {
                    reducer = static_cast<int>(b);
                    reducer_terms = nt;
                    if (nt <= 2) break;
                }
            }
        }
        if (reducer < 0) return false;  // an irreducible term survives
        const BasisEntry& e = basis_[static_cast<size_t>(reducer)];
        Monomial quot = Monomial::quotient(lt.mono, e.lm);
        Rational factor = -lt.coeff / e.poly.leading_term().coeff;
        const std::vector<Term>& g = e.poly.terms();
        std::vector<Term> tail;
        tail.reserve(g.size() - 1);
        for (size_t t = 1; t < g.size(); ++t)
            tail.push_back({factor * g[t].coeff, Monomial::mul(quot, g[t].mono)});
        acc.add(std::move(tail));
    }
    return true;
}

bool BuchbergerEngine::probe_unit() {
    if (unit_found_) return true;
    if (opts_.invertible_vars.empty() || opts_.probe_interval == 0 || opts_.track_cofactors)
        return false;
    for (int d = 1; d <= opts_.unit_probe_max_power; ++d) {
        Monomial m(cat_->size());
        bool ok = true;
        for (int v : opts_.invertible_vars) {
            if (m.exponent(v) + d > 60) {
                ok = false;
                break;
            }
            m.set_exponent(v, m.exponent(v) + d);
        }
        if (!ok || m.degree() > opts_.max_total_degree) break;
        // Failed probes exit fast (the first irreducible term settles it),
        // so trying every power each time stays cheap.
        if (monomial_reduces_to_zero(m, basis_.size(), 4000)) {
            found_unit();
            return true;
        }
    }
    return false;
}

bool BuchbergerEngine::lcm_touches_slack(const Monomial& lcm) const {
    if (slack_mask_ == 0) return false;
    if ((lcm.varmask() & slack_mask_) == 0) return false;
    for (int v = 0; v < lcm.nvars(); ++v)
        if (lcm.exponent(v) > 0 && cat_->var(v).role == VarRole::Slack) return true;
    return false;
}

void BuchbergerEngine::add_generators(std::span<const Polynomial> gens) {
    for (const Polynomial& g : gens) {
        if (!compatible(cat_, g.catalog()))
            throw CatalogMismatchError("generator on a different catalog");
        unsigned long long feed_index = fed_++;
        if (g.is_zero()) continue;
        if (opts_.track_cofactors) {
            // Exact bookkeeping: the inbox carries the generator as-is with
            // its own unit cofactor vector.
            inbox_.push_back(g.with_order(ord_));
            std::vector<Polynomial> cof(static_cast<size_t>(feed_index) + 1,
                                        Polynomial::zero(cat_, ord_));
            cof.back() = Polynomial::constant(cat_, Rational(1), ord_);
            inbox_cofs_.push_back(std::move(cof));
        } else {
            inbox_.push_back(g.with_order(ord_).content_normalized());
        }
    }
    stats_.generators_fed = fed_;
}

bool BuchbergerEngine::over_time() const {
    if (opts_.max_seconds <= 0) return false;
    return (elapsed_before_run_ms_ + (now_ms() - run_start_ms_)) / 1000.0 > opts_.max_seconds;
}

Polynomial BuchbergerEngine::reduce_full(Polynomial p, int sugar_in, int* sugar_out,
                                         std::vector<Polynomial>* lambda, size_t limit) const {
    int sugar = sugar_in;
    const bool exact = lambda != nullptr;

    auto pick_reducer = [&](const Monomial& mono) -> int {
        std::uint64_t mask = mono.varmask();
        int reducer = -1;
        int reducer_terms = 0;
        for (size_t b = 0; b < limit; ++b) {
            const BasisEntry& e = basis_[b];
            if (e.redundant || (e.mask & ~mask) != 0) continue;
            if (Monomial::divides(e.lm, mono)) {
                // Shortest reducer keeps the accumulator small; index breaks
                // ties deterministically.
                int nt = e.poly.num_terms();
                if (reducer < 0 || nt < reducer_terms) {
                    reducer = static_cast<int>(b);
                    reducer_terms = nt;
                    if (nt <= 2) break;
                }
            }
        }
        return reducer;
    };

    if (!exact) {
        Geobucket acc(ord_);
        {
            std::vector<Term> init = p.with_order(ord_).terms();
            acc.add(std::move(init));
        }
        if (acc.max_degree() > opts_.max_total_degree) throw DegreeBreach{};
        std::vector<Term> rem;
        Term lt;
        while (acc.next(lt)) {
            int reducer = pick_reducer(lt.mono);
            if (reducer < 0) {
                rem.push_back(std::move(lt));
                continue;
            }
            const BasisEntry& e = basis_[static_cast<size_t>(reducer)];
            Monomial quot = Monomial::quotient(lt.mono, e.lm);
            sugar = std::max(sugar, e.sugar + quot.degree());
            Rational factor = -lt.coeff / e.poly.leading_term().coeff;
            const std::vector<Term>& g = e.poly.terms();
            std::vector<Term> tail;
            tail.reserve(g.size() - 1);
            for (size_t t = 1; t < g.size(); ++t)
                tail.push_back({factor * g[t].coeff, Monomial::mul(quot, g[t].mono)});
            acc.add(std::move(tail));
            if (acc.max_degree() > opts_.max_total_degree) throw DegreeBreach{};
        }
        if (sugar_out) *sugar_out = sugar;
        return Polynomial::from_sorted(cat_, std::move(rem), ord_).content_normalized();
    }

    // Exact path (cofactor bookkeeping): plain merge-based division.
    std::vector<Term> h = p.with_order(ord_).terms();
    std::vector<Term> rem;
    size_t pos = 0;
    while (pos < h.size()) {
        if (h[pos].mono.degree() > opts_.max_total_degree) throw DegreeBreach{};
        int reducer = pick_reducer(h[pos].mono);
        if (reducer < 0) {
            rem.push_back(std::move(h[pos]));
            ++pos;
            continue;
        }
        const BasisEntry& e = basis_[static_cast<size_t>(reducer)];
        Rational factor = -h[pos].coeff / e.poly.leading_term().coeff;
        Monomial quot = Monomial::quotient(h[pos].mono, e.lm);
        sugar = std::max(sugar, e.sugar + quot.degree());
        int max_deg = 0;
        h = fused_vec(ord_, Rational(1), std::move(h), pos, factor, quot, e.poly.terms(),
                      &max_deg);
        const std::vector<Polynomial>& gl = cofs_[static_cast<size_t>(reducer)];
        if (lambda->size() < gl.size()) lambda->resize(gl.size(), Polynomial::zero(cat_, ord_));
        for (size_t x = 0; x < gl.size(); ++x)
            if (!gl[x].is_zero())
                (*lambda)[x] = Polynomial::fused(Rational(1), (*lambda)[x], factor, quot, gl[x]);
        if (max_deg > opts_.max_total_degree) throw DegreeBreach{};
        pos = 0;
    }
    if (sugar_out) *sugar_out = sugar;
    return Polynomial::from_sorted(cat_, std::move(rem), ord_);
}

void BuchbergerEngine::found_unit() {
    unit_found_ = true;
    stats_.unit_found = true;
}

void BuchbergerEngine::add_basis_element(Polynomial h, int sugar, std::vector<Polynomial> cof) {
    // Store content-normalized; keep cofactors consistent with the stored
    // representative.
    Polynomial hn = h.content_normalized();
    if (opts_.track_cofactors) {
        Rational s = hn.leading_term().coeff / h.leading_term().coeff;
        for (Polynomial& l : cof) l = l.scaled(s);
    }

    if (implies_unit(hn)) {
        // A nonzero constant, or a monomial supported on variables the
        // caller certified invertible: either way the ideal is <1>.
        found_unit();
        Monomial lm = hn.leading_term().mono;
        basis_.push_back({std::move(hn), lm, lm.varmask(), sugar, false, false});
        if (opts_.track_cofactors) cofs_.push_back(std::move(cof));
        stats_.basis_size = basis_.size();
        return;
    }

    int t = static_cast<int>(basis_.size());
    const Monomial lm_t = hn.leading_term().mono;

    // Gebauer-Moller: drop old pairs strictly dominated by the newcomer.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
        const Pair& pr = *it;
        if (Monomial::divides(lm_t, pr.lcm) &&
            Monomial::lcm(basis_[size_t(pr.i)].lm, lm_t) != pr.lcm &&
            Monomial::lcm(basis_[size_t(pr.j)].lm, lm_t) != pr.lcm)
            it = pairs_.erase(it);
        else
            ++it;
    }

    // Candidate pairs (i, t), filtered by the M / F / B criteria.
    struct Cand {
        int i;
        Monomial lcm;
        bool coprime;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
        if (basis_[size_t(i)].redundant) continue;
        const Monomial& lm_i = basis_[size_t(i)].lm;
        cands.push_back({i, Monomial::lcm(lm_i, lm_t), Monomial::coprime(lm_i, lm_t)});
    }
    std::vector<bool> drop(cands.size(), false);
    // M: lcm(i,t) properly divisible by another lcm(j,t).
    for (size_t a = 0; a < cands.size(); ++a)
        for (size_t b = 0; b < cands.size(); ++b) {
            if (a == b || drop[a]) continue;
            if (cands[b].lcm != cands[a].lcm && Monomial::divides(cands[b].lcm, cands[a].lcm)) {
                drop[a] = true;
                break;
            }
        }
    // F: among equal lcms keep one; B: drop the whole class when any member
    // has coprime leading monomials (its S-polynomial reduces to zero).
    for (size_t a = 0; a < cands.size(); ++a) {
        if (drop[a]) continue;
        bool class_coprime = cands[a].coprime;
        for (size_t b = a + 1; b < cands.size(); ++b) {
            if (drop[b] || !(cands[b].lcm == cands[a].lcm)) continue;
            drop[b] = true;
            class_coprime = class_coprime || cands[b].coprime;
        }
        if (class_coprime) drop[a] = true;
    }

    bool tainted_t = opts_.defer_slack_pairs && is_tainted(hn);
    basis_.push_back({std::move(hn), lm_t, lm_t.varmask(), sugar, false, tainted_t});
    if (opts_.track_cofactors) cofs_.push_back(std::move(cof));

    for (size_t a = 0; a < cands.size(); ++a) {
        if (drop[a]) continue;
        const BasisEntry& ei = basis_[size_t(cands[a].i)];
        int sug = std::max(ei.sugar + cands[a].lcm.degree() - ei.lm.degree(),
                           sugar + cands[a].lcm.degree() - lm_t.degree());
        pairs_.insert({cands[a].i, t, cands[a].lcm, cands[a].lcm.degree(), sug,
                       opts_.defer_slack_pairs && lcm_touches_slack(cands[a].lcm)});
    }

    // Elements whose leading monomial the newcomer divides drop out of pair
    // formation and the reducer set; pairs already queued still resolve.
    for (int i = 0; i < t; ++i)
        if (!basis_[size_t(i)].redundant && Monomial::divides(lm_t, basis_[size_t(i)].lm))
            basis_[size_t(i)].redundant = true;

    stats_.basis_size = basis_.size();
    stats_.max_degree = std::max(stats_.max_degree, basis_.back().poly.total_degree());
}

Polynomial BuchbergerEngine::make_spoly(const Pair& pr, std::vector<Polynomial>* cof) const {
    const BasisEntry& f = basis_[size_t(pr.i)];
    const BasisEntry& g = basis_[size_t(pr.j)];
    const Rational& lcf = f.poly.leading_term().coeff;
    const Rational& lcg = g.poly.leading_term().coeff;
    Monomial mf = Monomial::quotient(pr.lcm, f.lm);
    Monomial mg = Monomial::quotient(pr.lcm, g.lm);
    Rational a, b;
    if (cof) {
        a = Rational(1) / lcf;
        b = Rational(-1) / lcg;
    } else {
        Integer d = coeff_gcd_num(lcf, lcg);
        a = lcg / d;
        b = -(lcf / d);
    }
    Polynomial zero = Polynomial::zero(cat_, ord_);
    Polynomial s = Polynomial::fused(Rational(1), zero, a, mf, f.poly);
    s = Polynomial::fused(Rational(1), s, b, mg, g.poly);
    if (cof) {
        const std::vector<Polynomial>& cf = cofs_[size_t(pr.i)];
        const std::vector<Polynomial>& cg = cofs_[size_t(pr.j)];
        size_t len = std::max(cf.size(), cg.size());
        cof->assign(len, zero);
        for (size_t x = 0; x < len; ++x) {
            Polynomial acc = zero;
            if (x < cf.size() && !cf[x].is_zero())
                acc = Polynomial::fused(Rational(1), acc, a, mf, cf[x]);
            if (x < cg.size() && !cg[x].is_zero())
                acc = Polynomial::fused(Rational(1), acc, b, mg, cg[x]);
            (*cof)[x] = std::move(acc);
        }
    }
    return s;
}

GbStatus BuchbergerEngine::drain_inbox() {
    while (!inbox_.empty()) {
        if (unit_found_ && opts_.early_unit_abort) return GbStatus::UnitFound;
        if (over_time()) return GbStatus::TimeBudget;
        Polynomial g = std::move(inbox_.front());
        inbox_.pop_front();
        std::vector<Polynomial> cof;
        std::vector<Polynomial>* cofp = nullptr;
        if (opts_.track_cofactors) {
            cof = std::move(inbox_cofs_.front());
            inbox_cofs_.pop_front();
            cofp = &cof;
        }
        int sugar = std::max(g.total_degree(), 0);
        Polynomial r = reduce_full(std::move(g), sugar, &sugar, cofp, basis_.size());
        if (r.is_zero()) {
            stats_.reductions_to_zero++;
            continue;
        }
        add_basis_element(std::move(r), sugar, std::move(cof));
        if (unit_found_ && opts_.early_unit_abort) return GbStatus::UnitFound;
    }
    return GbStatus::Complete;
}

GbStatus BuchbergerEngine::run(bool stop_at_deferred) {
    run_start_ms_ = now_ms();
    auto finish = [&](GbStatus s) {
        stats_.wall_ms = elapsed_before_run_ms_ + (now_ms() - run_start_ms_);
        elapsed_before_run_ms_ = stats_.wall_ms;
        return s;
    };

    try {
        if (unit_found_ && opts_.early_unit_abort) return finish(GbStatus::UnitFound);
        GbStatus s = drain_inbox();
        if (s != GbStatus::Complete) return finish(s);
        if (probe_unit() && opts_.early_unit_abort) return finish(GbStatus::UnitFound);

        while (!pairs_.empty()) {
            if (stop_at_deferred && pairs_.begin()->deferred) return finish(GbStatus::Paused);
            if (over_time()) return finish(GbStatus::TimeBudget);
            if (stats_.pairs_processed >= opts_.max_pairs) return finish(GbStatus::PairBudget);

            size_t want = static_cast<size_t>(opts_.threads);
            std::vector<Pair> batch;
            while (batch.size() < want && !pairs_.empty() &&
                   stats_.pairs_processed + batch.size() < opts_.max_pairs) {
                batch.push_back(*pairs_.begin());
                pairs_.erase(pairs_.begin());
            }

            std::vector<Polynomial> results(batch.size());
            std::vector<int> sugars(batch.size(), 0);
            std::vector<std::vector<Polynomial>> result_cofs(batch.size());
            if (batch.size() == 1) {
                std::vector<Polynomial>* cofp = opts_.track_cofactors ? &result_cofs[0] : nullptr;
                Polynomial sp = make_spoly(batch[0], cofp);
                results[0] =
                    reduce_full(std::move(sp), batch[0].sugar, &sugars[0], cofp, basis_.size());
            } else {
                // Parallel batch against a read-only snapshot; merged in
                // batch (index-sorted) order below, so the outcome does not
                // depend on thread scheduling.
                size_t limit = basis_.size();
                std::vector<std::thread> workers;
                for (size_t b = 1; b < batch.size(); ++b)
                    workers.emplace_back([&, b] {
                        results[b] = reduce_full(make_spoly(batch[b], nullptr), batch[b].sugar,
                                                 &sugars[b], nullptr, limit);
                    });
                results[0] = reduce_full(make_spoly(batch[0], nullptr), batch[0].sugar,
                                         &sugars[0], nullptr, limit);
                for (auto& w : workers) w.join();
            }

            if (opts_.probe_interval > 0 &&
                stats_.pairs_processed - pairs_at_last_probe_ >= opts_.probe_interval) {
                pairs_at_last_probe_ = stats_.pairs_processed;
                if (probe_unit() && opts_.early_unit_abort) return finish(GbStatus::UnitFound);
            }
            for (size_t b = 0; b < batch.size(); ++b) {
                stats_.pairs_processed++;
                Polynomial r = std::move(results[b]);
                // Catch up with basis growth from earlier batch entries.
                if (!r.is_zero() && batch.size() > 1)
                    r = reduce_full(std::move(r), sugars[b], &sugars[b], nullptr, basis_.size());
                if (r.is_zero()) {
                    stats_.reductions_to_zero++;
                    continue;
                }
                add_basis_element(std::move(r), sugars[b], std::move(result_cofs[b]));
                if (unit_found_ && opts_.early_unit_abort) return finish(GbStatus::UnitFound);
            }
        }
        return finish(unit_found_ ? GbStatus::UnitFound : GbStatus::Complete);
    } catch (const DegreeBreach&) {
        return finish(GbStatus::DegreeBudget);
    }
}

GroebnerBasis BuchbergerEngine::snapshot() const {
    GroebnerBasis out;
    out.catalog = cat_;
    out.order = ord_;
    out.stats = stats_;
    out.reduced = false;
    if (unit_found_) {
        out.elements = {Polynomial::constant(cat_, Rational(1), ord_)};
        return out;
    }
    for (const BasisEntry& e : basis_)
        if (!e.redundant) out.elements.push_back(e.poly.monic());
    return out;
}

std::vector<std::vector<Polynomial>> BuchbergerEngine::cofactors() const {
    std::vector<std::vector<Polynomial>> out;
    if (!opts_.track_cofactors) return out;
    for (size_t b = 0; b < basis_.size(); ++b) {
        if (unit_found_ ? !basis_[b].poly.is_constant() : basis_[b].redundant) continue;
        std::vector<Polynomial> lam = cofs_[b];
        lam.resize(static_cast<size_t>(fed_), Polynomial::zero(cat_, ord_));
        // Cofactors describe the monic representative, matching snapshot().
        Rational lc = basis_[b].poly.leading_term().coeff;
        if (lc != 1)
            for (Polynomial& l : lam) l = l.scaled(Rational(1) / lc);
        out.push_back(std::move(lam));
    }
    return out;
}

BuchbergerResult buchberger(const IdealGenerators& gens, TermOrder ord,
                            const BuchbergerOptions& opts) {
    if (gens.gens.empty()) throw PreconditionError("buchberger needs at least one nonzero generator");
    BuchbergerEngine eng(gens.catalog, ord, opts);
    eng.add_generators(gens.gens);
    GbStatus st = eng.run();
    return {st, eng.snapshot()};
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
    GroebnerBasis out = basis;
    out.reduced = true;
    std::vector<Polynomial>& e = out.elements;
    for (Polynomial& p : e) p = p.with_order(out.order).monic();

    // Minimalize: drop elements whose leading monomial another element's
    // divides; among equal leading monomials keep the first.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < e.size(); ++i) {
        const Monomial& mi = e[i].leading_term().mono;
        bool keep = true;
        for (size_t j = 0; j < e.size(); ++j) {
            if (i == j) continue;
            const Monomial& mj = e[j].leading_term().mono;
            if (!Monomial::divides(mj, mi)) continue;
            if (mj == mi ? j < i : true) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(e[i]);
    }
    e = std::move(minimal);

    // Inter-reduce tails until stable.
    bool changed = true;
    while (changed && e.size() > 1) {
        changed = false;
        for (size_t i = 0; i < e.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(e.size() - 1);
            for (size_t j = 0; j < e.size(); ++j)
                if (j != i) others.push_back(e[j]);
            Polynomial r = normal_form(e[i], others, out.order).monic();
            if (!(r == e[i])) {
                e[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(e.begin(), e.end(), [&](const Polynomial& a, const Polynomial& b) {
        return out.order.less(a.leading_term(out.order).mono, b.leading_term(out.order).mono);
    });
    return out;
}

TrivialityResult is_trivial(const IdealGenerators& gens, TermOrder ord,
                            const BuchbergerOptions& opts) {
    BuchbergerResult res = buchberger(gens, ord, opts);
    TrivialityResult out;
    out.stats = res.basis.stats;
    out.engine_status = res.status;
    if (budget_exhausted(res.status)) {
        out.kind = TrivialityResult::Kind::BudgetExhausted;
        return out;
    }
    GroebnerBasis reduced = res.basis.is_unit() ? res.basis : reduce_basis(res.basis);
    reduced.reduced = true;
    out.kind = reduced.is_unit() ? TrivialityResult::Kind::Trivial
                                 : TrivialityResult::Kind::NotTrivial;
    out.basis = std::move(reduced);
    return out;
}

}  // namespace crnid
