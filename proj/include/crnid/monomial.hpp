#ifndef CRNID_MONOMIAL_HPP
#define CRNID_MONOMIAL_HPP

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <cstddef>

namespace crnid {

// Dense exponent vector over a fixed catalog. Exponents are kept inline for
// catalogs up to 40 variables and spill to the heap past that (extrinsic
// catalogs reach ~42). Exponents are bounded well below 255 by the Groebner
// degree budget; arithmetic asserts against overflow anyway.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {}

    static Monomial unit(int nvars, int var, int exp = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    int exponent(int i) const { return e_[static_cast<size_t>(i)]; }
    int degree() const { return degree_; }
    bool is_constant() const { return degree_ == 0; }

    void set_exponent(int i, int value);

    static Monomial mul(const Monomial& a, const Monomial& b);
    // a | b
    static bool divides(const Monomial& a, const Monomial& b);
    // b / a; caller guarantees divisibility
    static Monomial quotient(const Monomial& b, const Monomial& a);
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const;

    // Folded support mask (variable i sets bit i mod 64). a | b implies
    // mask(a) & ~mask(b) == 0, giving an O(1) divisibility pre-filter.
    std::uint64_t varmask() const;

  private:
    boost::container::small_vector<std::uint8_t, 40> e_;
    int degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace crnid

#endif
