#include "crnid/monomial.hpp"

#include "crnid/error.hpp"

namespace crnid {

namespace {
void check_exp(int v) {
    if (v < 0 || v > 200) throw PreconditionError("monomial exponent out of range");
}
}  // namespace

Monomial Monomial::unit(int nvars, int var, int exp) {
    Monomial m(nvars);
    m.set_exponent(var, exp);
    return m;
}

void Monomial::set_exponent(int i, int value) {
    if (i < 0 || i >= nvars()) throw UnknownVariableError("variable index out of range");
    check_exp(value);
    degree_ += value - e_[static_cast<size_t>(i)];
    e_[static_cast<size_t>(i)] = static_cast<std::uint8_t>(value);
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (size_t i = 0; i < a.e_.size(); ++i) {
        int v = a.e_[i] + b.e_[i];
        check_exp(v);
        m.e_[i] = static_cast<std::uint8_t>(v);
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
}

bool Monomial::divides(const Monomial& a, const Monomial& b) {
    if (a.degree_ > b.degree_) return false;
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] > b.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& b, const Monomial& a) {
    Monomial m(b.nvars());
    for (size_t i = 0; i < b.e_.size(); ++i)
        m.e_[i] = static_cast<std::uint8_t>(b.e_[i] - a.e_[i]);
    m.degree_ = b.degree_ - a.degree_;
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    int deg = 0;
    for (size_t i = 0; i < a.e_.size(); ++i) {
        std::uint8_t v = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
        m.e_[i] = v;
        deg += v;
    }
    m.degree_ = deg;
    return m;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
}

std::uint64_t Monomial::varmask() const {
    std::uint64_t m = 0;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0) m |= 1ull << (i & 63);
    return m;
}

std::size_t Monomial::hash() const {
    // FNV-1a over the exponent bytes.
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t v : e_) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace crnid
