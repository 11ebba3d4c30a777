#pragma once

#include <map>
#include <optional>
#include <string>

#include "sdirac/monomial.hpp"
#include "sdirac/scalar.hpp"

namespace sdirac {

/// Spinor-space vector: finitely supported combination of spinor monomials.
class SpinorElement {
  public:
    using Terms = std::map<SpinorMonomial, Scalar>;

    SpinorElement() = default;
    static SpinorElement monomial(SpinorMonomial s, Scalar c = 1) {
        SpinorElement e;
        e.add(std::move(s), std::move(c));
        return e;
    }

    void add(SpinorMonomial s, Scalar c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(s), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    SpinorElement& operator+=(const SpinorElement& o) {
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    SpinorElement operator*(const Scalar& c) const {
        SpinorElement r;
        if (c.is_zero()) return r;
        for (const auto& [s, v] : terms_) r.terms_.emplace(s, v * c);
        return r;
    }
    friend bool operator==(const SpinorElement&, const SpinorElement&) = default;

  private:
    Terms terms_;
};

/// Vector in the function space: finitely supported combination of
/// (polynomial monomial, spinor monomial) pairs with exact coefficients.
/// Zero coefficients are never stored.
class Element {
  public:
    using Terms = std::map<TermKey, Scalar>;

    Element() = default;

    static Element zero() { return {}; }
    static Element unit(const SpaceConfig& cfg, Scalar c = 1) {
        return monomial({PolyMonomial::one(cfg), SpinorMonomial::one(cfg)}, std::move(c));
    }
    static Element monomial(TermKey k, Scalar c = 1) {
        Element e;
        e.add(std::move(k), std::move(c));
        return e;
    }
    /// x_j or x`_j as an element (trivial spinor part).
    static Element variable(const SpaceConfig& cfg, int j);

    void add(TermKey k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Element& operator+=(const Element& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator*(const Scalar& c) const {
        Element r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }
    Element operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const Element&, const Element&) = default;

    /// Parity if every term agrees, otherwise nullopt.
    std::optional<int> uniform_parity() const;
    /// Polynomial degree if homogeneous, otherwise nullopt.
    std::optional<int> uniform_degree() const;
    bool spinor_trivial() const;

    std::string str(const SpaceConfig& cfg) const;

  private:
    Terms terms_;
};

/// Supercommutative product.  f must have trivial spinor part; Koszul signs
/// come from reordering the odd polynomial variables, and squares of odd
/// variables vanish.
Element multiply(const SpaceConfig& cfg, const Element& f, const Element& g);

/// Graded left derivative with respect to variable j.
Element partial(const SpaceConfig& cfg, int j, const Element& f);

/// Raised-index derivative: sum_k g_{kj} partial(k).
Element partial_up(const SpaceConfig& cfg, int j, const Element& f);

}  // namespace sdirac
