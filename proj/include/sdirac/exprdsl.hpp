#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdirac/operators.hpp"

namespace sdirac {

/// Polynomial in the symbolic superdimension M with field coefficients.
/// M stays symbolic through normal ordering and is substituted with m - 2n
/// only when two forms are compared.
class MPoly {
  public:
    MPoly() = default;
    MPoly(Scalar c) { coeffs_.push_back(std::move(c)); trim(); }
    static MPoly symbol_m() {
        MPoly p;
        p.coeffs_ = {Scalar(0), Scalar(1)};
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    MPoly& operator+=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    Scalar substitute(const Scalar& m_value) const;
    std::string str() const;
    friend bool operator==(const MPoly&, const MPoly&) = default;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Scalar> coeffs_;  // coefficient of M^k at index k
};

// --- expression AST ----------------------------------------------------------

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Sum, Diff, Product, Bracket, Neg, Power, Number, ImagUnit, Sqrt2, MSymbol, Gen, Named };
    Kind kind;
    std::vector<ExprPtr> children;
    Rational number;           // Kind::Number
    std::string name;          // Gen: X, D, Dup, E; Named: dirac, vector, ...
    std::vector<int> indices;  // generator / named operator indices
    int exponent = 0;          // Kind::Power
};

/// Parses the documented operator grammar; throws SyntaxError with position.
ExprPtr parse_expr(const std::string& text);
/// Prints an expression that reparses to an equal tree.
std::string print_expr(const ExprPtr& e);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Parity of the expression in the operator grading (0, 1, or -1 unknown).
int expr_parity(const SpaceConfig& cfg, const ExprPtr& e);

// --- normal ordering ----------------------------------------------------------

/// Word in the combined algebra: variables, then derivatives, then Clifford
/// generators, each block internally ascending (strictly at odd variables and
/// bosonic Clifford indices).
struct NormalWord {
    PolyMonomial xpart;
    PolyMonomial dpart;
    CliffordWord epart;

    friend std::strong_ordering operator<=>(const NormalWord&, const NormalWord&) = default;
    std::string str(const SpaceConfig& cfg) const;
};

using NormalForm = std::map<NormalWord, MPoly>;

enum class OrderStrategy { FirstViolation, LastViolation };

/// Expands named operators at fixed (m, n) and rewrites to the canonical
/// form; the result does not depend on the strategy.
NormalForm normal_order(const SpaceConfig& cfg, const ExprPtr& e,
                        OrderStrategy strategy = OrderStrategy::FirstViolation);

NormalForm nf_subtract(const NormalForm& a, const NormalForm& b);
bool nf_zero_after_substitution(const SpaceConfig& cfg, const NormalForm& nf);
std::string nf_str(const SpaceConfig& cfg, const NormalForm& nf);

/// Evaluates the expression as an exact Operator on the function space.
Operator evaluate_expr(const SpaceConfig& cfg, const ExprPtr& e);

struct IdentityReport {
    bool symbolic_pass = false;
    bool evaluation_pass = false;
    bool consistent = true;  // the two routes agree; false flags an engine bug
    std::optional<TermKey> witness;
    std::string residue;  // nonzero part of the symbolic difference
    bool pass() const { return symbolic_pass && evaluation_pass && consistent; }
};

/// Two independent checks of lhs == rhs: symbolic cancellation in normal
/// form, and exact evaluation on P_{<=k_max} ox S^{<=q_max}.
IdentityReport verify_identity(const SpaceConfig& cfg, const ExprPtr& lhs, const ExprPtr& rhs,
                               int k_max, int q_max);
IdentityReport verify_identity(const SpaceConfig& cfg, const std::string& lhs,
                               const std::string& rhs, int k_max, int q_max);

}  // namespace sdirac
