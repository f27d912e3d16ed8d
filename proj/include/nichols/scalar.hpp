#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nichols {

using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);

/// Element of Q[z]/Phi_N(z), dense coefficients indexed by power of z.
/// Invariant: c.size() == context degree (= deg Phi_N).
struct Cyclo {
  std::vector<Rational> c;
  friend bool operator==(const Cyclo&, const Cyclo&) = default;
};
int compare(const Cyclo& a, const Cyclo& b);

/// Exponent vector of a parameter monomial; entries are nonnegative.
struct Mono {
  std::vector<int> e;
  int total() const;
  bool divides(const Mono& other) const;
  friend bool operator==(const Mono&, const Mono&) = default;
  friend auto operator<=>(const Mono&, const Mono&) = default;
};

/// Sparse multivariate polynomial over Q[z]/Phi_N in the context parameters.
/// Invariant: no zero coefficients stored; monomial exponents nonnegative.
struct MPoly {
  std::map<Mono, Cyclo> t;

  bool is_zero() const { return t.empty(); }
  bool is_constant() const;
  friend bool operator==(const MPoly&, const MPoly&) = default;
};
int compare(const MPoly& a, const MPoly& b);

class Scalar;

/// Arithmetic context: the conductor N fixing the cyclotomic field
/// Q(z), z a primitive N-th root of unity, plus the named transcendental
/// parameters. All Cyclo/MPoly/Scalar arithmetic goes through one context.
class CycloContext : public std::enable_shared_from_this<CycloContext> {
 public:
  static std::shared_ptr<const CycloContext> make(int conductor,
                                                  std::vector<std::string> params = {});

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  int nparams() const { return static_cast<int>(params_.size()); }
  const std::vector<std::string>& params() const { return params_; }
  std::optional<int> param_index(std::string_view name) const;
  bool same_as(const CycloContext& other) const;

  // ---- arithmetic in Q[z]/Phi_N
  Cyclo c_zero() const;
  Cyclo c_one() const;
  Cyclo c_rat(const Rational& r) const;
  Cyclo c_z() const;
  bool c_is_zero(const Cyclo& a) const;
  bool c_is_one(const Cyclo& a) const;
  Cyclo c_add(const Cyclo& a, const Cyclo& b) const;
  Cyclo c_sub(const Cyclo& a, const Cyclo& b) const;
  Cyclo c_neg(const Cyclo& a) const;
  Cyclo c_mul(const Cyclo& a, const Cyclo& b) const;
  Cyclo c_inv(const Cyclo& a) const;  // throws std::domain_error on zero
  Cyclo c_pow(const Cyclo& a, long long k) const;
  Cyclo c_conj(const Cyclo& a) const;        // z -> z^{-1}
  Rational c_trace(const Cyclo& a) const;     // sum over embeddings
  Rational c_norm(const Cyclo& a) const;      // product over embeddings
  BigInt c_denom(const Cyclo& a) const;       // lcm of coefficient denominators
  bool c_is_rational(const Cyclo& a) const;
  Rational c_rational_value(const Cyclo& a) const;

  // ---- multivariate polynomials over the cyclotomic field
  MPoly p_zero() const;
  MPoly p_one() const;
  MPoly p_constant(const Cyclo& c) const;
  MPoly p_param(int idx) const;
  MPoly p_monomial(const Mono& m, const Cyclo& c) const;
  MPoly p_add(const MPoly& a, const MPoly& b) const;
  MPoly p_sub(const MPoly& a, const MPoly& b) const;
  MPoly p_neg(const MPoly& a) const;
  MPoly p_mul(const MPoly& a, const MPoly& b) const;
  MPoly p_mul_cyclo(const MPoly& a, const Cyclo& c) const;
  MPoly p_divexact(const MPoly& a, const MPoly& b) const;  // throws std::logic_error if inexact
  MPoly p_gcd(const MPoly& a, const MPoly& b) const;       // lex-leading coefficient normalized to 1
  const Cyclo& p_leading(const MPoly& a) const;
  std::vector<int> p_deg_vec(const MPoly& a) const;  // per-parameter max exponent
  std::vector<int> p_val_vec(const MPoly& a) const;  // per-parameter min exponent
  std::optional<Cyclo> p_eval(const MPoly& a, const std::vector<Rational>& at) const;

  // ---- Scalar factories
  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long v) const;
  Scalar rational(const Rational& r) const;
  Scalar z_power(long long k) const;
  Scalar parameter(int idx) const;
  Scalar make_scalar(MPoly num, MPoly den) const;  // throws std::domain_error if den == 0

  const std::vector<long long>& order_candidates() const { return order_candidates_; }

 private:
  CycloContext(int conductor, std::vector<std::string> params);

  int conductor_;
  int degree_;
  std::vector<std::string> params_;
  std::vector<Rational> phi_;                       // Phi_N, monic, degree_+1 coefficients
  std::vector<std::vector<Rational>> zpow_;         // z^k mod Phi_N for k in [degree_, 2*degree_-2]
  std::vector<Cyclo> zconj_pow_;                    // (z^{-1})^k for k < degree_
  std::vector<Rational> trace_pow_;                 // Tr(z^k) for k < degree_
  std::vector<long long> order_candidates_;         // divisors of 2N, ascending

  std::vector<Rational> c_reduce(std::vector<Rational> raw) const;
};

using ContextPtr = std::shared_ptr<const CycloContext>;

/// Element of the field K = Q(z)(params): a reduced fraction of MPolys.
/// Canonical form: gcd(num, den) = 1 and den has lex-leading coefficient 1,
/// so structural equality coincides with field equality.
class Scalar {
 public:
  Scalar() = default;  // null scalar; usable only as assignment target

  const ContextPtr& context() const { return ctx_; }
  bool is_null() const { return ctx_ == nullptr; }
  bool is_zero() const;
  bool is_one() const;
  bool is_constant() const;
  Cyclo constant_value() const;  // requires is_constant()
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws std::domain_error on zero divisor
  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero
  Scalar pow(long long k) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  bool operator<(const Scalar& o) const;  // total order for use as map key

  /// Least k >= 1 with x^k = 1, or nullopt when no such k exists
  /// (any scalar depending on a parameter, or a constant that is not a
  /// root of unity). Throws std::domain_error on zero.
  std::optional<long long> multiplicative_order() const;

  struct MonomialView {
    std::vector<int> exponents;  // per parameter, may be negative
    Cyclo coeff;
  };
  std::optional<MonomialView> as_monomial() const;
  std::vector<int> param_degree() const;     // deg(num) - deg(den), per parameter
  std::vector<int> param_valuation() const;  // val(num) - val(den), per parameter
  std::optional<Cyclo> evaluate(const std::vector<Rational>& at) const;

  std::string to_string() const;  // parseable by the instance expression grammar

 private:
  friend class CycloContext;
  Scalar(ContextPtr ctx, MPoly num, MPoly den);
  void canonicalize();

  ContextPtr ctx_;
  MPoly num_, den_;
};

int compare(const Scalar& a, const Scalar& b);

/// (m)_a! = prod_{k=1..m} (1 + a + ... + a^{k-1}); empty product for m = 0.
Scalar q_factorial(int m, const Scalar& a);

/// Exact solver for base^m = target over K, m ranging over nonnegative
/// integers. Returns the (unique, when base is not a root of unity)
/// solution, or nullopt when none exists. Throws std::domain_error when
/// base or target is zero.
std::optional<long long> solve_power(const Scalar& base, const Scalar& target);

}  // namespace nichols
