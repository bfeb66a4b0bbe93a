#ifndef SBRST_WEYL_HPP
#define SBRST_WEYL_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbrst/rational.hpp"
#include "sbrst/supercore.hpp"

namespace sbrst {

enum class GeneratorKind { kX, kD };

/// X_a or its derivation d_a. Both carry parity [E_a] + 1.
struct WeylGenerator {
  GeneratorKind kind = GeneratorKind::kX;
  int index = 0;

  static WeylGenerator x(int a) { return {GeneratorKind::kX, a}; }
  static WeylGenerator d(int a) { return {GeneratorKind::kD, a}; }
};

/// Normal-ordered monomial X^x d^d: every X factor left of every d factor, each side in
/// increasing index order.
struct WeylMonomial {
  std::vector<int> x;
  std::vector<int> d;

  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;

  int x_degree() const;
  int d_degree() const;
  /// Z-degree: #X - #d.
  int degree() const { return x_degree() - d_degree(); }
};

class WeylElement {
 public:
  using Terms = std::map<WeylMonomial, Rational>;

  WeylElement() = default;
  explicit WeylElement(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const WeylMonomial& m) const;

  void add_term(const WeylMonomial& m, const Rational& c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rational& s);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const Rational& s) { return a *= s; }
  friend WeylElement operator*(const Rational& s, WeylElement a) { return a *= s; }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// The Weyl superalgebra on generators X_a, d_a (a = 0..rank-1) with
/// X_a X_b = (-1)^{[X_a][X_b]} X_b X_a, same for d, and d_a X_b - (-1)^{[X_a][X_b]} X_b d_a = delta_ab.
class WeylSuperalgebra {
 public:
  WeylSuperalgebra() = default;
  WeylSuperalgebra(std::vector<Parity> generator_parity, std::vector<std::string> labels = {});

  /// W over Pi g^*: X_a dual to E_a with [X_a] = [E_a] + 1.
  static WeylSuperalgebra over_dual(const LieSuperalgebra& alg);

  int rank() const { return static_cast<int>(parity_.size()); }
  Parity generator_parity(int a) const { return parity_.at(a); }
  /// Parity of the underlying E_a, i.e. [X_a] + 1.
  Parity base_parity(int a) const { return parity_.at(a) + Parity::odd(); }
  const std::string& label(int a) const { return labels_.at(a); }

  WeylMonomial unit_monomial() const;
  WeylElement one() const;
  WeylElement generator(WeylGenerator g) const;
  WeylElement monomial(const WeylMonomial& m, const Rational& c = 1) const;

  Parity parity(const WeylMonomial& m) const;
  /// Parity of a homogeneous element; nullopt when mixed. Zero counts as even.
  std::optional<Parity> parity(const WeylElement& e) const;
  bool is_normal(const WeylMonomial& m) const;

  /// The monomial as a generator word, leftmost factor first.
  std::vector<WeylGenerator> word(const WeylMonomial& m) const;

  WeylElement left_multiply(WeylGenerator g, const WeylElement& e) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;

  std::string to_string(const WeylElement& e) const;
  std::string to_string(const WeylMonomial& m) const;

 private:
  void left_multiply_into(WeylGenerator g, const WeylMonomial& m, const Rational& c,
                          WeylElement& out) const;

  std::vector<Parity> parity_;
  std::vector<std::string> labels_;
};

/// Rewrites coeff * g_1 g_2 ... g_k into normal form.
WeylElement normal_order(const WeylSuperalgebra& w, const std::vector<WeylGenerator>& word,
                         const Rational& coeff = 1);

/// [A, B] = AB - (-1)^{[A][B]} BA. Throws std::invalid_argument on non-homogeneous input.
WeylElement graded_commutator(const WeylSuperalgebra& w, const WeylElement& a, const WeylElement& b);

/// -sum_{b,c} (-1)^{[A][E_c]} M_{bc} X_c d_b for an operator A of parity `parity` whose matrix
/// on the basis of g is M (entry (b, c) = coefficient of E_b in A.E_c).
WeylElement gamma_from_matrix(const WeylSuperalgebra& w, const SparseRationalMatrix& m, Parity parity);

/// The realisation of A in the degree-zero derivations of S(Pi g^*).
/// Throws std::invalid_argument when A is not parity-homogeneous.
WeylElement gamma(const WeylSuperalgebra& w, const LieSuperalgebra& alg, const SparseVector& a);
WeylElement gamma(const WeylSuperalgebra& w, const LieSuperalgebra& alg, int basis_index);

/// A(f) = [Gamma(A), f].
WeylElement g_action_on_weyl(const WeylSuperalgebra& w, const LieSuperalgebra& alg,
                             const SparseVector& a, const WeylElement& f);

}  // namespace sbrst

#endif  // SBRST_WEYL_HPP
