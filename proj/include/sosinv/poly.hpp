#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

namespace sosinv {

// Exponent vector alpha in N^d.  Ordering is graded lexicographic with
// x1 > x2 > ... > xd, matching the enumeration (1, x1, ..., xd, x1^2,
// x1*x2, ...) used for monomial bases.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
  static Monomial unit(int dim) { return Monomial(std::vector<int>(dim, 0)); }

  int dim() const { return static_cast<int>(exps.size()); }
  int degree() const {
    int s = 0;
    for (int e : exps) s += e;
    return s;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // within a degree, larger leading exponents come first
    for (int i = 0; i < a.dim(); ++i)
      if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return false;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.dim(); ++i) r.exps[i] += b.exps[i];
    return r;
  }
};

// Sparse multivariate polynomial over double coefficients.  Zero
// coefficients are never stored; the zero polynomial has degree 0.
class Polynomial {
 public:
  Polynomial() : dim_(0) {}
  explicit Polynomial(int dim) : dim_(dim) {}

  static Polynomial constant(int dim, double c);
  static Polynomial variable(int dim, int index);  // x_{index+1}
  static Polynomial term(const Monomial& mono, double c);

  int dim() const { return dim_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, double>& terms() const { return terms_; }

  double coefficient(const Monomial& mono) const;
  double constant_coefficient() const;
  // Accumulates c on mono, pruning if the sum vanishes.
  void add_term(const Monomial& mono, double c);

  double max_abs_coefficient() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  int dim_;
  std::map<Monomial, double> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, double c);
Polynomial pow(const Polynomial& p, int e);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(double c, const Polynomial& p) { return scale(p, c); }
inline Polynomial operator-(const Polynomial& p) { return scale(p, -1.0); }

double eval(const Polynomial& p, const Eigen::VectorXd& x);

// Polynomial map R^dim_in -> R^{components.size()}.
struct PolyMap {
  int dim_in = 0;
  std::vector<Polynomial> components;

  PolyMap() = default;
  PolyMap(int dim, std::vector<Polynomial> comps);
  static PolyMap identity(int dim);

  int degree() const;
  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const;
};

// p(T_1(x), ..., T_d(x)) by iterated multiplication with memoized powers of
// the components of T.
Polynomial compose(const Polynomial& p, const PolyMap& T);

// All monomials of dimension `dim` with total degree <= half_degree, in
// graded-lex order; the constant monomial comes first.
struct MonomialBasis {
  int dim = 0;
  int half_degree = 0;
  std::vector<Monomial> monomials;

  MonomialBasis() = default;
  MonomialBasis(int dim, int half_degree);

  int size() const { return static_cast<int>(monomials.size()); }
  // -1 when the monomial is not in the basis.
  int index_of(const Monomial& mono) const;
};

// q(x) = b(x)^T Q b(x) with Q symmetric over the given basis.
struct GramTerm {
  MonomialBasis basis;
  Eigen::MatrixXd matrix;

  GramTerm() = default;
  GramTerm(MonomialBasis b, Eigen::MatrixXd m);
};

Polynomial expand_gram(const GramTerm& g);

// Terms in graded-lex order, `c*x1^a1*x2^a2` style with unit exponents and
// zero-exponent factors omitted.  Coefficients print with 17 significant
// digits so rendered text reparses to the identical polynomial.
std::string to_string(const Polynomial& p);
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);

}  // namespace sosinv
