#include "sosinv/poly.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sosinv/util.hpp"

namespace sosinv {

namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Polynomial Polynomial::constant(int dim, double c) {
  Polynomial p(dim);
  p.add_term(Monomial::unit(dim), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int index) {
  if (index < 0 || index >= dim) throw std::invalid_argument("variable index out of range");
  Monomial m = Monomial::unit(dim);
  m.exps[index] = 1;
  return term(m, 1.0);
}

Polynomial Polynomial::term(const Monomial& mono, double c) {
  Polynomial p(mono.dim());
  p.add_term(mono, c);
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

double Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::constant_coefficient() const { return coefficient(Monomial::unit(dim_)); }

void Polynomial::add_term(const Monomial& mono, double c) {
  if (mono.dim() != dim_) throw std::invalid_argument("add_term: monomial dimension mismatch");
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double Polynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  require_same_dim(p.dim(), q.dim(), "add");
  Polynomial r = p;
  for (const auto& [mono, c] : q.terms()) r.add_term(mono, c);
  return r;
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
  require_same_dim(p.dim(), q.dim(), "sub");
  Polynomial r = p;
  for (const auto& [mono, c] : q.terms()) r.add_term(mono, -c);
  return r;
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  require_same_dim(p.dim(), q.dim(), "mul");
  Polynomial r(p.dim());
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) r.add_term(mp * mq, cp * cq);
  return r;
}

Polynomial scale(const Polynomial& p, double c) {
  Polynomial r(p.dim());
  for (const auto& [mono, pc] : p.terms()) r.add_term(mono, pc * c);
  return r;
}

Polynomial pow(const Polynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial r = Polynomial::constant(p.dim(), 1.0);
  for (int i = 0; i < e; ++i) r = mul(r, p);
  return r;
}

double eval(const Polynomial& p, const Eigen::VectorXd& x) {
  require_same_dim(p.dim(), static_cast<int>(x.size()), "eval");
  double sum = 0.0;
  for (const auto& [mono, c] : p.terms()) {
    double t = c;
    for (int i = 0; i < mono.dim(); ++i)
      for (int e = 0; e < mono.exps[i]; ++e) t *= x[i];
    sum += t;
  }
  return sum;
}

PolyMap::PolyMap(int dim, std::vector<Polynomial> comps) : dim_in(dim), components(std::move(comps)) {
  for (const auto& c : components) require_same_dim(c.dim(), dim_in, "PolyMap");
}

PolyMap PolyMap::identity(int dim) {
  std::vector<Polynomial> comps;
  comps.reserve(dim);
  for (int i = 0; i < dim; ++i) comps.push_back(Polynomial::variable(dim, i));
  return PolyMap(dim, std::move(comps));
}

int PolyMap::degree() const {
  int d = 0;
  for (const auto& c : components) d = std::max(d, c.degree());
  return d;
}

Eigen::VectorXd PolyMap::operator()(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) y[static_cast<int>(i)] = eval(components[i], x);
  return y;
}

Polynomial compose(const Polynomial& p, const PolyMap& T) {
  require_same_dim(p.dim(), static_cast<int>(T.components.size()), "compose");
  require_same_dim(p.dim(), T.dim_in, "compose");
  const int d = p.dim();

  // powers[k][e] = T_k^e, filled lazily up to the largest exponent used
  std::vector<std::vector<Polynomial>> powers(d);
  for (int k = 0; k < d; ++k) powers[k].push_back(Polynomial::constant(d, 1.0));
  auto power_of = [&](int k, int e) -> const Polynomial& {
    auto& vec = powers[k];
    while (static_cast<int>(vec.size()) <= e) vec.push_back(mul(vec.back(), T.components[k]));
    return vec[e];
  };

  Polynomial r(d);
  for (const auto& [mono, c] : p.terms()) {
    Polynomial t = Polynomial::constant(d, c);
    for (int k = 0; k < d; ++k)
      if (mono.exps[k] > 0) t = mul(t, power_of(k, mono.exps[k]));
    r = add(r, t);
  }
  return r;
}

namespace {

// Emits all monomials of total degree exactly `remaining` over positions
// pos..dim-1, in descending-leading-exponent order.
void enumerate_rec(int dim, int pos, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (pos == dim - 1) {
    cur.exps[pos] = remaining;
    out.push_back(cur);
    cur.exps[pos] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.exps[pos] = e;
    enumerate_rec(dim, pos + 1, remaining - e, cur, out);
  }
  cur.exps[pos] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(int d, int m) : dim(d), half_degree(m) {
  if (d < 1) throw std::invalid_argument("MonomialBasis: dimension must be >= 1");
  if (m < 0) throw std::invalid_argument("MonomialBasis: degree must be >= 0");
  Monomial cur = Monomial::unit(d);
  for (int total = 0; total <= m; ++total) enumerate_rec(d, 0, total, cur, monomials);
}

int MonomialBasis::index_of(const Monomial& mono) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), mono);
  if (it == monomials.end() || !(*it == mono)) return -1;
  return static_cast<int>(it - monomials.begin());
}

GramTerm::GramTerm(MonomialBasis b, Eigen::MatrixXd m) : basis(std::move(b)), matrix(std::move(m)) {
  if (matrix.rows() != basis.size() || matrix.cols() != basis.size())
    throw std::invalid_argument("GramTerm: matrix size does not match basis");
}

Polynomial expand_gram(const GramTerm& g) {
  const int n = g.basis.size();
  Polynomial r(g.basis.dim);
  for (int u = 0; u < n; ++u) {
    r.add_term(g.basis.monomials[u] * g.basis.monomials[u], g.matrix(u, u));
    for (int v = u + 1; v < n; ++v) {
      const double c = g.matrix(u, v) + g.matrix(v, u);
      if (c != 0.0) r.add_term(g.basis.monomials[u] * g.basis.monomials[v], c);
    }
  }
  return r;
}

std::string to_string(const Polynomial& p) {
  std::vector<std::string> names;
  names.reserve(p.dim());
  for (int i = 0; i < p.dim(); ++i) names.push_back("x" + std::to_string(i + 1));
  return to_string(p, names);
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  if (static_cast<int>(names.size()) != p.dim())
    throw std::invalid_argument("to_string: name count does not match dimension");
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    double mag = c;
    if (first) {
      if (c < 0.0) {
        out += "-";
        mag = -c;
      }
    } else {
      out += c < 0.0 ? " - " : " + ";
      mag = std::abs(c);
    }
    std::string factors;
    for (int i = 0; i < mono.dim(); ++i) {
      if (mono.exps[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (mono.exps[i] > 1) factors += "^" + std::to_string(mono.exps[i]);
    }
    if (factors.empty()) {
      out += format_double(mag);
    } else if (mag == 1.0) {
      out += factors;
    } else {
      out += format_double(mag) + "*" + factors;
    }
    first = false;
  }
  return out;
}

std::string to_hex(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace sosinv
