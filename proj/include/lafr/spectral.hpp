#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/exact/charpoly.hpp"
#include "lafr/exact/linear.hpp"
#include "lafr/exact/polynomial.hpp"
#include "lafr/graph/graph.hpp"

namespace lafr {

/// Eigenvalue support of a vertex: the eigenvalues whose idempotent does not
/// annihilate e_a. Only the integer members are listed explicitly.
struct EigenvalueSupport {
  Vertex vertex = 0;
  std::vector<long> integer_eigenvalues;  // ascending
  bool all_integer = false;
  std::size_t support_size = 0;
};

/// Sign classes of a strongly cospectral pair. `zero` holds only the integer
/// eigenvalues outside the common support.
struct PairPartition {
  Vertex a = 0;
  Vertex b = 0;
  std::vector<long> plus;
  std::vector<long> minus;
  std::vector<long> zero;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
};

/// Three-valued result of a theorem checker whose hypotheses may fail.
enum class Verdict { holds, fails, not_applicable };

/// Per-graph cache of the exact spectral data: char polys, supports and
/// rational eigenspace bases. Not thread-safe; use one instance per thread.
class SpectralAnalyzer {
 public:
  explicit SpectralAnalyzer(Graph g)
      : graph_(std::move(g)),
        laplacian_(lafr::laplacian(graph_)),
        psi_(lafr::char_poly(laplacian_)),
        supports_(graph_.order()),
        support_polys_(graph_.order()),
        vertex_polys_(graph_.order()) {
    const long n = static_cast<long>(graph_.order());
    integer_spectrum_ = n == 0 ? std::map<long, int>{} : integer_roots(psi_, 0, n);
    spectrum_integral_ = all_roots_integer(psi_, integer_spectrum_);
  }

  const Graph& graph() const { return graph_; }
  const IntMatrix& laplacian() const { return laplacian_; }
  /// det(tI - L)
  const IntPolynomial& char_poly() const { return psi_; }
  /// Integer Laplacian eigenvalues with multiplicities.
  const std::map<long, int>& integer_spectrum() const { return integer_spectrum_; }
  bool spectrum_integral() const { return spectrum_integral_; }

  /// det(tI - L) with row and column a deleted. Equal for cospectral vertices.
  const IntPolynomial& vertex_poly(Vertex a) {
    check_vertex(a);
    auto& slot = vertex_polys_[a];
    if (!slot) slot = char_poly_deleted(laplacian_, a);
    return *slot;
  }

  /// psi / gcd(psi, psi_a): its roots are exactly the support of a, all simple.
  const IntPolynomial& support_poly(Vertex a) {
    check_vertex(a);
    auto& slot = support_polys_[a];
    if (!slot) {
      slot = exact_div(psi_, poly_gcd(psi_, vertex_poly(a)));
    }
    return *slot;
  }

  const EigenvalueSupport& support(Vertex a) {
    check_vertex(a);
    auto& slot = supports_[a];
    if (!slot) {
      const IntPolynomial& f = support_poly(a);
      const auto roots = integer_roots(f, 0, static_cast<long>(graph_.order()));
      EigenvalueSupport s;
      s.vertex = a;
      for (const auto& [mu, mult] : roots) s.integer_eigenvalues.push_back(mu);
      s.all_integer = all_roots_integer(f, roots);
      s.support_size = static_cast<std::size_t>(f.degree());
      slot = std::move(s);
    }
    return *slot;
  }

  /// Exact basis of ker(L - mu I); throws if mu is not an eigenvalue.
  const std::vector<RatVector>& eigenspace(long mu) {
    auto it = eigenspaces_.find(mu);
    if (it != eigenspaces_.end()) return it->second;
    RatMatrix m = to_rational(laplacian_);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= mu;
    auto basis = kernel_basis(std::move(m));
    if (basis.empty()) throw DomainError("eigenspace: " + std::to_string(mu) + " is not a Laplacian eigenvalue");
    return eigenspaces_.emplace(mu, std::move(basis)).first->second;
  }

  /// F_mu e_a
  RatVector projection_column(long mu, Vertex a) {
    check_vertex(a);
    RatVector e(graph_.order());
    e[a] = 1;
    return project(eigenspace(mu), e);
  }

  /// Exact strong cospectrality test for vertices with integer supports.
  std::optional<PairPartition> strong_cospectral(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw DomainError("strong_cospectral: a and b must differ");
    const auto& sa = support(a);
    const auto& sb = support(b);
    if (!sa.all_integer || !sb.all_integer)
      throw NonIntegerSupport("strong_cospectral: eigenvalue support is not all-integer");
    if (sa.integer_eigenvalues != sb.integer_eigenvalues) return std::nullopt;

    PairPartition part;
    part.a = a;
    part.b = b;
    for (long mu : sa.integer_eigenvalues) {
      const RatVector fa = projection_column(mu, a);
      const RatVector fb = projection_column(mu, b);
      if (fa == fb) {
        part.plus.push_back(mu);
        continue;
      }
      bool opposite = true;
      for (std::size_t i = 0; i < fa.size() && opposite; ++i) opposite = fa[i] == -fb[i];
      if (!opposite) return std::nullopt;
      part.minus.push_back(mu);
    }
    for (const auto& [mu, mult] : integer_spectrum_)
      if (!std::binary_search(sa.integer_eigenvalues.begin(), sa.integer_eigenvalues.end(), mu))
        part.zero.push_back(mu);
    return part;
  }

 private:
  void check_vertex(Vertex a) const {
    if (a >= graph_.order()) throw DomainError("vertex out of range");
  }

  Graph graph_;
  IntMatrix laplacian_;
  IntPolynomial psi_;
  std::map<long, int> integer_spectrum_;
  bool spectrum_integral_ = false;
  std::vector<std::optional<EigenvalueSupport>> supports_;
  std::vector<std::optional<IntPolynomial>> support_polys_;
  std::vector<std::optional<IntPolynomial>> vertex_polys_;
  std::map<long, std::vector<RatVector>> eigenspaces_;
};

inline IntPolynomial support_poly(const Graph& g, Vertex a) { return SpectralAnalyzer(g).support_poly(a); }

inline EigenvalueSupport eigenvalue_support(const Graph& g, Vertex a) { return SpectralAnalyzer(g).support(a); }

inline RatVector eigenprojection_column(const Graph& g, long mu, Vertex a) {
  return SpectralAnalyzer(g).projection_column(mu, a);
}

inline std::optional<PairPartition> strong_cospectral(const Graph& g, Vertex a, Vertex b) {
  return SpectralAnalyzer(g).strong_cospectral(a, b);
}

struct Periodicity {
  bool periodic = false;
  /// gcd of the nonzero support; absent when the support is {0}, in which
  /// case the vertex is fixed at every time.
  std::optional<long> big_g;
};

inline Periodicity is_periodic(SpectralAnalyzer& sa, Vertex a) {
  const auto& s = sa.support(a);
  Periodicity p;
  p.periodic = s.all_integer;
  if (!p.periodic) return p;
  long g = 0;
  for (long mu : s.integer_eigenvalues) g = std::gcd(g, mu);
  if (g > 0) p.big_g = g;
  return p;
}

inline Periodicity is_periodic(const Graph& g, Vertex a) {
  SpectralAnalyzer sa(g);
  return is_periodic(sa, a);
}

/// The product of the eigenvalues outside the support of a divides the
/// spanning-tree count. Applicable to connected graphs with an integral
/// spectrum and an all-integer support at a.
inline Verdict support_product_divides_trees(SpectralAnalyzer& sa, Vertex a) {
  const Graph& g = sa.graph();
  if (g.order() == 0 || !is_connected(g) || !sa.spectrum_integral()) return Verdict::not_applicable;
  const auto& s = sa.support(a);
  if (!s.all_integer) return Verdict::not_applicable;
  BigInt prod = 1;
  for (const auto& [mu, mult] : sa.integer_spectrum())
    if (!std::binary_search(s.integer_eigenvalues.begin(), s.integer_eigenvalues.end(), mu)) prod *= mu;
  const BigInt trees = spanning_tree_count(g);
  return mpz_divisible_p(trees.get_mpz_t(), prod.get_mpz_t()) ? Verdict::holds : Verdict::fails;
}

inline Verdict support_product_divides_trees(const Graph& g, Vertex a) {
  SpectralAnalyzer sa(g);
  return support_product_divides_trees(sa, a);
}

}  // namespace lafr
