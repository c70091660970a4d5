#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <compare>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/graph/graph.hpp"
#include "lafr/oracle.hpp"
#include "lafr/spectral.hpp"

namespace lafr {

/// The time (num / den) * pi, kept in lowest terms with den > 0.
struct PiTime {
  long long num = 0;
  long long den = 1;

  static PiTime make(long long num, long long den) {
    if (den == 0) throw DomainError("PiTime: zero denominator");
    if (den < 0) num = -num, den = -den;
    const long long g = std::gcd(num, den);
    return g == 0 ? PiTime{0, 1} : PiTime{num / g, den / g};
  }

  double value() const { return static_cast<double>(num) * std::numbers::pi / static_cast<double>(den); }

  /// "2/3 π", "π", "0"
  std::string to_string() const {
    if (num == 0) return "0";
    if (den == 1) return num == 1 ? "π" : num == -1 ? "-π" : std::to_string(num) + " π";
    return std::to_string(num) + "/" + std::to_string(den) + " π";
  }

  friend bool operator==(const PiTime& x, const PiTime& y) { return x.num * y.den == y.num * x.den; }
  friend std::strong_ordering operator<=>(const PiTime& x, const PiTime& y) {
    return static_cast<__int128>(x.num) * y.den <=> static_cast<__int128>(y.num) * x.den;
  }
};

/// The root of unity exp(2 pi i k / g).
struct PhaseRational {
  long long k = 0;
  long long g = 1;

  std::complex<double> omega() const {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(g));
  }
  friend bool operator==(const PhaseRational& x, const PhaseRational& y) { return x.k * y.g == y.k * x.g; }
};

enum class RevivalStatus { not_strongly_cospectral, non_integer_support, periodic_only, proper };

inline std::string_view to_string(RevivalStatus s) {
  switch (s) {
    case RevivalStatus::not_strongly_cospectral: return "NOT_STRONGLY_COSPECTRAL";
    case RevivalStatus::non_integer_support: return "NON_INTEGER_SUPPORT";
    case RevivalStatus::periodic_only: return "PERIODIC_ONLY";
    case RevivalStatus::proper: return "PROPER";
  }
  return "?";
}

inline RevivalStatus revival_status_from_string(std::string_view s) {
  for (auto st : {RevivalStatus::not_strongly_cospectral, RevivalStatus::non_integer_support,
                  RevivalStatus::periodic_only, RevivalStatus::proper})
    if (to_string(st) == s) return st;
  throw DomainError("unknown revival status: " + std::string(s));
}

struct RevivalDecision {
  RevivalStatus status = RevivalStatus::not_strongly_cospectral;
  Vertex a = 0;
  Vertex b = 0;
  std::optional<PairPartition> partition;
  std::optional<long long> g;
  std::optional<PiTime> earliest_time;
  std::optional<PhaseRational> phase;
  std::optional<bool> is_pst;

  friend bool operator==(const RevivalDecision&, const RevivalDecision&) = default;
};

/// alpha = (1 + omega) / 2, beta = (1 - omega) / 2.
struct Amplitudes {
  PhaseRational phase;
  std::complex<double> alpha;
  std::complex<double> beta;
};

inline Amplitudes amplitudes_at(PhaseRational phase) {
  if (phase.g <= 0 || phase.k < 0 || phase.k >= phase.g) throw DomainError("amplitudes_at: need 0 <= k < g");
  Amplitudes amp{phase, {}, {}};
  // Exact special cases keep alpha/beta free of rounding noise.
  if (phase.k == 0) {
    amp.alpha = 1.0;
    amp.beta = 0.0;
  } else if (2 * phase.k == phase.g) {
    amp.alpha = 0.0;
    amp.beta = 1.0;
  } else {
    const auto w = phase.omega();
    amp.alpha = 0.5 * (1.0 + w);
    amp.beta = 0.5 * (1.0 - w);
  }
  return amp;
}

/// gcd of all differences within the plus class and within the minus class.
inline long long class_gcd(const PairPartition& p) {
  if (p.plus.size() <= 1 && p.minus.size() <= 1)
    throw SpecialSmall("class_gcd: no within-class differences (graph with fewer than three vertices)");
  long long g = 0;
  for (const auto* cls : {&p.plus, &p.minus})
    for (std::size_t i = 1; i < cls->size(); ++i) g = std::gcd(g, (*cls)[i] - (*cls)[0]);
  return g;
}

/// Decides proper Laplacian fractional revival between a and b (n >= 3).
inline RevivalDecision decide_proper_lafr(SpectralAnalyzer& sa, Vertex a, Vertex b) {
  const Graph& gr = sa.graph();
  if (a >= gr.order() || b >= gr.order()) throw DomainError("decide_proper_lafr: vertex out of range");
  if (a == b) throw DomainError("decide_proper_lafr: a and b must differ");
  if (gr.order() < 3) throw SpecialSmall("decide_proper_lafr: needs at least three vertices; see k2_schedule");

  RevivalDecision d;
  d.a = a;
  d.b = b;
  if (!sa.support(a).all_integer || !sa.support(b).all_integer) {
    d.status = RevivalStatus::non_integer_support;
    return d;
  }
  auto part = sa.strong_cospectral(a, b);
  if (!part) {
    d.status = RevivalStatus::not_strongly_cospectral;
    return d;
  }
  // Singleton classes only occur for a pair forming a K2 component.
  if (part->plus.size() <= 1 && part->minus.size() <= 1)
    throw SpecialSmall("decide_proper_lafr: the pair forms a K2 component; see K2Schedule");
  const long long g = class_gcd(*part);
  d.g = g;
  // Every minus element has the same residue mod g.
  const long long k = part->minus.front() % g;
  d.partition = std::move(part);
  d.phase = PhaseRational{k, g};
  if (k == 0) {
    d.status = RevivalStatus::periodic_only;
    return d;
  }
  d.status = RevivalStatus::proper;
  d.earliest_time = PiTime::make(2, g);
  d.is_pst = 2 * k == g;
  return d;
}

inline RevivalDecision decide_proper_lafr(const Graph& g, Vertex a, Vertex b) {
  SpectralAnalyzer sa(g);
  return decide_proper_lafr(sa, a, b);
}

/// True iff the pair is in block form at time tau (proper or periodic).
inline bool revives_at(const RevivalDecision& d, PiTime tau) {
  if (!d.g || !d.phase) return false;
  // tau / (2 pi / g) = num * g / (2 den)
  return (static_cast<__int128>(tau.num) * *d.g) % (2 * tau.den) == 0;
}

/// True iff proper revival (beta != 0) happens between the pair at tau.
inline bool proper_at(const RevivalDecision& d, PiTime tau) {
  if (d.status != RevivalStatus::proper || !revives_at(d, tau)) return false;
  const long long m = static_cast<long long>(static_cast<__int128>(tau.num) * *d.g / (2 * tau.den));
  const long long r = static_cast<long long>((static_cast<__int128>(m) * d.phase->k) % *d.g);
  return r != 0;
}

/// K2 closed form: U(t) e_0 = (1 + w)/2 e_0 + (1 - w)/2 e_1 with w = e^{2it}.
struct K2Schedule {
  static bool periodic_at(PiTime t) { return t.den == 1; }
  static bool pst_at(PiTime t) { return t.den == 2; }
  static bool proper_at(PiTime t) { return t.den != 1; }
  /// Phase of w = e^{2it} as a fraction of a full turn.
  static PhaseRational phase_at(PiTime t) {
    const long long k = ((t.num % t.den) + t.den) % t.den;
    return {k, t.den};
  }
};

/// Decisions for every unordered pair with status PROPER or PERIODIC_ONLY,
/// in lexicographic pair order. Pairs are pruned to equal degrees, equal
/// vertex polynomials and equal all-integer supports before any eigenspace is
/// computed.
inline std::vector<RevivalDecision> all_lafr_pairs(SpectralAnalyzer& sa, bool stop_at_first_proper = false) {
  const Graph& g = sa.graph();
  const std::size_t n = g.order();
  if (n < 3) throw SpecialSmall("all_lafr_pairs: needs at least three vertices");
  std::vector<RevivalDecision> out;
  for (Vertex a = 0; a < n; ++a) {
    bool support_checked = false;
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.degree(a) != g.degree(b)) continue;
      // Strongly cospectral vertices are cospectral.
      if (sa.vertex_poly(a) != sa.vertex_poly(b)) continue;
      if (!support_checked) {
        if (!sa.support(a).all_integer) break;
        support_checked = true;
      }
      const auto& sb = sa.support(b);
      if (!sb.all_integer || sb.integer_eigenvalues != sa.support(a).integer_eigenvalues) continue;
      RevivalDecision d;
      try {
        d = decide_proper_lafr(sa, a, b);
      } catch (const SpecialSmall&) {
        continue;  // K2 component: closed-form schedule, no single decision
      }
      if (d.status == RevivalStatus::proper || d.status == RevivalStatus::periodic_only) {
        const bool proper = d.status == RevivalStatus::proper;
        out.push_back(std::move(d));
        if (proper && stop_at_first_proper) return out;
      }
    }
  }
  return out;
}

inline std::vector<RevivalDecision> all_lafr_pairs(const Graph& g) {
  SpectralAnalyzer sa(g);
  return all_lafr_pairs(sa);
}

inline std::vector<RevivalDecision> proper_pairs(SpectralAnalyzer& sa) {
  auto all = all_lafr_pairs(sa);
  std::erase_if(all, [](const RevivalDecision& d) { return d.status != RevivalStatus::proper; });
  return all;
}

inline std::vector<RevivalDecision> proper_pairs(const Graph& g) {
  SpectralAnalyzer sa(g);
  return proper_pairs(sa);
}

inline bool has_proper_pair(SpectralAnalyzer& sa) {
  const auto found = all_lafr_pairs(sa, true);
  return std::any_of(found.begin(), found.end(),
                     [](const RevivalDecision& d) { return d.status == RevivalStatus::proper; });
}

/// Earliest time at which some pair has proper revival. Absent when no pair
/// does, and for graphs on fewer than three vertices (K2 revives at every
/// t outside pi Z, so there is no earliest time).
inline std::optional<PiTime> earliest_common_lafr_time(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  std::optional<PiTime> best;
  for (const auto& d : proper_pairs(g))
    if (!best || *d.earliest_time < *best) best = d.earliest_time;
  return best;
}

/// ||U(tau) e_a - alpha e_a - beta e_b||_inf at the earliest revival time.
inline double oracle_residual(const oracle::Propagator& prop, const RevivalDecision& d) {
  if (!d.earliest_time || !d.phase) throw DomainError("oracle_residual: decision carries no revival time");
  const auto amp = amplitudes_at(*d.phase);
  auto col = prop.column(d.a, d.earliest_time->value());
  col[d.a] -= amp.alpha;
  col[d.b] -= amp.beta;
  double worst = 0.0;
  for (const auto& c : col) worst = std::max(worst, std::abs(c));
  return worst;
}

inline double oracle_residual(const Graph& g, const RevivalDecision& d) {
  return oracle_residual(oracle::Propagator(g), d);
}

}  // namespace lafr
