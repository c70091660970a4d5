#pragma once

#include <chrono>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lafr/checks.hpp"
#include "lafr/error.hpp"
#include "lafr/graph/graph.hpp"
#include "lafr/graph/io.hpp"
#include "lafr/oracle.hpp"
#include "lafr/revival.hpp"
#include "lafr/spectral.hpp"

namespace lafr {

inline constexpr std::size_t kMaxExactOrder = 500;

inline std::string toolchain_version() {
#if defined(__clang__)
  return "clang " __clang_version__;
#elif defined(__GNUC__)
  return "gcc " __VERSION__;
#else
  return "unknown";
#endif
}

/// "%.12f"
inline std::string decimal12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

struct DecisionEntry {
  RevivalDecision decision;
  std::optional<std::complex<double>> alpha;
  std::optional<std::complex<double>> beta;
  std::optional<double> oracle_residual;

  friend bool operator==(const DecisionEntry&, const DecisionEntry&) = default;
};

struct VertexEntry {
  Vertex vertex = 0;
  std::vector<long> support;
  bool support_integral = false;
  std::size_t support_size = 0;
  bool periodic = false;
  std::optional<long> big_g;
  std::optional<PiTime> period;

  friend bool operator==(const VertexEntry&, const VertexEntry&) = default;
};

struct AnalysisReport {
  std::string graph6;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::vector<DecisionEntry> decisions;
  std::vector<VertexEntry> vertices;
  /// Set for K2, which revives at a continuum of times.
  std::optional<std::string> special;
  double exact_seconds = 0.0;
  double oracle_seconds = 0.0;
  std::string toolchain;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  /// Empty: every PROPER / PERIODIC_ONLY pair. Otherwise exactly these pairs.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  double tol = oracle::kVerifyTol;
  bool oracle = true;
};

inline AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opt = {}) {
  using clock = std::chrono::steady_clock;
  if (g.order() > kMaxExactOrder) throw DomainError("analyze: order exceeds the exact-arithmetic limit of 500");
  AnalysisReport r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.edges = g.size();
  r.toolchain = toolchain_version();

  const auto t0 = clock::now();
  SpectralAnalyzer sa(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& s = sa.support(v);
    const auto p = is_periodic(sa, v);
    r.vertices.push_back({v, s.integer_eigenvalues, s.all_integer, s.support_size, p.periodic, p.big_g, minimal_period(p)});
  }
  std::vector<RevivalDecision> decisions;
  if (g.order() == 2) {
    r.special = "K2: proper revival at every t outside pi*Z, perfect state transfer at t in pi/2 + pi*Z";
  } else if (g.order() >= 3) {
    if (opt.pairs.empty()) {
      decisions = all_lafr_pairs(sa);
    } else {
      for (auto [a, b] : opt.pairs) decisions.push_back(decide_proper_lafr(sa, std::min(a, b), std::max(a, b)));
      std::sort(decisions.begin(), decisions.end(),
                [](const auto& x, const auto& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    }
  }
  const auto t1 = clock::now();
  std::optional<oracle::Propagator> prop;
  for (auto& d : decisions) {
    DecisionEntry e{std::move(d), {}, {}, {}};
    if (e.decision.phase) {
      const auto amp = amplitudes_at(*e.decision.phase);
      e.alpha = amp.alpha;
      e.beta = amp.beta;
    }
    if (opt.oracle && e.decision.status == RevivalStatus::proper) {
      if (!prop) prop.emplace(g);
      e.oracle_residual = oracle_residual(*prop, e.decision);
    }
    r.decisions.push_back(std::move(e));
  }
  const auto t2 = clock::now();
  r.exact_seconds = std::chrono::duration<double>(t1 - t0).count();
  r.oracle_seconds = std::chrono::duration<double>(t2 - t1).count();
  return r;
}

// ---- JSON ----

using nlohmann::json;

inline json time_json(const PiTime& t) {
  return {{"num", t.num}, {"den", t.den}, {"unit", "pi"}, {"exact", t.to_string()}, {"decimal", decimal12(t.value())}};
}

inline PiTime time_from_json(const json& j) {
  if (j.at("unit").get<std::string>() != "pi") throw DomainError("time unit must be pi");
  return PiTime::make(j.at("num").get<long long>(), j.at("den").get<long long>());
}

inline json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline std::complex<double> complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

template <class T, class F>
json optional_json(const std::optional<T>& v, F f) {
  return v ? f(*v) : json(nullptr);
}

template <class T, class F>
std::optional<T> optional_from_json(const json& j, const char* key, F f) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return f(j.at(key));
}

inline json to_json(const DecisionEntry& e) {
  const auto& d = e.decision;
  json j;
  j["pair"] = {d.a, d.b};
  j["status"] = std::string(to_string(d.status));
  j["g"] = optional_json(d.g, [](long long v) { return json(v); });
  j["time"] = optional_json(d.earliest_time, time_json);
  j["phase"] = optional_json(d.phase, [](const PhaseRational& p) { return json{{"k", p.k}, {"g", p.g}}; });
  j["alpha"] = optional_json(e.alpha, complex_json);
  j["beta"] = optional_json(e.beta, complex_json);
  j["is_pst"] = optional_json(d.is_pst, [](bool b) { return json(b); });
  j["oracle_residual"] = optional_json(e.oracle_residual, [](double x) { return json(x); });
  j["partition"] = optional_json(d.partition, [](const PairPartition& p) {
    return json{{"plus", p.plus}, {"minus", p.minus}, {"zero", p.zero}};
  });
  return j;
}

inline DecisionEntry decision_from_json(const json& j) {
  DecisionEntry e;
  auto& d = e.decision;
  d.a = j.at("pair").at(0).get<Vertex>();
  d.b = j.at("pair").at(1).get<Vertex>();
  d.status = revival_status_from_string(j.at("status").get<std::string>());
  d.g = optional_from_json<long long>(j, "g", [](const json& v) { return v.get<long long>(); });
  d.earliest_time = optional_from_json<PiTime>(j, "time", time_from_json);
  d.phase = optional_from_json<PhaseRational>(j, "phase", [](const json& v) {
    return PhaseRational{v.at("k").get<long long>(), v.at("g").get<long long>()};
  });
  e.alpha = optional_from_json<std::complex<double>>(j, "alpha", complex_from_json);
  e.beta = optional_from_json<std::complex<double>>(j, "beta", complex_from_json);
  d.is_pst = optional_from_json<bool>(j, "is_pst", [](const json& v) { return v.get<bool>(); });
  e.oracle_residual = optional_from_json<double>(j, "oracle_residual", [](const json& v) { return v.get<double>(); });
  d.partition = optional_from_json<PairPartition>(j, "partition", [&](const json& v) {
    PairPartition p;
    p.a = d.a;
    p.b = d.b;
    p.plus = v.at("plus").get<std::vector<long>>();
    p.minus = v.at("minus").get<std::vector<long>>();
    p.zero = v.at("zero").get<std::vector<long>>();
    return p;
  });
  return e;
}

inline json to_json(const AnalysisReport& r) {
  json j;
  j["graph"] = {{"graph6", r.graph6}, {"n", r.n}, {"edges", r.edges}};
  j["decisions"] = json::array();
  for (const auto& e : r.decisions) j["decisions"].push_back(to_json(e));
  j["periodicity"] = json::array();
  j["supports"] = json::array();
  for (const auto& v : r.vertices) {
    j["periodicity"].push_back({{"vertex", v.vertex},
                                {"periodic", v.periodic},
                                {"G", optional_json(v.big_g, [](long x) { return json(x); })},
                                {"period", optional_json(v.period, time_json)}});
    j["supports"].push_back(
        {{"vertex", v.vertex}, {"eigenvalues", v.support}, {"all_integer", v.support_integral}, {"size", v.support_size}});
  }
  j["special"] = optional_json(r.special, [](const std::string& s) { return json(s); });
  j["runtime"] = {{"exact_seconds", r.exact_seconds}, {"oracle_seconds", r.oracle_seconds}};
  j["toolchain"] = r.toolchain;
  return j;
}

inline AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.graph6 = j.at("graph").at("graph6").get<std::string>();
  r.n = j.at("graph").at("n").get<std::size_t>();
  r.edges = j.at("graph").at("edges").get<std::size_t>();
  for (const auto& d : j.at("decisions")) r.decisions.push_back(decision_from_json(d));
  const auto& per = j.at("periodicity");
  const auto& sup = j.at("supports");
  if (per.size() != sup.size()) throw DomainError("report: periodicity and supports differ in length");
  for (std::size_t i = 0; i < per.size(); ++i) {
    VertexEntry v;
    v.vertex = per[i].at("vertex").get<Vertex>();
    v.periodic = per[i].at("periodic").get<bool>();
    v.big_g = optional_from_json<long>(per[i], "G", [](const json& x) { return x.get<long>(); });
    v.period = optional_from_json<PiTime>(per[i], "period", time_from_json);
    v.support = sup[i].at("eigenvalues").get<std::vector<long>>();
    v.support_integral = sup[i].at("all_integer").get<bool>();
    v.support_size = sup[i].at("size").get<std::size_t>();
    r.vertices.push_back(std::move(v));
  }
  r.special = optional_from_json<std::string>(j, "special", [](const json& x) { return x.get<std::string>(); });
  r.exact_seconds = j.at("runtime").at("exact_seconds").get<double>();
  r.oracle_seconds = j.at("runtime").at("oracle_seconds").get<double>();
  r.toolchain = j.at("toolchain").get<std::string>();
  return r;
}

/// Plain-text rendering for terminals.
inline std::string to_text(const AnalysisReport& r) {
  std::string s = "graph " + r.graph6 + "  n=" + std::to_string(r.n) + "  |E|=" + std::to_string(r.edges) + "\n";
  if (r.special) s += *r.special + "\n";
  std::size_t proper = 0;
  for (const auto& e : r.decisions) proper += e.decision.status == RevivalStatus::proper;
  s += "proper pairs: " + std::to_string(proper) + "\n";
  for (const auto& e : r.decisions) {
    const auto& d = e.decision;
    s += "  (" + std::to_string(d.a) + "," + std::to_string(d.b) + ") " + std::string(to_string(d.status));
    if (d.g) s += "  g=" + std::to_string(*d.g);
    if (d.earliest_time)
      s += "  time=" + d.earliest_time->to_string() + " (" + decimal12(d.earliest_time->value()) + ")";
    if (d.phase && d.status == RevivalStatus::proper) s += "  phase=" + std::to_string(d.phase->k) + "/" + std::to_string(d.phase->g);
    if (e.alpha && d.status == RevivalStatus::proper)
      s += "  alpha=" + decimal12(e.alpha->real()) + (e.alpha->imag() < 0 ? "" : "+") + decimal12(e.alpha->imag()) + "i" +
           "  beta=" + decimal12(e.beta->real()) + (e.beta->imag() < 0 ? "" : "+") + decimal12(e.beta->imag()) + "i";
    if (d.is_pst) s += *d.is_pst ? "  PST" : "";
    if (e.oracle_residual) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2e", *e.oracle_residual);
      s += std::string("  residual=") + buf;
    }
    s += "\n";
  }
  s += "periodicity:\n";
  for (const auto& v : r.vertices) {
    s += "  " + std::to_string(v.vertex) + ": ";
    if (!v.periodic) {
      s += "not periodic\n";
      continue;
    }
    if (!v.big_g) {
      s += "periodic at every time\n";
      continue;
    }
    s += "periodic  G=" + std::to_string(*v.big_g) + "  period=" + v.period->to_string() + " (" + decimal12(v.period->value()) + ")\n";
  }
  return s;
}

}  // namespace lafr
