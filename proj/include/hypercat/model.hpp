#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "hypercat/errors.hpp"

namespace hypercat {

// Per-n unit phase attached to the Fock amplitudes of a family. Truncated
// families from negative Pochhammer entries ship with the i^n convention;
// everything else is phase-free.
enum class PhaseRule { unit, i_to_n };

inline std::complex<double> phase_at(PhaseRule rule, int n) {
  if (rule == PhaseRule::unit) return {1.0, 0.0};
  switch (n & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Family descriptor (p, q, alpha, beta) with the sign bookkeeping needed for
// truncated families. Negative entries must be negative integers; the state
// space then truncates at N = |largest negative entry| (the entry closest to
// zero, where the first zero/pole of f sits).
struct ModelParams {
  std::vector<double> alpha;
  std::vector<double> beta;
  int sign_count = 0;                // number of negative entries across alpha, beta
  std::optional<int> trunc_N;        // present iff sign_count > 0
  PhaseRule phase_rule = PhaseRule::unit;

  int p() const { return static_cast<int>(alpha.size()); }
  int q() const { return static_cast<int>(beta.size()); }
  bool truncated() const { return trunc_N.has_value(); }

  static ModelParams make(std::vector<double> a, std::vector<double> b,
                          PhaseRule rule = PhaseRule::unit) {
    ModelParams m;
    m.alpha = std::move(a);
    m.beta = std::move(b);
    m.phase_rule = rule;
    std::optional<int> N;
    for (const auto* list : {&m.alpha, &m.beta}) {
      for (double v : *list) {
        if (v == 0.0) throw family_error("family parameter must be nonzero");
        if (v < 0.0) {
          if (v != std::floor(v))
            throw family_error("negative family parameters must be negative integers");
          ++m.sign_count;
          int mag = static_cast<int>(-v);
          N = N ? std::min(*N, mag) : mag;
        }
      }
    }
    m.trunc_N = N;
    return m;
  }
};

inline bool same_family(const ModelParams& a, const ModelParams& b) {
  return a.alpha == b.alpha && a.beta == b.beta && a.phase_rule == b.phase_rule;
}

// Duality f -> 1/f: swap (p, alpha) with (q, beta).
inline ModelParams dual(const ModelParams& m) {
  return ModelParams::make(m.beta, m.alpha, m.phase_rule);
}

enum class DomainKind { whole_plane, unit_disk, unit_disk_with_boundary, empty };

// Convergence domain of the normalization series in x = |z|^2.
struct ConvergenceDomain {
  DomainKind kind = DomainKind::whole_plane;
  double eta = 0.0;  // Re(sum alpha - sum beta); meaningful for p = q+1 only

  // Admission rule for the series argument modulus. The boundary |x| = 1 of a
  // disk family is accepted only when eta < 0; conditionally convergent
  // boundary cases are rejected.
  bool admits(double x_abs) const {
    switch (kind) {
      case DomainKind::whole_plane: return true;
      case DomainKind::empty: return x_abs == 0.0;
      case DomainKind::unit_disk: return x_abs <= 1.0 - 1e-9;
      case DomainKind::unit_disk_with_boundary: return x_abs <= 1.0;
    }
    return false;
  }
};

inline ConvergenceDomain convergence_domain(const ModelParams& m) {
  ConvergenceDomain d;
  if (m.truncated()) {
    d.kind = DomainKind::whole_plane;
    return d;
  }
  const int p = m.p(), q = m.q();
  if (p < q + 1) {
    d.kind = DomainKind::whole_plane;
  } else if (p > q + 1) {
    d.kind = DomainKind::empty;
  } else {
    double eta = 0.0;
    for (double v : m.alpha) eta += v;
    for (double v : m.beta) eta -= v;
    d.eta = eta;
    d.kind = eta < 0.0 ? DomainKind::unit_disk_with_boundary : DomainKind::unit_disk;
  }
  return d;
}

inline void require_in_domain(const ModelParams& m, double x_abs) {
  const auto d = convergence_domain(m);
  if (d.kind == DomainKind::empty && x_abs != 0.0)
    throw family_error("ill-defined family (R=0)");
  if (!d.admits(x_abs))
    throw domain_error("argument outside convergence domain");
}

// Named families of Tables I-II. Spin presets take s (2s must be a positive
// integer for the SU(2) rows).
struct Preset {
  std::string name;
  ModelParams params;
};

inline Preset preset_canonical() { return {"canonical", ModelParams::make({}, {})}; }

inline Preset preset_gp_su11(double s) {
  return {"gp-su11", ModelParams::make({2.0 * s}, {})};
}
inline Preset preset_bg_su11(double s) {
  return {"bg-su11", ModelParams::make({}, {2.0 * s})};
}
inline Preset preset_sg() { return {"sg", ModelParams::make({1.0}, {})}; }
inline Preset preset_dual_sg() { return {"dual-sg", ModelParams::make({}, {1.0})}; }
inline Preset preset_inverse_bosonic() {
  return {"inverse-bosonic", ModelParams::make({1.0, 1.0}, {})};
}
inline Preset preset_dual_inverse_bosonic() {
  return {"dual-inverse-bosonic", ModelParams::make({}, {1.0, 1.0})};
}
inline Preset preset_hydrogen() {
  return {"hydrogen", ModelParams::make({2.0, 2.0}, {3.0})};
}
inline Preset preset_confluent(double a, double b) {
  return {"confluent", ModelParams::make({a}, {b})};
}
inline Preset preset_bg_su2(double s) {
  return {"bg-su2", ModelParams::make({}, {-2.0 * s}, PhaseRule::i_to_n)};
}
inline Preset preset_gp_su2(double s) {
  return {"gp-su2", ModelParams::make({-2.0 * s}, {}, PhaseRule::i_to_n)};
}

// Lookup used by the CLI. s is consumed by the spin families, (a, b) by the
// confluent family.
inline std::optional<Preset> make_preset(const std::string& name, double s = 1.0,
                                         double a = 1.0, double b = 1.0) {
  if (name == "canonical") return preset_canonical();
  if (name == "gp-su11" || name == "perelomov") return preset_gp_su11(s);
  if (name == "bg-su11") return preset_bg_su11(s);
  if (name == "sg") return preset_sg();
  if (name == "dual-sg") return preset_dual_sg();
  if (name == "inverse-bosonic") return preset_inverse_bosonic();
  if (name == "dual-inverse-bosonic") return preset_dual_inverse_bosonic();
  if (name == "hydrogen") return preset_hydrogen();
  if (name == "confluent") return preset_confluent(a, b);
  if (name == "bg-su2") return preset_bg_su2(s);
  if (name == "gp-su2") return preset_gp_su2(s);
  return std::nullopt;
}

}  // namespace hypercat
