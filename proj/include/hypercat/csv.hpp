#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include "hypercat/fock.hpp"
#include "hypercat/kerr.hpp"
#include "hypercat/model.hpp"
#include "hypercat/stats.hpp"

namespace hypercat {

// Round-trip-safe number formatting; all emitted files use it so identical
// configs produce byte-identical output.
inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string fmt(Complex v) { return fmt(v.real()) + "," + fmt(v.imag()); }

inline std::string describe(const ModelParams& m) {
  std::ostringstream os;
  os << "p=" << m.p() << " q=" << m.q() << " alpha=";
  for (size_t i = 0; i < m.alpha.size(); ++i)
    os << (i ? ";" : "") << fmt(m.alpha[i]);
  os << " beta=";
  for (size_t i = 0; i < m.beta.size(); ++i) os << (i ? ";" : "") << fmt(m.beta[i]);
  if (m.truncated()) os << " N=" << *m.trunc_N;
  if (m.phase_rule == PhaseRule::i_to_n) os << " phase=i^n";
  return os.str();
}

inline void write_fock_csv(std::ostream& os, const FockVector& v,
                           const ModelParams& m, Complex z,
                           const std::string& extra = "") {
  os << "# " << describe(m) << " z=" << fmt(z);
  if (!extra.empty()) os << " " << extra;
  os << "\n";
  os << "n,re_amp,im_amp\n";
  for (int n = 0; n < v.dim(); ++n)
    os << n << "," << fmt(v.amp[static_cast<size_t>(n)].real()) << ","
       << fmt(v.amp[static_cast<size_t>(n)].imag()) << "\n";
}

inline void write_stat_header(std::ostream& os) {
  os << "family,k,j,x,mean,std,Q,F,class\n";
}

inline void write_stat_row(std::ostream& os, const std::string& family, int k, int j,
                           double x, const StatReport& r) {
  os << family << "," << k << "," << j << "," << fmt(x) << "," << fmt(r.mean_n)
     << "," << fmt(r.std_n) << "," << fmt(r.mandel_q) << "," << fmt(r.fano) << ","
     << to_string(r.classification) << "\n";
}

inline void write_husimi_csv(std::ostream& os, const HusimiGrid& g,
                             const ModelParams& m, const std::string& extra = "") {
  os << "# " << describe(m) << " window=" << fmt(g.x_min) << ":" << fmt(g.x_max)
     << ":" << fmt(g.y_min) << ":" << fmt(g.y_max) << " nx=" << g.nx
     << " ny=" << g.ny;
  if (!extra.empty()) os << " " << extra;
  os << "\n";
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      if (ix) os << ",";
      const double v = g.at(iy, ix);
      if (std::isfinite(v)) os << fmt(v);  // null cells stay empty
    }
    os << "\n";
  }
}

}  // namespace hypercat
