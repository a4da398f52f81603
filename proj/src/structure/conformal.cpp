#include <stdexcept>
#include <string>

#include "thv/structure.hpp"

namespace thv {

namespace {

constexpr std::size_t kMaxFailureNotes = 8;

}  // namespace

ModuleVector heisenberg_conformal_vector(const Module& vacuum) {
  const auto l2 = vacuum.descriptor().param("l2").constant_value();
  const auto l3 = vacuum.descriptor().param("l3").constant_value();
  if (!l2 || !l3) throw std::invalid_argument("omega_H needs concrete l2 and l3");
  if (l3->is_zero()) throw std::domain_error("omega_H needs l3 != 0");
  return ParamPoly(Rational(1) / (Rational(2) * *l3)) * vacuum.vector(PBWMonomial{{1, 1}, {}}) +
         ParamPoly(*l2 / *l3) * vacuum.vector(PBWMonomial{{2}, {}});
}

ConformalReport conformal_decomposition_check(const Rational& l1, const Rational& l2, const Rational& l3,
                                              const Rational& max_level, long max_mode) {
  if (l3.is_zero()) throw std::domain_error("conformal decomposition needs l3 != 0");
  const Module vac(ModuleDescriptor::vacuum(ParamPoly(l1), ParamPoly(l2), ParamPoly(l3)));
  const ModuleVector omega_h = heisenberg_conformal_vector(vac);

  ConformalReport report;
  report.l1 = l1;
  report.l2 = l2;
  report.l3 = l3;
  report.central_charge = l1 - Rational(1) + Rational(12) * l2 * l2 / l3;
  report.max_mode = max_mode;
  report.max_level = max_level;

  const auto lh = [&](long n, const ModuleVector& w) { return state_mode(vac, vac, omega_h, Rational(n + 1), w); };
  const auto lt = [&](long n, const ModuleVector& w) { return field_mode(vac, FieldId::Omega, Rational(n), w) - lh(n, w); };
  const auto note = [&](const std::string& s) {
    if (report.failures.size() < kMaxFailureNotes) report.failures.push_back(s);
  };

  for (const auto& lvl : vac.levels_up_to(max_level)) {
    for (const auto& b : vac.basis_at_level(lvl)) {
      const ModuleVector w = vac.vector(b);
      ++report.vectors;
      for (long m = -max_mode; m <= max_mode; ++m) {
        const ModuleVector lt_m_w = lt(m, w);
        for (long n = -max_mode; n <= max_mode; ++n) {
          const ModuleVector lh_n_w = lh(n, w);
          const ModuleVector lt_n_w = lt(n, w);
          const std::string where = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " on " + w.str();

          ++report.commute_checks;
          if (!(lt(m, lh_n_w) == lh(n, lt_m_w))) {
            ++report.commute_failures;
            note("[L~_m, L^H_n] != 0 at " + where);
          }

          ++report.virasoro_checks;
          ModuleVector expected = ParamPoly(m - n) * lt(m + n, w);
          if (m + n == 0)
            expected += ParamPoly(Rational(m * m * m - m, 12) * report.central_charge) * w;
          if (!(lt(m, lt_n_w) - lt(n, lt_m_w) == expected)) {
            ++report.virasoro_failures;
            note("[L~_m, L~_n] mismatch at " + where);
          }
        }
      }
    }
  }
  return report;
}

}  // namespace thv
