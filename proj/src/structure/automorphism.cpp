// An automorphism fixes omega and sends I to a I. Comparing the images of
// L[1]I[-1]|0> and I[1]I[-1]|0> (both multiples of |0>) constrains a.

#include <stdexcept>

#include "thv/structure.hpp"

namespace thv {

namespace {

using Univariate = std::vector<Rational>;  // coefficient of a^i at index i

void trim(Univariate& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Univariate to_univariate(const ParamPoly& p) {
  Univariate out;
  for (const auto& c : p.coefficients_in(Param::a)) {
    const auto v = c.constant_value();
    if (!v) throw std::logic_error("automorphism constraint is not univariate in a");
    out.push_back(*v);
  }
  trim(out);
  return out;
}

ParamPoly from_univariate(const Univariate& p) {
  ParamPoly out;
  for (std::size_t i = 0; i < p.size(); ++i) out += ParamPoly::var(Param::a, static_cast<unsigned>(i)) * p[i];
  return out;
}

Univariate remainder(Univariate a, const Univariate& b) {
  while (a.size() >= b.size()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate gcd(Univariate a, Univariate b) {
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Univariate derivative(const Univariate& p) {
  Univariate out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(out);
  return out;
}

Univariate quotient(Univariate a, const Univariate& b) {
  Univariate q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

// Number of distinct nonzero complex roots of a nonzero polynomial.
std::size_t distinct_nonzero_roots(Univariate p) {
  while (p.size() > 1 && p.front().is_zero()) p.erase(p.begin());
  const Univariate g = gcd(p, derivative(p));
  const Univariate squarefree = g.empty() ? p : quotient(p, g);
  return squarefree.size() - 1;
}

}  // namespace

std::string_view aut_case_name(AutCase c) {
  switch (c) {
    case AutCase::Trivial: return "Trivial";
    case AutCase::Z2: return "Z2";
    case AutCase::Cx: return "Cx";
  }
  return "?";
}

AutReport automorphism_group(const Rational& l2, const Rational& l3) {
  const Module vac(ModuleDescriptor::vacuum());
  const ParamPoly a = ParamPoly::var(Param::a);
  const ModuleVector i_state = field_state(vac, FieldId::Igen);

  AutReport report;
  report.l2 = l2;
  report.l3 = l3;
  // phi(x_(j) I) = x_(j) phi(I) = a^d (x_(j) I), while x_(j) I = c |0> is fixed: (a^d - 1) c = 0.
  struct Probe {
    Generator g;
    unsigned degree;  // power of a picked up by phi
  };
  for (const Probe& probe : {Probe{Generator::L(Rational(1)), 1}, Probe{Generator::I(Rational(1)), 2}}) {
    const ModuleVector image = vac.act(probe.g, i_state);
    const ParamPoly c = image.coefficient(PBWMonomial{});
    if (!(image == c * vac.cyclic())) throw std::logic_error("automorphism probe did not land on |0>");
    const ParamPoly constraint = a.pow(probe.degree) * c - c;
    report.trace.push_back({probe.g.str() + "I[-1]|0>", constraint.is_zero() ? constraint : constraint.monic()});
  }

  const std::map<Param, ParamPoly> at{{Param::l2, ParamPoly(l2)}, {Param::l3, ParamPoly(l3)}};
  Univariate g;
  for (const auto& c : report.trace) g = gcd(g, to_univariate(c.constraint.substitute(at)));
  report.solution_gcd = from_univariate(g);
  if (g.empty()) {
    report.label = AutCase::Cx;
  } else {
    switch (distinct_nonzero_roots(g)) {
      case 1: report.label = AutCase::Trivial; break;
      case 2: report.label = AutCase::Z2; break;
      default: throw std::logic_error("unexpected automorphism constraint " + report.solution_gcd.str());
    }
  }
  return report;
}

}  // namespace thv
