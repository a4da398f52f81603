#include "thv/algebra.hpp"

namespace thv {

namespace {

AlgebraElement bracket_ll(const Rational& m, const Rational& n, const AlgebraDescriptor& alg) {
  AlgebraElement out(Generator::L(m + n), ParamPoly(m - n));
  if ((m + n).is_zero()) {
    const Rational c = (m * m * m - m) / Rational(12);
    out.add(Generator::central(alg.twisted() ? GenKind::K1 : GenKind::C1), ParamPoly(c));
  }
  return out;
}

// [L_m, I_r]
AlgebraElement bracket_li(const Rational& m, const Rational& r, const AlgebraDescriptor& alg) {
  AlgebraElement out(Generator::I(m + r), ParamPoly(-r));
  if (!alg.twisted() && (m + r).is_zero()) out.add(Generator::central(GenKind::C2), ParamPoly(-(m * m + m)));
  return out;
}

// [I_r, I_s]
AlgebraElement bracket_ii(const Rational& r, const Rational& s, const AlgebraDescriptor& alg) {
  if (!(r + s).is_zero()) return {};
  if (!alg.twisted()) return AlgebraElement(Generator::central(GenKind::C3), ParamPoly(r));
  if (alg.t() != 2) return {};
  return AlgebraElement(Generator::central(GenKind::K3), ParamPoly(r));
}

}  // namespace

AlgebraElement bracket(const Generator& x, const Generator& y, const AlgebraDescriptor& alg) {
  validate(x, alg);
  validate(y, alg);
  if (x.is_central() || y.is_central()) return {};
  if (x.kind == GenKind::L && y.kind == GenKind::L) return bracket_ll(x.index, y.index, alg);
  if (x.kind == GenKind::L) return bracket_li(x.index, y.index, alg);
  if (y.kind == GenKind::L) return -bracket_li(y.index, x.index, alg);
  return bracket_ii(x.index, y.index, alg);
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, const AlgebraDescriptor& alg) {
  AlgebraElement out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) out += (cx * cy) * bracket(gx, gy, alg);
  return out;
}

}  // namespace thv
