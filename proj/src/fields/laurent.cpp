#include <string>

#include "thv/errors.hpp"
#include "thv/fields.hpp"

namespace thv {

namespace {

void require_nonempty(const Window& w, const char* what) {
  if (w.empty()) throw WindowError(std::string(what) + ": window has no exact interior left");
}

}  // namespace

Laurent2::Laurent2(int t, Window window) : t_(t), window_(window), interior_(window) {
  if (t < 1) throw WindowError("twist t must be >= 1");
  require_nonempty(window, "Laurent2");
}

void Laurent2::add(long e1, long e2, const Rational& c) {
  if (c.is_zero()) return;
  if (!window_.contains(e1, e2)) {
    truncated_ = true;
    return;
  }
  auto [it, inserted] = coeffs_.try_emplace({e1, e2}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Laurent2 Laurent2::delta(int t, Window window, long k) {
  Laurent2 out(t, window);
  // x2^{(n t + k)/t} x1^{(-n t - t - k)/t}; e2 = n t + k must meet the x2 range.
  const long tl = t;
  long n = (window.x2_min - k) / tl - 1;
  for (; n * tl + k <= window.x2_max; ++n) {
    const long e2 = n * tl + k, e1 = -n * tl - tl - k;
    if (e2 >= window.x2_min && window.contains(e1, e2)) out.add(e1, e2, Rational(1));
  }
  // Terms with x2 inside and x1 outside the window exist but are not stored.
  out.truncated_ = true;
  return out;
}

Rational Laurent2::coefficient(long e1, long e2) const {
  const auto it = coeffs_.find({e1, e2});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Laurent2 Laurent2::d_x2() const {
  Laurent2 out(t_, window_);
  out.truncated_ = truncated_;
  for (const auto& [e, c] : coeffs_) out.add(e.first, e.second - t_, c * Rational(e.second, t_));
  // Coefficient at (a, b) needs the input at (a, b + 1).
  out.interior_ = interior_;
  out.interior_.x2_max -= t_;
  require_nonempty(out.interior_, "d/dx2");
  return out;
}

Laurent2 Laurent2::times_x1_minus_x2() const {
  Laurent2 out(t_, window_);
  out.truncated_ = truncated_;
  for (const auto& [e, c] : coeffs_) {
    out.add(e.first + t_, e.second, c);
    out.add(e.first, e.second + t_, -c);
  }
  // Coefficient at (a, b) needs the input at (a - 1, b) and (a, b - 1).
  out.interior_ = interior_;
  out.interior_.x1_min += t_;
  out.interior_.x2_min += t_;
  require_nonempty(out.interior_, "(x1 - x2)");
  return out;
}

Laurent2 Laurent2::restricted_to_interior() const {
  Laurent2 out(t_, interior_);
  for (const auto& [e, c] : coeffs_)
    if (interior_.contains(e.first, e.second)) out.add(e.first, e.second, c);
  out.truncated_ = truncated_;
  return out;
}

std::string Laurent2::str() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::string> pieces;
  for (const auto& [e, c] : coeffs_) {
    const std::string mono =
        "x1^" + Rational(e.first, t_).str() + "*x2^" + Rational(e.second, t_).str();
    pieces.push_back(scaled_symbol(ParamPoly(c), mono));
  }
  return join_signed(pieces);
}

DeltaReport delta_identity_check(long m, long n, const Window& window, int t, long k) {
  if (m < 0 || n < 0) throw std::invalid_argument("delta identity: m and n must be nonnegative");
  Laurent2 f = Laurent2::delta(t, window, k);
  for (long i = 0; i < n; ++i) f = f.d_x2();
  for (long i = 0; i < m; ++i) f = f.times_x1_minus_x2();
  DeltaReport r{m, n, f.restricted_to_interior(), false};
  r.holds_in_window = r.residual.is_zero();
  return r;
}

}  // namespace thv
