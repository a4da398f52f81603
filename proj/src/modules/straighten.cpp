// PBW straightening: g . X_1 X_2 ... X_n |0> is rewritten into normal order
// by moving g to the right with g X_1 R = X_1 (g R) + [g, X_1] R, and stopping
// early when g is a lowering mode that already sorts in front of X_1.

#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

#include "thv/errors.hpp"
#include "thv/modules.hpp"

namespace thv {

namespace {

struct Key {
  Generator g;
  PBWMonomial w;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.g.kind) * 1000003u ^ k.g.index.hash();
    for (int x : k.w.i_part) h = h * 31 + static_cast<std::size_t>(x);
    h = h * 131 + 7;
    for (int x : k.w.l_part) h = h * 31 + static_cast<std::size_t>(x);
    return h;
  }
};

// A lowering mode as it appears in a PBW word.
struct Factor {
  bool is_l;
  int size;  // k for I-factors, m for L-factors
};

// Normal words are nondecreasing under this order: I before L, larger size first.
bool sorts_before_or_equal(const Factor& a, const Factor& b) {
  if (a.is_l != b.is_l) return !a.is_l;
  return a.size >= b.size;
}

}  // namespace

struct Module::Cache {
  std::mutex mu;
  std::unordered_map<Key, ModuleVector::Terms, KeyHash> table;
};

Module::Module(ModuleDescriptor desc)
    : desc_(std::make_shared<const ModuleDescriptor>(std::move(desc))), cache_(std::make_shared<Cache>()) {
  desc_->validate();
}

std::size_t Module::cache_size() const {
  std::lock_guard lock(cache_->mu);
  return cache_->table.size();
}

namespace {

std::optional<Factor> as_lowering(const Generator& g, bool twisted, const Rational& offset) {
  if (g.kind == GenKind::L) {
    const long n = *g.index.to_long();
    if (n <= (twisted ? -1 : -2)) return Factor{true, static_cast<int>(-n)};
    return std::nullopt;
  }
  if (g.kind == GenKind::I) {
    if (g.index.sign() >= 0) return std::nullopt;
    // index = -k + offset
    const Rational k = offset - g.index;
    return Factor{false, static_cast<int>(*k.to_long())};
  }
  return std::nullopt;
}

}  // namespace

ModuleVector::Terms Module::compute(const Generator& g, const PBWMonomial& w) const {
  Terms out;
  if (g.is_central()) {
    out.emplace(w, central_value(g.kind));
    return out;
  }
  const Rational offset = algebra().i_offset();
  const auto low = as_lowering(g, twisted(), offset);

  if (w.empty()) {
    if (low) {
      PBWMonomial m;
      (low->is_l ? m.l_part : m.i_part).push_back(low->size);
      out.emplace(std::move(m), ParamPoly(1));
    } else if (twisted() && g.kind == GenKind::L && g.index.is_zero()) {
      const ParamPoly& h = desc_->param("h");
      if (!h.is_zero()) out.emplace(w, h);
    }
    // Every other raising or zero mode kills the cyclic vector.
    return out;
  }

  const bool first_is_i = !w.i_part.empty();
  const Factor first{!first_is_i, first_is_i ? w.i_part.front() : w.l_part.front()};
  if (low && sorts_before_or_equal(*low, first)) {
    PBWMonomial m = w;
    auto& part = low->is_l ? m.l_part : m.i_part;
    part.insert(part.begin(), low->size);
    out.emplace(std::move(m), ParamPoly(1));
    return out;
  }

  PBWMonomial rest = w;
  auto& part = first_is_i ? rest.i_part : rest.l_part;
  part.erase(part.begin());
  const Generator x1 = first_is_i ? Generator::I(Rational(-first.size) + offset)
                                  : Generator::L(Rational(-first.size));

  // X_1 (g R)
  const Terms g_rest = apply(g, rest);
  apply_into(out, x1, g_rest, ParamPoly(1));
  // [g, X_1] R
  const AlgebraElement commutator = bracket(g, x1, algebra());
  for (const auto& [h, c] : commutator.terms()) {
    const Terms& hr = apply(h, rest);
    for (const auto& [m, d] : hr) {
      auto [it, inserted] = out.try_emplace(m, c * d);
      if (!inserted) {
        it->second += c * d;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

void Module::apply_into(Terms& out, const Generator& g, const Terms& v, const ParamPoly& scale) const {
  for (const auto& [m, c] : v) {
    const ParamPoly coeff = scale * c;
    for (const auto& [m2, d] : apply(g, m)) {
      auto [it, inserted] = out.try_emplace(m2, coeff * d);
      if (!inserted) {
        it->second += coeff * d;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
}

const ModuleVector::Terms& Module::apply(const Generator& g, const PBWMonomial& w) const {
  Key key{g, w};
  {
    std::lock_guard lock(cache_->mu);
    const auto it = cache_->table.find(key);
    if (it != cache_->table.end()) return it->second;
  }
  Terms result = compute(g, w);
  std::lock_guard lock(cache_->mu);
  // References into an unordered_map stay valid across rehashing.
  return cache_->table.try_emplace(std::move(key), std::move(result)).first->second;
}

ModuleVector Module::act(const Generator& g, const ModuleVector& v) const {
  thv::validate(g, algebra());
  if (!(v.descriptor() == *desc_)) throw std::invalid_argument("act: vector belongs to a different module");
  Terms out;
  for (const auto& [m, c] : v.terms()) validate(m);
  apply_into(out, g, v.terms(), ParamPoly(1));
  return ModuleVector(desc_, std::move(out));
}

ModuleVector Module::act(const AlgebraElement& x, const ModuleVector& v) const {
  ModuleVector out = zero();
  for (const auto& [g, c] : x.terms()) out += c * act(g, v);
  return out;
}

ModuleVector Module::act_word(const std::vector<Generator>& word, const ModuleVector& v) const {
  ModuleVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act(*it, out);
  return out;
}

}  // namespace thv
