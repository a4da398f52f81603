#include <stdexcept>

#include "thv/errors.hpp"
#include "thv/modules.hpp"

namespace thv {

ModuleDescriptor ModuleDescriptor::vacuum(ParamPoly l1, ParamPoly l2, ParamPoly l3) {
  return {AlgebraDescriptor(1), ModuleKind::Vacuum, {{"l1", l1}, {"l2", l2}, {"l3", l3}}};
}

ModuleDescriptor ModuleDescriptor::twisted_verma(int t, ParamPoly k1, ParamPoly k3, ParamPoly h) {
  return {AlgebraDescriptor(t), ModuleKind::TwistedVerma, {{"k1", k1}, {"k3", k3}, {"h", h}}};
}

void ModuleDescriptor::validate() const {
  const bool vac = kind == ModuleKind::Vacuum;
  if (vac && alg.t() != 1) throw std::invalid_argument("vacuum module requires t = 1");
  if (!vac && alg.t() < 2) throw std::invalid_argument("twisted Verma module requires t >= 2");
  const std::vector<std::string> need = vac ? std::vector<std::string>{"l1", "l2", "l3"}
                                            : std::vector<std::string>{"k1", "k3", "h"};
  for (const auto& n : need)
    if (!params.count(n)) throw std::invalid_argument("module descriptor is missing parameter '" + n + "'");
  if (params.size() != need.size()) throw std::invalid_argument("module descriptor has unexpected parameters");
}

const ParamPoly& ModuleDescriptor::param(const std::string& name) const {
  const auto it = params.find(name);
  if (it == params.end()) throw std::invalid_argument("module has no parameter '" + name + "'");
  return it->second;
}

bool ModuleDescriptor::is_concrete() const {
  for (const auto& [n, p] : params)
    if (!p.is_constant()) return false;
  return true;
}

int sigma_grade(const PBWMonomial& m, int t) {
  if (t < 1) throw std::invalid_argument("sigma_grade: t must be >= 1");
  return static_cast<int>(m.i_part.size() % static_cast<std::size_t>(t));
}

ModuleVector::ModuleVector(std::shared_ptr<const ModuleDescriptor> desc, Terms terms)
    : desc_(std::move(desc)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

ParamPoly ModuleVector::coefficient(const PBWMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void ModuleVector::add(const PBWMonomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ModuleVector::check_same(const ModuleVector& o) const {
  if (desc_ != o.desc_ && !(*desc_ == *o.desc_))
    throw std::invalid_argument("vectors belong to different modules");
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  return (a.desc_ == b.desc_ || *a.desc_ == *b.desc_) && a.terms_ == b.terms_;
}

ModuleVector ModuleVector::component(const Rational& level) const {
  const Module m(*desc_);
  ModuleVector out(desc_);
  for (const auto& [mono, c] : terms_)
    if (m.level(mono) == level) out.add(mono, c);
  return out;
}

std::string ModuleVector::str() const {
  const Module m(*desc_);
  std::vector<std::string> pieces;
  for (const auto& [mono, c] : terms_) pieces.push_back(scaled_symbol(c, m.word_str(mono)));
  return join_signed(pieces);
}

std::ostream& operator<<(std::ostream& os, const ModuleVector& v) { return os << v.str(); }

}  // namespace thv
