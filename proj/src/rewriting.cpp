// rewriting.cpp -- shortlex Knuth-Bendix completion for group presentations
#include "relpres/rewriting.hpp"

#include <algorithm>
#include <deque>

namespace relpres {

const char* to_string(GroupClass c) {
  switch (c) {
    case GroupClass::Free: return "free";
    case GroupClass::Cyclic: return "cyclic";
    case GroupClass::FgAbelian: return "abelian";
    default: return "generic";
  }
}

GroupClass group_class_from_string(const std::string& s) {
  if (s == "free") return GroupClass::Free;
  if (s == "cyclic") return GroupClass::Cyclic;
  if (s == "abelian") return GroupClass::FgAbelian;
  if (s == "generic") return GroupClass::Generic;
  throw Error(Errc::ParseError, "unknown group class '" + s + "'");
}

GroupDescriptor GroupDescriptor::free_group(std::vector<std::string> gens,
                                            bool torsion_free) {
  GroupDescriptor d;
  d.generators = std::move(gens);
  d.class_hint = GroupClass::Free;
  d.declared_torsion_free = torsion_free;
  return d;
}

GroupDescriptor GroupDescriptor::infinite_cyclic(std::string gen) {
  GroupDescriptor d;
  d.generators = {std::move(gen)};
  d.class_hint = GroupClass::Cyclic;
  d.declared_torsion_free = true;
  return d;
}

GroupDescriptor GroupDescriptor::finite_cyclic(std::string gen, int order) {
  GroupDescriptor d;
  d.generators = {std::move(gen)};
  d.relators = {FreeWord::power(0, order)};
  d.class_hint = GroupClass::Cyclic;
  return d;
}

GroupDescriptor GroupDescriptor::free_abelian(std::vector<std::string> gens) {
  GroupDescriptor d;
  d.generators = std::move(gens);
  const int n = d.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FreeWord x = FreeWord::generator(i), y = FreeWord::generator(j);
      d.relators.push_back(x.inverse() * y.inverse() * x * y);
    }
  d.class_hint = GroupClass::FgAbelian;
  d.declared_torsion_free = true;
  return d;
}

GroupDescriptor GroupDescriptor::trivial() {
  GroupDescriptor d;
  d.class_hint = GroupClass::FgAbelian;
  d.declared_torsion_free = true;
  return d;
}

namespace {

using Sym = RewriteEngine::Sym;
using SymWord = RewriteEngine::SymWord;

Sym sym_inverse(Sym s) { return s ^ 1; }


// shortlex: length first, then symbol order (generator before its inverse
// is encoded in the symbol numbering 2i < 2i+1).
bool shortlex_less(const SymWord& a, const SymWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Completion {
  std::vector<RewriteEngine::Rule> rules;
  std::vector<bool> active;
  std::deque<std::pair<SymWord, SymWord>> equations;
  std::deque<std::pair<int, int>> pairs;  // rule index pairs to overlap
  KBLimits limits;
  long steps = 0;
  bool hit_limit = false;

  bool step_budget() {
    if (++steps > limits.max_steps) {
      hit_limit = true;
      return false;
    }
    return true;
  }

  SymWord rewrite(SymWord w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
        for (std::size_t ri = 0; ri < rules.size() && !changed; ++ri) {
          if (!active[ri]) continue;
          const SymWord& l = rules[ri].lhs;
          if (l.size() > w.size() - pos) continue;
          if (!std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(pos)))
            continue;
          if (!step_budget()) return w;
          SymWord next(w.begin(), w.begin() + static_cast<long>(pos));
          next.insert(next.end(), rules[ri].rhs.begin(), rules[ri].rhs.end());
          next.insert(next.end(), w.begin() + static_cast<long>(pos + l.size()),
                      w.end());
          w = std::move(next);
          changed = true;
        }
      }
    }
    return w;
  }

  void push_equation(SymWord a, SymWord b) { equations.emplace_back(std::move(a), std::move(b)); }

  // Installs an oriented rule; requeues rules it subsumes.
  bool add_rule(SymWord lhs, SymWord rhs) {
    if (static_cast<int>(lhs.size()) > limits.max_word_length) {
      hit_limit = true;
      return false;
    }
    if (static_cast<int>(rules.size()) >= limits.max_rules) {
      hit_limit = true;
      return false;
    }
    int idx = static_cast<int>(rules.size());
    rules.push_back({std::move(lhs), std::move(rhs)});
    active.push_back(true);
    for (int i = 0; i < idx; ++i) {
      if (!active[i]) continue;
      // existing lhs reducible by the new rule: retire and requeue
      const SymWord& nl = rules[idx].lhs;
      auto it = std::search(rules[i].lhs.begin(), rules[i].lhs.end(), nl.begin(), nl.end());
      if (it != rules[i].lhs.end()) {
        active[i] = false;
        push_equation(rules[i].lhs, rules[i].rhs);
        continue;
      }
      SymWord nr = rewrite(rules[i].rhs);
      if (nr != rules[i].rhs) rules[i].rhs = std::move(nr);
    }
    for (int i = 0; i <= idx; ++i)
      if (active[i]) pairs.emplace_back(i, idx);
    for (int i = 0; i < idx; ++i)
      if (active[i]) pairs.emplace_back(idx, i);
    return true;
  }

  bool process_equation(SymWord a, SymWord b) {
    a = rewrite(std::move(a));
    b = rewrite(std::move(b));
    if (a == b) return true;
    if (shortlex_less(a, b)) std::swap(a, b);
    return add_rule(std::move(a), std::move(b));
  }

  // Critical pairs of rules r1, r2: overlaps of a suffix of lhs1 with a
  // prefix of lhs2, plus lhs2 occurring inside lhs1.
  void overlap(int i1, int i2) {
    if (!active[i1] || !active[i2]) return;
    const SymWord l1 = rules[i1].lhs, r1 = rules[i1].rhs;
    const SymWord l2 = rules[i2].lhs, r2 = rules[i2].rhs;
    const std::size_t n1 = l1.size(), n2 = l2.size();
    for (std::size_t o = 1; o < std::min(n1, n2); ++o) {
      // suffix of l1 of length o equals prefix of l2 of length o
      if (!std::equal(l1.end() - static_cast<long>(o), l1.end(), l2.begin())) continue;
      SymWord left = r1;
      left.insert(left.end(), l2.begin() + static_cast<long>(o), l2.end());
      SymWord right(l1.begin(), l1.end() - static_cast<long>(o));
      right.insert(right.end(), r2.begin(), r2.end());
      push_equation(std::move(left), std::move(right));
      if (!step_budget()) return;
    }
    // containment: l2 strictly inside l1
    if (n2 < n1) {
      for (std::size_t p = 0; p + n2 <= n1; ++p) {
        if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<long>(p))) continue;
        SymWord right(l1.begin(), l1.begin() + static_cast<long>(p));
        right.insert(right.end(), r2.begin(), r2.end());
        right.insert(right.end(), l1.begin() + static_cast<long>(p + n2), l1.end());
        push_equation(r1, std::move(right));
        if (!step_budget()) return;
      }
    }
  }
};

}  // namespace

RewriteEngine RewriteEngine::complete(const GroupDescriptor& desc, KBLimits limits) {
  if (limits.max_rules <= 0 || limits.max_word_length <= 0 || limits.max_steps <= 0)
    throw Error(Errc::Malformed, "completion limits must be positive");
  Completion c;
  c.limits = limits;
  const int n = desc.rank();
  // free reduction rules
  for (int i = 0; i < n; ++i) {
    c.add_rule({2 * i, 2 * i + 1}, {});
    c.add_rule({2 * i + 1, 2 * i}, {});
  }
  RewriteEngine e;
  e.desc_ = desc;
  for (const FreeWord& r : desc.relators) {
    SymWord w;
    for (const auto& g : r.letters()) {
      if (g.index < 0 || g.index >= n)
        throw Error(Errc::UndeclaredGenerator, "relator uses undeclared generator");
      w.push_back(2 * g.index + (g.exponent > 0 ? 0 : 1));
    }
    c.push_equation(std::move(w), {});
  }
  while (!c.equations.empty() || !c.pairs.empty()) {
    if (c.steps > limits.max_steps) {
      c.hit_limit = true;
      break;
    }
    if (!c.equations.empty()) {
      auto [a, b] = std::move(c.equations.front());
      c.equations.pop_front();
      if (!c.process_equation(std::move(a), std::move(b)) &&
          static_cast<int>(c.rules.size()) >= limits.max_rules)
        break;  // rule table full; overlong equations are merely discarded
      continue;
    }
    auto [i, j] = c.pairs.front();
    c.pairs.pop_front();
    c.overlap(i, j);
    if (!c.step_budget()) break;
  }
  for (std::size_t i = 0; i < c.rules.size(); ++i)
    if (c.active[i]) e.rules_.push_back(std::move(c.rules[i]));
  e.status_ = (!c.hit_limit && c.equations.empty() && c.pairs.empty())
                  ? EngineStatus::Complete
                  : EngineStatus::Partial;
  return e;
}

RewriteEngine::SymWord RewriteEngine::normal_form(SymWord w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
      for (const Rule& r : rules_) {
        if (r.lhs.size() > w.size() - pos) continue;
        if (!std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<long>(pos)))
          continue;
        SymWord next(w.begin(), w.begin() + static_cast<long>(pos));
        next.insert(next.end(), r.rhs.begin(), r.rhs.end());
        next.insert(next.end(), w.begin() + static_cast<long>(pos + r.lhs.size()),
                    w.end());
        w = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return w;
}

RewriteEngine::SymWord RewriteEngine::to_symbols(const FreeWord& w) const {
  SymWord s;
  s.reserve(w.size());
  for (const auto& g : w.letters()) {
    if (g.index < 0 || g.index >= desc_.rank())
      throw Error(Errc::UndeclaredGenerator, "word uses undeclared generator");
    s.push_back(2 * g.index + (g.exponent > 0 ? 0 : 1));
  }
  return s;
}

FreeWord RewriteEngine::from_symbols(const SymWord& w) const {
  std::vector<FreeWord::Gen> raw;
  raw.reserve(w.size());
  for (Sym s : w) raw.push_back({s / 2, s % 2 == 0 ? 1 : -1});
  return FreeWord::reduced(std::move(raw));
}

FreeWord RewriteEngine::normal_form(const FreeWord& w) const {
  return from_symbols(normal_form(to_symbols(w)));
}

Tri RewriteEngine::equal(const FreeWord& u, const FreeWord& v) const {
  SymWord nu = normal_form(to_symbols(u));
  SymWord nv = normal_form(to_symbols(v));
  if (nu == nv) return Tri::Equal;
  if (status_ == EngineStatus::Complete) return Tri::Distinct;
  if (!abelianization().image_trivial(u * v.inverse())) return Tri::Distinct;
  return Tri::Unknown;
}

const AbelianizedLattice& RewriteEngine::abelianization() const {
  if (!ab_) ab_ = std::make_shared<AbelianizedLattice>(AbelianizedLattice::of(desc_));
  return *ab_;
}

RewriteEngine complete(const GroupDescriptor& desc, KBLimits limits) {
  return RewriteEngine::complete(desc, limits);
}

Tri equal(const RewriteEngine& e, const FreeWord& u, const FreeWord& v) {
  return e.equal(u, v);
}

AbelianizedLattice abelianization(const GroupDescriptor& desc) {
  return AbelianizedLattice::of(desc);
}

Tri is_trivial_in(const RewriteEngine& e, const FreeWord& u) { return e.is_trivial(u); }

Cert class_hint_consistent(const GroupDescriptor& desc, const RewriteEngine& engine) {
  switch (desc.class_hint) {
    case GroupClass::Generic:
      return Cert::Yes;
    case GroupClass::Free:
      return desc.relators.empty() ? Cert::Yes : Cert::Unknown;
    case GroupClass::Cyclic:
      return desc.rank() <= 1 ? Cert::Yes : Cert::Unknown;
    case GroupClass::FgAbelian: {
      bool unknown = false;
      for (int i = 0; i < desc.rank(); ++i)
        for (int j = i + 1; j < desc.rank(); ++j) {
          FreeWord x = FreeWord::generator(i), y = FreeWord::generator(j);
          Tri t = engine.is_trivial(x.inverse() * y.inverse() * x * y);
          if (t == Tri::Distinct) return Cert::No;
          if (t == Tri::Unknown) unknown = true;
        }
      return unknown ? Cert::Unknown : Cert::Yes;
    }
  }
  return Cert::Unknown;
}

Cert group_nontrivial(const GroupDescriptor& desc) {
  if (desc.rank() == 0) return Cert::No;
  AbelianizedLattice ab = AbelianizedLattice::of(desc);
  if (ab.free_rank() > 0 || !ab.torsion().empty()) return Cert::Yes;
  if (desc.class_hint == GroupClass::Free && desc.relators.empty())
    return desc.rank() > 0 ? Cert::Yes : Cert::No;
  return Cert::Unknown;  // perfect presented groups are not decided here
}

Cert group_noncyclic(const GroupDescriptor& desc) {
  AbelianizedLattice ab = AbelianizedLattice::of(desc);
  switch (desc.class_hint) {
    case GroupClass::Cyclic:
      return Cert::No;
    case GroupClass::Free:
      if (!desc.relators.empty()) return Cert::Unknown;
      return desc.rank() >= 2 ? Cert::Yes : Cert::No;
    case GroupClass::FgAbelian: {
      int r = ab.free_rank();
      auto t = ab.torsion();
      // the SNF chain makes consecutive torsion coefficients non-coprime,
      // so two of them (or free rank with torsion) force noncyclic
      if (r >= 2 || (r == 1 && !t.empty()) || t.size() >= 2) return Cert::Yes;
      return Cert::No;
    }
    default:
      if (ab.free_rank() >= 2) return Cert::Yes;  // already noncyclic abelianized
      return Cert::Unknown;
  }
}

}  // namespace relpres
