// rewriting.hpp -- three-valued word problem for finitely presented groups:
// shortlex Knuth-Bendix completion with limits plus an abelianization fallback
#ifndef RELPRES_REWRITING_HPP
#define RELPRES_REWRITING_HPP

#include <memory>
#include <string>
#include <vector>

#include "relpres/abelian.hpp"
#include "relpres/core.hpp"
#include "relpres/words.hpp"

namespace relpres {

enum class GroupClass { Generic, Free, Cyclic, FgAbelian };

const char* to_string(GroupClass c);
GroupClass group_class_from_string(const std::string& s);

/// A finitely presented group together with an optional structure hint.
/// Torsion-freeness is a declared hypothesis, never verified.
struct GroupDescriptor {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;  // freely reduced words over generator indices
  GroupClass class_hint = GroupClass::Generic;
  bool declared_torsion_free = false;

  int rank() const { return static_cast<int>(generators.size()); }

  static GroupDescriptor free_group(std::vector<std::string> gens,
                                    bool torsion_free = true);
  static GroupDescriptor infinite_cyclic(std::string gen = "x");
  static GroupDescriptor finite_cyclic(std::string gen, int order);
  static GroupDescriptor free_abelian(std::vector<std::string> gens);
  static GroupDescriptor trivial();
};

enum class EngineStatus { Complete, Partial };

/// A shortlex string rewriting system for a group presentation.  Symbols
/// are generators and their formal inverses, ordered generator-before-
/// inverse in declared generator order.
class RewriteEngine {
 public:
  using Sym = int;  // generator i -> 2i, its inverse -> 2i+1
  using SymWord = std::vector<Sym>;

  struct Rule {
    SymWord lhs, rhs;  // lhs > rhs in shortlex
  };

  /// Runs Knuth-Bendix completion within the limits.  A Partial engine is
  /// a normal outcome, not an error; its Equal answers remain sound.
  static RewriteEngine complete(const GroupDescriptor& desc, KBLimits limits = {});

  EngineStatus status() const { return status_; }
  const GroupDescriptor& descriptor() const { return desc_; }
  const std::vector<Rule>& rules() const { return rules_; }

  SymWord normal_form(SymWord w) const;
  SymWord to_symbols(const FreeWord& w) const;
  FreeWord from_symbols(const SymWord& w) const;
  FreeWord normal_form(const FreeWord& w) const;

  /// Complete engines decide; Partial engines answer Equal on matching
  /// normal forms, Distinct through the abelianization, else Unknown.
  Tri equal(const FreeWord& u, const FreeWord& v) const;
  Tri is_trivial(const FreeWord& u) const { return equal(u, FreeWord()); }

  const AbelianizedLattice& abelianization() const;

 private:
  GroupDescriptor desc_;
  std::vector<Rule> rules_;
  EngineStatus status_ = EngineStatus::Partial;
  mutable std::shared_ptr<AbelianizedLattice> ab_;
};

/// Convenience wrappers matching the module surface.
RewriteEngine complete(const GroupDescriptor& desc, KBLimits limits = {});
Tri equal(const RewriteEngine& e, const FreeWord& u, const FreeWord& v);
AbelianizedLattice abelianization(const GroupDescriptor& desc);
Tri is_trivial_in(const RewriteEngine& e, const FreeWord& u);

/// Bounded-depth consistency check of a class hint against the relators
/// (e.g. FgAbelian needs all generator commutators derivable).
Cert class_hint_consistent(const GroupDescriptor& desc, const RewriteEngine& engine);

/// Certain nontriviality evidence for a descriptor (abelianization or the
/// declared class); Unknown when neither decides.
Cert group_nontrivial(const GroupDescriptor& desc);

/// Whether the group is noncyclic, decided on the declared class or the
/// abelianization; Unknown when neither gives a handle.
Cert group_noncyclic(const GroupDescriptor& desc);

}  // namespace relpres

#endif
