// core.hpp -- shared error handling, three-valued logic, limits, provenance
#ifndef RELPRES_CORE_HPP
#define RELPRES_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relpres {

/// Three-valued answer for equality questions in groups where the word
/// problem may be undecided within the configured limits.
enum class Tri { Equal, Distinct, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Equal: return "EQUAL";
    case Tri::Distinct: return "DISTINCT";
    default: return "UNKNOWN";
  }
}

/// Negation that keeps Unknown sticky.
inline Tri tri_not(Tri t) {
  if (t == Tri::Equal) return Tri::Distinct;
  if (t == Tri::Distinct) return Tri::Equal;
  return Tri::Unknown;
}

/// Answer to a decidable-in-favourable-cases predicate.
enum class Cert { Yes, No, Unknown };

inline const char* to_string(Cert c) {
  switch (c) {
    case Cert::Yes: return "YES";
    case Cert::No: return "NO";
    default: return "UNKNOWN";
  }
}

inline Cert cert_not(Cert c) {
  if (c == Cert::Yes) return Cert::No;
  if (c == Cert::No) return Cert::Yes;
  return Cert::Unknown;
}

enum class Errc {
  UndeclaredGenerator,
  NotCyclicallyReduced,
  OracleUnknown,
  UnknownCoset,
  Malformed,
  InconsistentWitness,
  NotStrict,
  ConditionsFail,
  IdentityViolation,
  ConsistencyFail,
  SubgroupNotProper,
  RejectedRelator,
  HypothesisUnverified,
  KernelMembershipUnknown,
  ParseError,
  Internal,
};

const char* to_string(Errc c);

/// Contract violations and malformed inputs surface as exceptions;
/// undecided answers travel as Tri / statuses, never as throws.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Provenance of a reported claim.
struct Provenance {
  enum class Kind { Theorem, Exact, CheckedAtDepth, Unknown } kind = Kind::Unknown;
  int depth = 0;

  static Provenance theorem() { return {Kind::Theorem, 0}; }
  static Provenance exact() { return {Kind::Exact, 0}; }
  static Provenance checked(int d) { return {Kind::CheckedAtDepth, d}; }
  static Provenance unknown() { return {Kind::Unknown, 0}; }

  std::string str() const {
    switch (kind) {
      case Kind::Theorem: return "THEOREM";
      case Kind::Exact: return "EXACT";
      case Kind::CheckedAtDepth: return "CHECKED_AT_DEPTH_" + std::to_string(depth);
      default: return "UNKNOWN";
    }
  }
};

/// Knuth-Bendix resource limits.
struct KBLimits {
  int max_rules = 5000;
  int max_word_length = 256;
  long max_steps = 1000000;
};

/// Bundle of limits shared across pipelines.
struct Limits {
  KBLimits kb;
  int depth = 8;               // bounded-depth verification windows
  int coset_search_max_len = 12;
  std::uint64_t seed = 0;
};

}  // namespace relpres

#endif
