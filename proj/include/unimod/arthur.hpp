#pragma once

// Standard parameters psi = (+)_i pi_i[d_i] of discrete automorphic
// representations of SO_m with m = 0 mod 8, unramified everywhere, built from
// two kinds of self-dual cuspidal labels: the trivial representation of
// PGL_1 (L-function zeta) and level-one Hecke eigenforms of weight k on PGL_2.
// Infinitesimal-character eigenvalues are stored doubled so that the
// half-integers (k - 1)/2 stay exact.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unimod/quadform.hpp"

namespace unimod {

enum class Central { Auto, Zero, NonZero };
enum class CentralValue { Zero, NonZero, Unresolved };

// Dimension of the space of level-one cusp forms of weight k, for k <= 30;
// nullopt above the embedded table.
std::optional<int> cusp_form_dimension(int k);

struct CuspidalLabel {
  bool trivial = true;
  int weight = 0;  // modular weight k of the eigenform
  int index = 1;   // which eigenform when dim S_k > 1
  Central central = Central::Auto;

  static CuspidalLabel one();
  static CuspidalLabel eigenform(int weight, int index = 1, Central central = Central::Auto);

  int n() const { return trivial ? 1 : 2; }
  // Doubled eigenvalues: {0} or {-(k-1), k-1}.
  std::vector<long> eigenvalues() const;
  // Same cuspidal representation; the central flag is an annotation only.
  bool same_form(const CuspidalLabel& other) const;
  // Auto: Zero for k = 2 mod 4 (root number -1), NonZero for k = 0 mod 4 up
  // to weight 500, Unresolved beyond.
  CentralValue central_value(bool assume_nonvanishing = false) const;

  // "1", "D12", "D24.2", with "!0" / "!nz" when with_flag and forced.
  std::string to_string(bool with_flag = true) const;

  auto operator<=>(const CuspidalLabel&) const = default;
};

struct Summand {
  CuspidalLabel label;
  int d = 1;

  auto operator<=>(const Summand&) const = default;
};

struct ArthurParameter {
  int m = 0;
  std::vector<Summand> summands;

  bool operator==(const ArthurParameter&) const = default;
};

// Sorted (ascending) doubled eigenvalues of psi_infinity.
std::vector<long> psi_infinity(const ArthurParameter& psi);

struct Violation {
  enum class Kind { Dimension, Eigenvalues, Mod4, Duplicate };
  Kind kind;
  std::string message;
};

// Empty when psi is valid. Checks, in order: sum n_i d_i = m; the
// eigenvalue multiset is {+-(m/2 - 1), ..., +-1, 0, 0}; all n_i d_i = 0 mod 4
// or exactly two exceptions with product 3 mod 4; summands pairwise distinct.
std::vector<Violation> validate(const ArthurParameter& psi);

// Indices (0-based) with n_i d_i = 0 mod 4.
std::vector<std::size_t> i_zero_set(const ArthurParameter& psi);

// chi(s_i) for i in I_0; throws IndexNotInI0.
int chi(const ArthurParameter& psi, std::size_t i);
// The odd-d rule on its own: (-1)^|K| with K the odd j <= m/2 such that
// w_j = m/2 - j is among the given doubled eigenvalues (as 2 w_j).
int chi_odd_rule(int m, const std::vector<long>& doubled_eigenvalues);

// User-supplied root numbers epsilon(a x b), keyed by unordered label pairs
// (central flags ignored).
class EpsilonTable {
 public:
  void set(const CuspidalLabel& a, const CuspidalLabel& b, int sign);
  std::optional<int> get(const CuspidalLabel& a, const CuspidalLabel& b) const;
  bool empty() const { return entries_.empty(); }

 private:
  static std::pair<std::string, std::string> key(const CuspidalLabel& a, const CuspidalLabel& b);
  std::map<std::pair<std::string, std::string>, int> entries_;
};

struct AnalysisOptions {
  bool assume_central_nonvanishing = false;
  EpsilonTable epsilon;
};

struct EpsilonValue {
  std::optional<int> sign;
  bool from_table = false;
};

// Built-ins: epsilon(Eigenform(k) x Trivial) = (-1)^(k/2), epsilon(x x x) =
// +1. The table only fills pairs the built-ins leave open.
EpsilonValue epsilon_pair(const CuspidalLabel& a, const CuspidalLabel& b, const EpsilonTable* table = nullptr);

struct ArthurCondition {
  enum class Status { Satisfied, Violated, Unknown };
  Status status = Status::Satisfied;
  std::optional<std::size_t> index;  // offending / blocking summand
  std::string detail;
  std::vector<std::string> assumptions;
};

ArthurCondition arthur_condition(const ArthurParameter& psi, const AnalysisOptions& options = {});

enum class Multiplicity { One, Two, NotDiscrete, Unknown };
Multiplicity multiplicity_sum(const ArthurParameter& psi, const AnalysisOptions& options = {});
std::string to_string(Multiplicity m);

struct Order {
  std::optional<long> value;  // net order; nullopt = unknown
  std::string reason;         // why unknown

  bool known() const { return value.has_value(); }
};

// Order of L(s, label) at s = a (zeros positive, poles negative). a must be an
// integer or half-integer; throws UnsupportedArgument otherwise.
Order factor_order_at(const CuspidalLabel& label, const Rational& a, const AnalysisOptions& options = {});

struct LProfile {
  int m = 0;
  std::map<long, Order> orders;  // t = 1 .. m/2
  std::vector<std::string> assumptions;
};

LProfile l_profile(const ArthurParameter& psi, const AnalysisOptions& options = {});

struct GValue {
  std::optional<long> g;
  std::vector<long> zeros_and_poles;  // T
  std::optional<long> t_star;
  bool pole = false;
  std::string reason;  // when g is unknown
  std::vector<std::string> assumptions;
};

GValue g_of(const ArthurParameter& psi, const AnalysisOptions& options = {});
GValue g_of(const LProfile& profile);

struct Classification {
  enum class Case { SmallMaxD, TrivialBigD, EigenformFull };
  Case tag = Case::SmallMaxD;
  long upper = 0;                      // g <= upper
  std::optional<long> exact;           // g == exact when determined
  std::vector<long> alternatives;      // EigenformFull: {m/2, 3m/4}
  std::string description;

  // Whether a computed g is consistent with this case analysis.
  bool agrees(long g) const;
};

std::string to_string(Classification::Case c);

// Throws InvalidParameter for invalid psi.
Classification classify(const ArthurParameter& psi, const AnalysisOptions& options = {});

// All valid parameters over Trivial and the level-one eigenforms of weight
// 12..max_weight (every index), sorted by canonical text. Labels of higher
// rank (GL_n cuspidal, n >= 3) are not in the catalog.
std::vector<ArthurParameter> enumerate_parameters(int m, int max_weight);

// Everything the CLI prints about one parameter.
struct ParameterAnalysis {
  ArthurParameter psi;
  std::vector<Violation> violations;
  std::vector<std::size_t> i_zero;
  std::vector<std::pair<std::size_t, int>> chi_values;
  ArthurCondition condition;
  Multiplicity multiplicity = Multiplicity::Unknown;
  LProfile profile;
  GValue g;
  std::optional<Classification> classification;
  std::vector<std::string> assumptions;
};

ParameterAnalysis analyze(const ArthurParameter& psi, const AnalysisOptions& options = {});

}  // namespace unimod
