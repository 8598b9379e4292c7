#include "unimod/arthur.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "unimod/errors.hpp"
#include "unimod/param_parser.hpp"

namespace unimod {

namespace {

constexpr int kVerifiedCentralWeight = 500;

void add_unique(std::vector<std::string>& list, const std::string& item) {
  if (std::find(list.begin(), list.end(), item) == list.end()) list.push_back(item);
}

}  // namespace

std::optional<int> cusp_form_dimension(int k) {
  static constexpr int kDims[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0,
                                  1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 2, 0, 2};
  if (k < 0) return 0;
  if (k > 30) return std::nullopt;
  return kDims[k];
}

CuspidalLabel CuspidalLabel::one() { return CuspidalLabel{}; }

CuspidalLabel CuspidalLabel::eigenform(int weight, int index, Central central) {
  return CuspidalLabel{false, weight, index, central};
}

std::vector<long> CuspidalLabel::eigenvalues() const {
  if (trivial) return {0};
  return {-(weight - 1L), weight - 1L};
}

bool CuspidalLabel::same_form(const CuspidalLabel& other) const {
  if (trivial || other.trivial) return trivial == other.trivial;
  return weight == other.weight && index == other.index;
}

CentralValue CuspidalLabel::central_value(bool assume_nonvanishing) const {
  if (trivial) return CentralValue::NonZero;
  switch (central) {
    case Central::Zero: return CentralValue::Zero;
    case Central::NonZero: return CentralValue::NonZero;
    case Central::Auto: break;
  }
  if (weight % 4 == 2) return CentralValue::Zero;
  if (weight <= kVerifiedCentralWeight || assume_nonvanishing) return CentralValue::NonZero;
  return CentralValue::Unresolved;
}

std::string CuspidalLabel::to_string(bool with_flag) const {
  if (trivial) return "1";
  std::string s = "D" + std::to_string(weight);
  const auto dim = cusp_form_dimension(weight);
  if (index != 1 || (dim && *dim > 1)) s += "." + std::to_string(index);
  if (with_flag && central == Central::Zero) s += "!0";
  if (with_flag && central == Central::NonZero) s += "!nz";
  return s;
}

std::vector<long> psi_infinity(const ArthurParameter& psi) {
  std::vector<long> out;
  for (const auto& s : psi.summands)
    for (long e : s.label.eigenvalues())
      for (int j = 0; j < s.d; ++j) out.push_back(e - (s.d - 1) + 2L * j);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Violation> validate(const ArthurParameter& psi) {
  std::vector<Violation> out;
  long dim = 0;
  for (const auto& s : psi.summands) dim += static_cast<long>(s.label.n()) * s.d;
  if (psi.m <= 0 || psi.m % 8 != 0)
    out.push_back({Violation::Kind::Dimension, "m = " + std::to_string(psi.m) + " is not a positive multiple of 8"});
  if (dim != psi.m)
    out.push_back({Violation::Kind::Dimension,
                   "sum of n*d is " + std::to_string(dim) + ", expected m = " + std::to_string(psi.m)});

  std::vector<long> expected;
  for (long w = -(psi.m - 2L); w <= psi.m - 2L; w += 2) expected.push_back(w);
  if (psi.m > 0) expected.push_back(0);
  std::sort(expected.begin(), expected.end());
  if (psi_infinity(psi) != expected)
    out.push_back({Violation::Kind::Eigenvalues,
                   "infinitesimal character is not {+-(m/2-1), ..., +-1, 0, 0} for m = " + std::to_string(psi.m)});

  std::vector<long> odd;
  for (const auto& s : psi.summands) {
    const long nd = static_cast<long>(s.label.n()) * s.d;
    if (nd % 4 != 0) odd.push_back(nd);
  }
  if (!odd.empty() && !(odd.size() == 2 && (odd[0] * odd[1]) % 4 == 3)) {
    std::string list;
    for (long v : odd) list += (list.empty() ? "" : ", ") + std::to_string(v);
    out.push_back({Violation::Kind::Mod4, "n*d values not divisible by 4: " + list +
                                              " (need none, or exactly two with product 3 mod 4)"});
  }

  for (std::size_t i = 0; i < psi.summands.size(); ++i)
    for (std::size_t j = i + 1; j < psi.summands.size(); ++j) {
      const auto& a = psi.summands[i];
      const auto& b = psi.summands[j];
      if (a.d == b.d && a.label.same_form(b.label))
        out.push_back({Violation::Kind::Duplicate, "summand " + a.label.to_string(false) + "[" +
                                                       std::to_string(a.d) + "] appears twice"});
    }
  return out;
}

std::vector<std::size_t> i_zero_set(const ArthurParameter& psi) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < psi.summands.size(); ++i)
    if ((psi.summands[i].label.n() * psi.summands[i].d) % 4 == 0) out.push_back(i);
  return out;
}

int chi_odd_rule(int m, const std::vector<long>& doubled_eigenvalues) {
  int k = 0;
  for (int j = 1; j <= m / 2; j += 2)
    if (std::find(doubled_eigenvalues.begin(), doubled_eigenvalues.end(), static_cast<long>(m - 2 * j)) !=
        doubled_eigenvalues.end())
      ++k;
  return k % 2 == 0 ? 1 : -1;
}

int chi(const ArthurParameter& psi, std::size_t i) {
  const auto zero = i_zero_set(psi);
  if (std::find(zero.begin(), zero.end(), i) == zero.end())
    throw IndexNotInI0("summand " + std::to_string(i + 1) + " is not in I_0");
  const Summand& s = psi.summands[i];
  if (s.d % 2 == 0) return ((s.label.n() * s.d / 4) % 2 == 0) ? 1 : -1;
  return chi_odd_rule(psi.m, s.label.eigenvalues());
}

std::pair<std::string, std::string> EpsilonTable::key(const CuspidalLabel& a, const CuspidalLabel& b) {
  std::string x = a.to_string(false), y = b.to_string(false);
  if (y < x) std::swap(x, y);
  return {x, y};
}

void EpsilonTable::set(const CuspidalLabel& a, const CuspidalLabel& b, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("root number must be +1 or -1");
  entries_[key(a, b)] = sign;
}

std::optional<int> EpsilonTable::get(const CuspidalLabel& a, const CuspidalLabel& b) const {
  if (auto it = entries_.find(key(a, b)); it != entries_.end()) return it->second;
  return std::nullopt;
}

EpsilonValue epsilon_pair(const CuspidalLabel& a, const CuspidalLabel& b, const EpsilonTable* table) {
  if (a.same_form(b)) return {1, false};
  if (a.trivial != b.trivial) {
    const int k = a.trivial ? b.weight : a.weight;
    return {(k / 2) % 2 == 0 ? 1 : -1, false};
  }
  if (table != nullptr)
    if (auto s = table->get(a, b)) return {*s, true};
  return {std::nullopt, false};
}

ArthurCondition arthur_condition(const ArthurParameter& psi, const AnalysisOptions& options) {
  ArthurCondition unknown;
  unknown.status = ArthurCondition::Status::Unknown;
  std::vector<std::string> assumptions;
  bool blocked = false;
  for (std::size_t i : i_zero_set(psi)) {
    const int c = chi(psi, i);
    int product = 1;
    bool known = true;
    for (std::size_t j = 0; j < psi.summands.size(); ++j) {
      if (j == i) continue;
      const int e = std::min(psi.summands[i].d, psi.summands[j].d);
      if (e % 2 == 0) continue;
      const auto& a = psi.summands[i].label;
      const auto& b = psi.summands[j].label;
      const EpsilonValue eps = epsilon_pair(a, b, &options.epsilon);
      if (!eps.sign) {
        known = false;
        if (!blocked) {
          blocked = true;
          unknown.index = i;
          unknown.detail = "epsilon(" + a.to_string(false) + " x " + b.to_string(false) + ") is not known";
        }
        continue;
      }
      if (eps.from_table)
        add_unique(assumptions, "epsilon(" + a.to_string(false) + " x " + b.to_string(false) + ") = " +
                                    (*eps.sign > 0 ? "+1" : "-1") + " from the epsilon table");
      product *= *eps.sign;
    }
    if (known && product != c) {
      ArthurCondition v;
      v.status = ArthurCondition::Status::Violated;
      v.index = i;
      v.detail = "chi(s_" + std::to_string(i + 1) + ") = " + std::to_string(c) + " but the epsilon product is " +
                 std::to_string(product);
      v.assumptions = assumptions;
      return v;
    }
  }
  if (blocked) {
    unknown.assumptions = assumptions;
    return unknown;
  }
  ArthurCondition ok;
  ok.assumptions = assumptions;
  return ok;
}

Multiplicity multiplicity_sum(const ArthurParameter& psi, const AnalysisOptions& options) {
  switch (arthur_condition(psi, options).status) {
    case ArthurCondition::Status::Violated: return Multiplicity::NotDiscrete;
    case ArthurCondition::Status::Unknown: return Multiplicity::Unknown;
    case ArthurCondition::Status::Satisfied: break;
  }
  return i_zero_set(psi).size() == psi.summands.size() ? Multiplicity::Two : Multiplicity::One;
}

std::string to_string(Multiplicity m) {
  switch (m) {
    case Multiplicity::One: return "1";
    case Multiplicity::Two: return "2";
    case Multiplicity::NotDiscrete: return "not discrete";
    case Multiplicity::Unknown: return "unknown";
  }
  return "?";
}

namespace {

// Order at the doubled argument a2 = 2a.
Order order_doubled(const CuspidalLabel& label, long a2, const AnalysisOptions& options) {
  if (label.trivial) {
    if (a2 % 2 != 0) return {0, {}};
    const long a = a2 / 2;
    if (a == 1) return {-1, {}};
    if (a <= -2 && a % 2 == 0) return {1, {}};
    return {0, {}};
  }
  const long k1 = label.weight - 1L;
  if (a2 % 2 != 0 && a2 <= -k1) return {1, {}};  // Gamma factor zeros -(k-1)/2 - n
  if (a2 == 1) {
    switch (label.central_value(options.assume_central_nonvanishing)) {
      case CentralValue::Zero: return {1, {}};
      case CentralValue::NonZero: return {0, {}};
      case CentralValue::Unresolved:
        return {std::nullopt, "central value L(1/2, " + label.to_string(false) + ") is not resolved"};
    }
  }
  return {0, {}};
}

}  // namespace

Order factor_order_at(const CuspidalLabel& label, const Rational& a, const AnalysisOptions& options) {
  const Rational twice = a * 2;
  if (twice.get_den() != 1 || !twice.get_num().fits_slong_p())
    throw UnsupportedArgument("order requested at " + a.get_str() + ", which is not an integer or half-integer");
  return order_doubled(label, twice.get_num().get_si(), options);
}

LProfile l_profile(const ArthurParameter& psi, const AnalysisOptions& options) {
  LProfile p;
  p.m = psi.m;
  for (long t = 1; t <= psi.m / 2; ++t) {
    Order total{0, {}};
    for (const auto& s : psi.summands)
      for (int j = 0; j < s.d; ++j) {
        const long a2 = 2 * t + 2L * j - (s.d - 1);
        const Order o = order_doubled(s.label, a2, options);
        if (a2 == 1 && !s.label.trivial) {
          if (s.label.central == Central::Zero)
            add_unique(p.assumptions, "L(1/2, " + s.label.to_string(false) + ") = 0 forced by !0");
          else if (s.label.central == Central::NonZero)
            add_unique(p.assumptions, "L(1/2, " + s.label.to_string(false) + ") != 0 forced by !nz");
          else if (s.label.weight % 4 == 0 && s.label.weight > kVerifiedCentralWeight &&
                   options.assume_central_nonvanishing)
            add_unique(p.assumptions, "L(1/2, " + s.label.to_string(false) + ") != 0 assumed");
        }
        if (!o.known()) {
          if (total.known()) total = o;
        } else if (total.known()) {
          *total.value += *o.value;
        }
      }
    p.orders.emplace(t, total);
  }
  return p;
}

GValue g_of(const LProfile& profile) {
  GValue r;
  r.assumptions = profile.assumptions;
  for (const auto& [t, o] : profile.orders) {
    if (!o.known()) {
      if (r.reason.empty()) r.reason = o.reason + " (needed at t = " + std::to_string(t) + ")";
      continue;
    }
    if (*o.value != 0) r.zeros_and_poles.push_back(t);
  }
  if (!r.reason.empty()) return r;
  const long half = profile.m / 2;
  if (r.zeros_and_poles.empty()) {
    r.g = half;
    return r;
  }
  const long t = r.zeros_and_poles.back();
  r.t_star = t;
  r.pole = *profile.orders.at(t).value < 0;
  r.g = r.pole ? half - t : half + t;
  return r;
}

GValue g_of(const ArthurParameter& psi, const AnalysisOptions& options) { return g_of(l_profile(psi, options)); }

bool Classification::agrees(long g) const {
  if (exact) return g == *exact;
  if (!alternatives.empty()) return std::find(alternatives.begin(), alternatives.end(), g) != alternatives.end();
  return g >= 0 && g <= upper;
}

std::string to_string(Classification::Case c) {
  switch (c) {
    case Classification::Case::SmallMaxD: return "SmallMaxD";
    case Classification::Case::TrivialBigD: return "TrivialBigD";
    case Classification::Case::EigenformFull: return "EigenformFull";
  }
  return "?";
}

Classification classify(const ArthurParameter& psi, const AnalysisOptions& options) {
  const auto violations = validate(psi);
  if (!violations.empty()) throw InvalidParameter("cannot classify an invalid parameter: " + violations.front().message);
  const auto top = std::max_element(psi.summands.begin(), psi.summands.end(),
                                    [](const Summand& a, const Summand& b) { return a.d < b.d; });
  const long m = psi.m, d1 = top->d;
  Classification c;
  if (d1 < m / 2 - 1) {
    // No factor reaches t >= m/4 with a zero or pole, so t* < m/4.
    c.tag = Classification::Case::SmallMaxD;
    c.upper = 3 * m / 4 - 1;
    c.description = "max d = " + std::to_string(d1) + " < m/2 - 1: g <= 3m/4 - 1 = " + std::to_string(c.upper);
    return c;
  }
  if (top->label.trivial) {
    c.tag = Classification::Case::TrivialBigD;
    c.exact = m / 2 - (d1 + 1) / 2;
    c.upper = *c.exact;
    c.description = "1[" + std::to_string(d1) + "]: zeta pole at t = " + std::to_string((d1 + 1) / 2) +
                    ", g = " + std::to_string(*c.exact);
    return c;
  }
  if (d1 != m / 2 || psi.summands.size() != 1)
    throw InvalidParameter("eigenform summand with d = " + std::to_string(d1) + " must be the whole parameter with d = m/2");
  c.tag = Classification::Case::EigenformFull;
  c.alternatives = {m / 2, 3 * m / 4};
  c.upper = 3 * m / 4;
  switch (top->label.central_value(options.assume_central_nonvanishing)) {
    case CentralValue::Zero: c.exact = 3 * m / 4; break;
    case CentralValue::NonZero: c.exact = m / 2; break;
    case CentralValue::Unresolved: break;
  }
  c.description = top->label.to_string() + "[m/2]: g = m/2 if L(1/2) != 0, 3m/4 if L(1/2) = 0";
  return c;
}

std::vector<ArthurParameter> enumerate_parameters(int m, int max_weight) {
  if (m <= 0 || m % 8 != 0) throw std::invalid_argument("m must be a positive multiple of 8");
  if (max_weight > 30) throw std::invalid_argument("max weight above 30 is outside the dimension table");

  std::vector<CuspidalLabel> labels{CuspidalLabel::one()};
  for (int k = 12; k <= max_weight; k += 2)
    for (int i = 1; i <= cusp_form_dimension(k).value_or(0); ++i) labels.push_back(CuspidalLabel::eigenform(k, i));

  // Slot (x + m - 2) / 2 of the doubled eigenvalue x in {-(m-2), ..., m-2}.
  const std::size_t slots = static_cast<std::size_t>(m - 1);
  std::vector<int> target(slots, 1);
  target[static_cast<std::size_t>((m - 2) / 2)] = 2;
  auto slot_of = [m](long x) -> std::optional<std::size_t> {
    if (x % 2 != 0 || x < -(m - 2L) || x > m - 2L) return std::nullopt;
    return static_cast<std::size_t>((x + m - 2) / 2);
  };

  struct Piece {
    Summand summand;
    std::vector<std::size_t> slots;
  };
  std::vector<Piece> pieces;
  for (const auto& label : labels)
    for (int d = 1; label.n() * d <= m; ++d) {
      ArthurParameter single{m, {{label, d}}};
      Piece p{{label, d}, {}};
      std::vector<int> used(slots, 0);
      bool ok = true;
      for (long x : psi_infinity(single)) {
        const auto s = slot_of(x);
        if (!s || ++used[*s] > target[*s]) {
          ok = false;
          break;
        }
        p.slots.push_back(*s);
      }
      if (ok) pieces.push_back(std::move(p));
    }

  std::vector<ArthurParameter> out;
  std::vector<int> used(slots, 0);
  std::vector<Summand> chosen;
  std::function<void(std::size_t, int)> search = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      ArthurParameter psi{m, chosen};
      if (validate(psi).empty()) out.push_back(canonical(psi));
      return;
    }
    for (std::size_t p = start; p < pieces.size(); ++p) {
      const Piece& piece = pieces[p];
      const int nd = piece.summand.label.n() * piece.summand.d;
      if (nd > remaining) continue;
      std::size_t k = 0;
      for (; k < piece.slots.size(); ++k)
        if (++used[piece.slots[k]] > target[piece.slots[k]]) break;
      if (k == piece.slots.size()) {
        chosen.push_back(piece.summand);
        search(p + 1, remaining - nd);
        chosen.pop_back();
      } else {
        ++k;
      }
      for (std::size_t r = 0; r < k; ++r) --used[piece.slots[r]];
    }
  };
  search(0, m);

  std::sort(out.begin(), out.end(),
            [](const ArthurParameter& a, const ArthurParameter& b) { return format(a) < format(b); });
  return out;
}

ParameterAnalysis analyze(const ArthurParameter& psi, const AnalysisOptions& options) {
  ParameterAnalysis r;
  r.psi = psi;
  r.violations = validate(psi);
  if (!r.violations.empty()) return r;
  r.i_zero = i_zero_set(psi);
  for (std::size_t i : r.i_zero) r.chi_values.emplace_back(i, chi(psi, i));
  r.condition = arthur_condition(psi, options);
  r.multiplicity = multiplicity_sum(psi, options);
  r.profile = l_profile(psi, options);
  r.g = g_of(r.profile);
  r.classification = classify(psi, options);
  for (const auto& a : r.condition.assumptions) add_unique(r.assumptions, a);
  for (const auto& a : r.profile.assumptions) add_unique(r.assumptions, a);
  return r;
}

}  // namespace unimod
