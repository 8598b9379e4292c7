#include "unimod/lattice.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "reduce.hpp"
#include "unimod/errors.hpp"

namespace unimod {

std::string RootComponent::name() const {
  const char f = family == RootFamily::A ? 'A' : family == RootFamily::D ? 'D' : 'E';
  return f + std::to_string(rank);
}

void RootComponent::check() const {
  const bool ok = (family == RootFamily::A && rank >= 1) || (family == RootFamily::D && rank >= 4) ||
                  (family == RootFamily::E && rank >= 6 && rank <= 8);
  if (!ok) throw InvalidComponent("invalid root component " + name());
}

int RootComponent::discriminant() const {
  check();
  switch (family) {
    case RootFamily::A: return rank + 1;
    case RootFamily::D: return 4;
    case RootFamily::E: return 9 - rank;
  }
  return 0;
}

int RootComponent::coxeter_number() const {
  check();
  switch (family) {
    case RootFamily::A: return rank + 1;
    case RootFamily::D: return 2 * rank - 2;
    case RootFamily::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
  }
  return 0;
}

RootComponent RootComponent::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidComponent("bad root component '" + std::string(text) + "'");
  RootComponent c;
  switch (text.front()) {
    case 'A': c.family = RootFamily::A; break;
    case 'D': c.family = RootFamily::D; break;
    case 'E': c.family = RootFamily::E; break;
    default: throw InvalidComponent("bad root family in '" + std::string(text) + "'");
  }
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, c.rank);
  if (ec != std::errc{} || ptr != last)
    throw InvalidComponent("bad root component '" + std::string(text) + "'");
  c.check();
  return c;
}

std::vector<RootComponent> parse_components(std::string_view text) {
  std::vector<RootComponent> out;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    const auto star = word.find('*');
    if (star == std::string::npos) {
      out.push_back(RootComponent::parse(word));
      continue;
    }
    const RootComponent c = RootComponent::parse(std::string_view(word).substr(0, star));
    int count = 0;
    const std::string tail = word.substr(star + 1);
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), count);
    if (ec != std::errc{} || ptr != tail.data() + tail.size() || count < 1)
      throw InvalidComponent("bad multiplicity in '" + word + "'");
    out.insert(out.end(), static_cast<std::size_t>(count), c);
  }
  return out;
}

IntMatrix cartan_matrix(const RootComponent& c) {
  c.check();
  const std::size_t n = static_cast<std::size_t>(c.rank);
  IntMatrix m(n, n);
  auto edge = [&m](std::size_t a, std::size_t b) { m(a, b) = m(b, a) = -1; };
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
  switch (c.family) {
    case RootFamily::A:
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case RootFamily::D:
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case RootFamily::E:
      // Bourbaki: chain 1-3-4-5-..., node 2 hangs off node 4.
      edge(0, 2);
      edge(1, 3);
      edge(2, 3);
      for (std::size_t i = 3; i + 1 < n; ++i) edge(i, i + 1);
      break;
  }
  return m;
}

std::size_t LatticeSpec::rank() const {
  std::size_t n = 0;
  for (const auto& c : components) n += static_cast<std::size_t>(c.rank);
  return n;
}

Lattice build_root_lattice(const RootComponent& c) {
  return Lattice{c.name(), GramMatrix::from_matrix(cartan_matrix(c)), std::nullopt, std::nullopt};
}

namespace {

IntMatrix block_cartan(const std::vector<RootComponent>& components, std::size_t n) {
  IntMatrix c(n, n);
  std::size_t offset = 0;
  for (const auto& comp : components) {
    const IntMatrix block = cartan_matrix(comp);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) c(offset + i, offset + j) = block(i, j);
    offset += block.rows();
  }
  return c;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

Lattice glue(const LatticeSpec& spec) {
  if (sgn(spec.scale) <= 0) throw std::invalid_argument(spec.name + ": scale must be positive");
  const std::size_t n = spec.rank();
  const IntMatrix cartan = block_cartan(spec.components, n);

  // Each glue block must lie in the dual of its (scaled) component, and the
  // glue vector itself must have even norm.
  for (std::size_t k = 0; k < spec.glue.size(); ++k) {
    const auto& x = spec.glue[k].coordinates;
    if (x.size() != n)
      throw std::invalid_argument(spec.name + ": glue row " + std::to_string(k + 1) + " has " +
                                  std::to_string(x.size()) + " entries, expected " +
                                  std::to_string(n));
    Rational norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rational pairing = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (cartan(i, j) != 0) pairing += Rational(cartan(i, j)) * x[j];
      pairing *= spec.scale;
      if (!is_integer(pairing))
        throw NotIntegral(spec.name + ": glue row " + std::to_string(k + 1) +
                          " is not in the dual lattice (pairing with root " + std::to_string(i + 1) +
                          " is " + pairing.get_str() + ")");
      norm += pairing * x[i];
    }
    if (!is_integer(norm))
      throw NotIntegral(spec.name + ": glue row " + std::to_string(k + 1) + " has norm " +
                        norm.get_str());
    if (mpz_odd_p(norm.get_num().get_mpz_t()))
      throw NotEven(spec.name + ": glue row " + std::to_string(k + 1) + " has odd norm " +
                    norm.get_str());
  }

  // Common denominator, then saturate the integer generating set.
  Int den = 1;
  for (const auto& g : spec.glue)
    for (const auto& q : g.coordinates) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IntMatrix generators(n + spec.glue.size(), n);
  for (std::size_t i = 0; i < n; ++i) generators(i, i) = den;
  for (std::size_t k = 0; k < spec.glue.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational scaled = spec.glue[k].coordinates[j] * den;
      generators(n + k, j) = scaled.get_num();
    }
  const IntMatrix basis = hermite_normal_form(generators);

  const IntMatrix scaled_gram = basis * cartan * basis.transposed();
  const Rational factor = spec.scale / Rational(den * den);
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = Rational(scaled_gram(i, j)) * factor;
      if (!is_integer(v))
        throw NotIntegral(spec.name + ": saturated Gram entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") = " + v.get_str());
      rows[i][j] = v.get_num();
    }
  const GramMatrix gram = GramMatrix::from_rows(rows);
  if (!gram.is_even()) throw NotEven(spec.name + ": lattice has vectors of odd norm");
  const Int det = determinant(gram.as_matrix());
  if (det != 1) throw NotUnimodular(spec.name + ": determinant is " + det.get_str() + ", not 1");

  return Lattice{spec.name, detail::lll_reduce(gram).gram, std::nullopt, std::nullopt};
}

}  // namespace unimod
