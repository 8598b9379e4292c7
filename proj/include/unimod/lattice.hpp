#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unimod/quadform.hpp"

namespace unimod {

enum class RootFamily { A, D, E };

struct RootComponent {
  RootFamily family = RootFamily::A;
  int rank = 1;

  std::string name() const;  // "A1", "D16", "E8"
  // Order of the discriminant group, i.e. det of the Cartan matrix.
  int discriminant() const;
  // Coxeter number h; the component has rank * h roots.
  int coxeter_number() const;

  // Throws InvalidComponent for A0, D<4 or E outside {6,7,8}.
  void check() const;
  // Parses "D16" / "E8"; "A1*24" is handled by parse_components.
  static RootComponent parse(std::string_view text);

  bool operator==(const RootComponent&) const = default;
};

// Whitespace-separated list such as "A11 D7 E6" or "A1*24".
std::vector<RootComponent> parse_components(std::string_view text);

// Cartan matrix of a simply-laced root system (Bourbaki node labels).
IntMatrix cartan_matrix(const RootComponent& c);

// A vector in the rational span of the root lattice, given by one block of
// simple-root coordinates per component.
struct GlueVector {
  std::vector<Rational> coordinates;
};

struct LatticeSpec {
  std::string name;
  std::vector<RootComponent> components;
  std::vector<GlueVector> glue;
  Rational scale = 1;  // multiplies the ambient (Cartan) form
  std::optional<long> expected_roots;

  std::size_t rank() const;
};

struct Lattice {
  std::string name;
  GramMatrix gram;
  // Filled by annotate() in the enumeration engine.
  std::optional<long> min_norm;
  std::optional<long> kissing_number;

  std::size_t rank() const { return gram.dim(); }
};

// Gram matrix = Cartan matrix of the component.
Lattice build_root_lattice(const RootComponent& c);

// Lattice generated by the component roots and the glue vectors, saturated by
// Hermite normal form and LLL-reduced. Throws NotIntegral, NotEven or
// NotUnimodular naming the violated invariant.
Lattice glue(const LatticeSpec& spec);

// Parsed lattice catalog (see data/lattices.catalog for the format). Lattices
// are realized on first use and validated then; realized lattices are cached
// and the catalog is safe to share between threads.
class Catalog {
 public:
  static Catalog parse(std::string_view text, std::string source = "<memory>");
  static Catalog load(const std::string& path);
  // The catalog compiled into the library.
  static const Catalog& builtin();

  const std::string& source() const noexcept { return source_; }
  const std::string& version() const noexcept { return version_; }

  // Primary names in file order (aliases excluded).
  std::vector<std::string> names() const;
  // Primary names whose realized rank is `rank`, in file order.
  std::vector<std::string> names_of_rank(std::size_t rank) const;
  // Primary names plus aliases, sorted.
  std::vector<std::string> all_names() const;

  bool contains(const std::string& name) const;
  std::string resolve(const std::string& name) const;  // alias -> primary
  const LatticeSpec& spec(const std::string& name) const;

  // Realizes (glue + root-count check) on first call. Throws UnknownName.
  const Lattice& lattice(const std::string& name) const;

  Catalog(Catalog&&) noexcept;
  Catalog& operator=(Catalog&&) noexcept;
  ~Catalog();

 private:
  Catalog();

  std::string source_;
  std::string version_;
  std::vector<LatticeSpec> specs_;
  std::map<std::string, std::string> aliases_;
  mutable std::unique_ptr<std::mutex> mutex_;
  mutable std::map<std::string, std::unique_ptr<Lattice>> realized_;
};

// Lattice from the built-in catalog.
Lattice builtin(const std::string& name);

}  // namespace unimod
