#include <algorithm>
#include <fstream>
#include <sstream>

#include "unimod/enumerate.hpp"
#include "unimod/errors.hpp"
#include "unimod/lattice.hpp"

namespace unimod {

namespace detail {
extern const std::string_view kDefaultCatalog;
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Rational parse_rational(const std::string& word, std::size_t line) {
  const bool ok = !word.empty() && word.find_first_not_of("+-0123456789/") == std::string::npos;
  Rational q;
  if (!ok || q.set_str(word, 10) != 0 || q.get_den() == 0)
    throw CatalogFormatError(line, "bad rational '" + word + "'");
  q.canonicalize();
  return q;
}

}  // namespace

UnknownName::UnknownName(const std::string& name, std::vector<std::string> valid)
    : Error("unknown lattice '" + name + "'; valid names: " + join(valid)),
      name_(name),
      valid_(std::move(valid)) {}

Catalog::Catalog() : mutex_(std::make_unique<std::mutex>()) {}
Catalog::Catalog(Catalog&&) noexcept = default;
Catalog& Catalog::operator=(Catalog&&) noexcept = default;
Catalog::~Catalog() = default;

Catalog Catalog::parse(std::string_view text, std::string source) {
  Catalog cat;
  cat.source_ = std::move(source);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  LatticeSpec* current = nullptr;
  std::vector<std::size_t> spec_lines;

  auto find_spec = [&cat](const std::string& name) {
    return std::find_if(cat.specs_.begin(), cat.specs_.end(),
                        [&](const LatticeSpec& s) { return s.name == name; });
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) {
      current = nullptr;
      continue;
    }
    std::istringstream words(line);
    std::string key;
    words >> key;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);

    if (key == "version") {
      if (rest.empty()) throw CatalogFormatError(line_no, "version needs a value");
      cat.version_ = rest;
    } else if (key == "name") {
      if (rest.empty() || rest.find_first_of(" \t") != std::string::npos)
        throw CatalogFormatError(line_no, "bad lattice name '" + rest + "'");
      if (find_spec(rest) != cat.specs_.end() || cat.aliases_.count(rest))
        throw CatalogFormatError(line_no, "duplicate lattice name '" + rest + "'");
      cat.specs_.push_back(LatticeSpec{rest, {}, {}, 1, std::nullopt});
      spec_lines.push_back(line_no);
      current = &cat.specs_.back();
    } else if (key == "alias") {
      std::istringstream parts(rest);
      std::string alias, target, extra;
      parts >> alias >> target;
      if (alias.empty() || target.empty() || (parts >> extra))
        throw CatalogFormatError(line_no, "alias needs exactly two names");
      if (find_spec(alias) != cat.specs_.end() || cat.aliases_.count(alias))
        throw CatalogFormatError(line_no, "duplicate lattice name '" + alias + "'");
      if (find_spec(target) == cat.specs_.end())
        throw CatalogFormatError(line_no, "alias target '" + target + "' is not defined above");
      cat.aliases_[alias] = target;
      current = nullptr;
    } else {
      if (current == nullptr) throw CatalogFormatError(line_no, "'" + key + "' outside a lattice entry");
      if (key == "components") {
        try {
          current->components = parse_components(rest);
        } catch (const InvalidComponent& e) {
          throw CatalogFormatError(line_no, e.what());
        }
        if (current->components.empty()) throw CatalogFormatError(line_no, "empty component list");
      } else if (key == "scale") {
        current->scale = parse_rational(rest, line_no);
        if (sgn(current->scale) <= 0) throw CatalogFormatError(line_no, "scale must be positive");
      } else if (key == "glue") {
        GlueVector g;
        std::istringstream parts(rest);
        std::string w;
        while (parts >> w) g.coordinates.push_back(parse_rational(w, line_no));
        if (g.coordinates.size() != current->rank())
          throw CatalogFormatError(line_no, "glue row has " + std::to_string(g.coordinates.size()) +
                                                " entries, expected " + std::to_string(current->rank()));
        current->glue.push_back(std::move(g));
      } else if (key == "expected_roots") {
        std::size_t used = 0;
        long v = -1;
        try {
          v = std::stol(rest, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != rest.size() || v < 0) throw CatalogFormatError(line_no, "bad root count '" + rest + "'");
        current->expected_roots = v;
      } else {
        throw CatalogFormatError(line_no, "unknown key '" + key + "'");
      }
    }
  }
  if (cat.version_.empty()) throw CatalogFormatError(line_no, "missing version line");
  for (std::size_t i = 0; i < cat.specs_.size(); ++i)
    if (cat.specs_[i].components.empty())
      throw CatalogFormatError(spec_lines[i], "lattice '" + cat.specs_[i].name + "' has no components");
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = parse(detail::kDefaultCatalog, "<builtin>");
  return cat;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& s : specs_) out.push_back(s.name);
  return out;
}

std::vector<std::string> Catalog::names_of_rank(std::size_t rank) const {
  std::vector<std::string> out;
  for (const auto& s : specs_)
    if (s.rank() == rank) out.push_back(s.name);
  return out;
}

std::vector<std::string> Catalog::all_names() const {
  std::vector<std::string> out = names();
  for (const auto& [alias, target] : aliases_) out.push_back(alias);
  std::sort(out.begin(), out.end());
  return out;
}

bool Catalog::contains(const std::string& name) const {
  if (aliases_.count(name)) return true;
  return std::any_of(specs_.begin(), specs_.end(), [&](const LatticeSpec& s) { return s.name == name; });
}

std::string Catalog::resolve(const std::string& name) const {
  if (auto it = aliases_.find(name); it != aliases_.end()) return it->second;
  if (!contains(name)) throw UnknownName(name, all_names());
  return name;
}

const LatticeSpec& Catalog::spec(const std::string& name) const {
  const std::string primary = resolve(name);
  for (const auto& s : specs_)
    if (s.name == primary) return s;
  throw UnknownName(name, all_names());
}

const Lattice& Catalog::lattice(const std::string& name) const {
  const LatticeSpec& s = spec(name);
  std::lock_guard lock(*mutex_);
  if (auto it = realized_.find(s.name); it != realized_.end()) return *it->second;
  Lattice lat = glue(s);
  if (s.expected_roots) {
    EnumOptions opts;
    opts.threads = 1;
    const auto roots = static_cast<long>(short_vectors(lat, 2, opts).bucket_size(2));
    if (roots != *s.expected_roots)
      throw RootCountMismatch(s.name + ": " + std::to_string(roots) + " roots, expected " +
                              std::to_string(*s.expected_roots));
  }
  auto [it, inserted] = realized_.emplace(s.name, std::make_unique<Lattice>(std::move(lat)));
  return *it->second;
}

Lattice builtin(const std::string& name) { return Catalog::builtin().lattice(name); }

}  // namespace unimod
