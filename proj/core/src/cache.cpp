#include "liecheck/cache.hpp"

#include "liecheck/errors.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace liecheck {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string weight_tag(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '_';
    s += std::to_string(w[i]);
  }
  return s;
}

std::size_t parse_index(const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad index \"" + token + "\"");
  return std::stoul(token);
}

// Next non-comment line split into tokens; false at end of input.
bool next_tokens(std::istringstream& in, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    tokens.clear();
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (!tokens.empty()) return true;
  }
  return false;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

}  // namespace

std::string write_constants(const LieAlgebraTable& L) {
  std::ostringstream out;
  out << "# liecheck structure constants\n";
  out << "type " << L.datum().type().label() << "\n";
  out << "version " << kConstantsFormatVersion << "\n";
  out << "dim " << L.dim() << "\n";
  for (const auto& [i, j, k, c] : L.constants()) out << i << ' ' << j << ' ' << k << ' ' << to_string(c) << '\n';
  return out.str();
}

StructureConstants parse_constants(const std::string& text, const CartanType& type) {
  std::istringstream in(text);
  std::vector<std::string> t;
  expect(next_tokens(in, t) && t.size() == 2 && t[0] == "type", "constants: missing type line");
  expect(t[1] == type.label(), "constants: file is for type " + t[1]);
  expect(next_tokens(in, t) && t.size() == 2 && t[0] == "version", "constants: missing version line");
  expect(t[1] == std::to_string(kConstantsFormatVersion), "constants: unsupported version " + t[1]);
  expect(next_tokens(in, t) && t.size() == 2 && t[0] == "dim", "constants: missing dim line");
  const std::size_t dim = parse_index(t[1]);
  StructureConstants out;
  while (next_tokens(in, t)) {
    expect(t.size() == 4, "constants: expected \"i j k p/q\"");
    const auto i = parse_index(t[0]), j = parse_index(t[1]), k = parse_index(t[2]);
    expect(i < dim && j < dim && k < dim, "constants: index out of range");
    out.emplace_back(i, j, k, parse_rat(t[3]));
  }
  return out;
}

std::string write_module(const WeightModule& m) {
  std::ostringstream out;
  out << "# liecheck module\n";
  out << "type " << m.type.label() << "\n";
  out << "highest " << format_weight(m.highest) << "\n";
  out << "version " << kModuleFormatVersion << "\n";
  out << "dim " << m.dim << "\n";
  out << "spaces " << m.spaces.size() << "\n";
  for (const auto& s : m.spaces)
    out << format_weight(s.weight) << ' ' << s.h_eigen << ' ' << s.offset << ' ' << s.dim << '\n';
  auto put = [&out](const char* name, const std::vector<SparseMat>& ms) {
    for (std::size_t i = 0; i < ms.size(); ++i) {
      out << "matrix " << name << ' ' << i << ' ' << ms[i].nonzeros() << '\n';
      ms[i].for_each([&out](std::size_t r, std::size_t c, const Rat& v) {
        out << r << ' ' << c << ' ' << to_string(v) << '\n';
      });
    }
  };
  put("e", m.e);
  put("f", m.f);
  put("h", m.h);
  return out.str();
}

WeightModule parse_module(const std::string& text, const CartanType& type, const Weight& highest) {
  std::istringstream in(text);
  std::vector<std::string> t;
  const std::size_t rank = highest.size();
  expect(next_tokens(in, t) && t.size() == 2 && t[0] == "type", "module: missing type line");
  expect(t[1] == type.label(), "module: file is for type " + t[1]);
  expect(next_tokens(in, t) && t.size() == 2 && t[0] == "highest", "module: missing highest line");
  expect(parse_weight(t[1], rank) == highest, "module: file is for weight " + t[1]);
  expect(next_tokens(in, t) && t.size() == 2 && t[0] == "version", "module: missing version line");
  expect(t[1] == std::to_string(kModuleFormatVersion), "module: unsupported version " + t[1]);
  expect(next_tokens(in, t) && t.size() == 2 && t[0] == "dim", "module: missing dim line");

  WeightModule m;
  m.type = type;
  m.highest = highest;
  m.dim = parse_index(t[1]);
  expect(next_tokens(in, t) && t.size() == 2 && t[0] == "spaces", "module: missing spaces line");
  const std::size_t nspaces = parse_index(t[1]);
  std::size_t offset = 0;
  for (std::size_t s = 0; s < nspaces; ++s) {
    expect(next_tokens(in, t) && t.size() == 4, "module: bad weight space line");
    WeightSpace ws;
    ws.weight = parse_weight(t[0], rank);
    ws.h_eigen = std::stol(t[1]);
    ws.offset = parse_index(t[2]);
    ws.dim = parse_index(t[3]);
    expect(ws.offset == offset, "module: weight spaces are not contiguous");
    offset += ws.dim;
    expect(m.space_index.emplace(ws.weight, m.spaces.size()).second, "module: repeated weight");
    m.spaces.push_back(std::move(ws));
  }
  expect(offset == m.dim, "module: weight spaces do not add up to dim");

  m.e.resize(rank);
  m.f.resize(rank);
  m.h.resize(rank);
  std::vector<bool> seen(3 * rank, false);
  for (std::size_t n = 0; n < 3 * rank; ++n) {
    expect(next_tokens(in, t) && t.size() == 4 && t[0] == "matrix", "module: missing matrix header");
    const std::size_t i = parse_index(t[2]);
    const std::size_t nnz = parse_index(t[3]);
    std::size_t slot = 0;
    std::vector<SparseMat>* target = nullptr;
    if (t[1] == "e") target = &m.e, slot = 0;
    else if (t[1] == "f") target = &m.f, slot = 1;
    else if (t[1] == "h") target = &m.h, slot = 2;
    expect(target && i < rank && !seen[slot * rank + i], "module: bad matrix header");
    seen[slot * rank + i] = true;
    std::vector<SparseMat::Triplet> trips;
    for (std::size_t k = 0; k < nnz; ++k) {
      expect(next_tokens(in, t) && t.size() == 3, "module: bad matrix entry");
      const auto r = parse_index(t[0]), c = parse_index(t[1]);
      expect(r < m.dim && c < m.dim, "module: matrix entry out of range");
      trips.push_back({r, c, parse_rat(t[2])});
    }
    (*target)[i] = SparseMat::from_triplets(m.dim, m.dim, std::move(trips));
  }
  expect(!next_tokens(in, t), "module: trailing data");
  return m;
}

void atomic_write(const fs::path& path, const std::string& content) {
  static std::atomic<unsigned long> counter{0};
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const auto id = std::hash<std::thread::id>{}(std::this_thread::get_id());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(id) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::constants_path(const CartanType& type) const {
  return dir_ / (type.label() + "-v" + std::to_string(kConstantsFormatVersion) + ".constants");
}

fs::path Cache::module_path(const CartanType& type, const Weight& highest) const {
  return dir_ / (type.label() + "-" + weight_tag(highest) + "-v" + std::to_string(kModuleFormatVersion) + ".module");
}

std::optional<LieAlgebraTable> Cache::load_algebra(const RootDatum& d) const {
  const auto p = constants_path(d.type());
  std::error_code ec;
  if (!fs::exists(p, ec)) return std::nullopt;
  try {
    auto L = LieAlgebraTable::from_constants(d, parse_constants(read_file(p), d.type()));
    const std::size_t r = d.rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t b = 0; b < L.dim(); ++b)
        for (std::size_t c = 0; c < L.dim(); ++c)
          if (!L.jacobi_holds(L.e_index(i), b, c) || !L.jacobi_holds(L.f_index(i), b, c)) return std::nullopt;
    return L;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void Cache::store_algebra(const LieAlgebraTable& L) const { atomic_write(constants_path(L.datum().type()), write_constants(L)); }

LieAlgebraTable Cache::algebra(const RootDatum& d) const {
  if (auto L = load_algebra(d)) return std::move(*L);
  auto L = LieAlgebraTable::build(d);
  store_algebra(L);
  return L;
}

std::optional<WeightModule> Cache::load_module(const RootDatum& d, const Weight& highest) const {
  const auto p = module_path(d.type(), highest);
  std::error_code ec;
  if (!fs::exists(p, ec)) return std::nullopt;
  try {
    auto m = parse_module(read_file(p), d.type(), highest);
    if (Int(static_cast<unsigned long>(m.dim)) != weyl_dimension(d, highest)) return std::nullopt;
    for (const auto& s : m.spaces)
      if (s.h_eigen != d.h_eigenvalue(s.weight)) return std::nullopt;
    if (!chevalley_relations_hold(d, m)) return std::nullopt;
    return m;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void Cache::store_module(const WeightModule& m) const { atomic_write(module_path(m.type, m.highest), write_module(m)); }

WeightModule Cache::module(const RootDatum& d, const Weight& highest, const BuildOptions& options) const {
  if (auto m = load_module(d, highest)) return std::move(*m);
  auto m = build_irrep(d, highest, options);
  store_module(m);
  return m;
}

std::vector<fs::path> Cache::entries() const {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& e : fs::directory_iterator(dir_)) {
    const auto ext = e.path().extension();
    if (e.is_regular_file() && (ext == ".constants" || ext == ".module")) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Cache::clear() const {
  std::size_t n = 0;
  for (const auto& p : entries()) n += fs::remove(p) ? 1 : 0;
  return n;
}

}  // namespace liecheck
