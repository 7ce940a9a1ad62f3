#include "isoprof/groups.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "isoprof/constructions.hpp"

namespace isoprof {

namespace {

std::vector<int> positions(const std::vector<Element>& list, std::size_t n) {
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = static_cast<int>(i);
  return pos;
}

void check_subgroup(const GroupTable& t, const std::vector<Element>& s, Element e, const std::vector<Element>& inv,
                    GroupErrorKind kind, const std::string& name) {
  const std::size_t n = t.size();
  if (s.empty()) throw GroupError(kind, name + " is empty");
  std::vector<char> in(n, 0);
  for (Element x : s) {
    if (x >= n) throw GroupError(kind, name + " lists an element out of range");
    if (in[x]) throw GroupError(kind, name + " lists element " + std::to_string(x) + " twice");
    in[x] = 1;
  }
  if (!in[e]) throw GroupError(kind, name + " does not contain the identity");
  for (Element x : s) {
    if (!in[inv[x]]) throw GroupError(kind, name + " not closed under inverse at " + std::to_string(x));
    for (Element y : s)
      if (!in[t[x][y]])
        throw GroupError(kind, name + " not closed: " + std::to_string(x) + "*" + std::to_string(y));
  }
}

}  // namespace

FiniteGroup validate_group(const GroupTable& table, const std::vector<Element>& a, const std::vector<Element>& b) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError(GroupErrorKind::bad_table, "empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw GroupError(GroupErrorKind::bad_table, "table is not square");
    for (Element x : row)
      if (x >= n) throw GroupError(GroupErrorKind::bad_table, "table entry out of range");
  }
  FiniteGroup g;
  g.table_ = table;

  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw GroupError(GroupErrorKind::no_identity, "no two-sided identity");

  g.inverse_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    bool ok = false;
    for (Element y = 0; y < n && !ok; ++y)
      if (table[x][y] == g.identity_ && table[y][x] == g.identity_) {
        g.inverse_[x] = y;
        ok = true;
      }
    if (!ok) throw GroupError(GroupErrorKind::no_inverse, "element " + std::to_string(x) + " has no inverse");
  }

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw GroupError(GroupErrorKind::non_associative, "non-associative at (" + std::to_string(x) + "," +
                                                                std::to_string(y) + "," + std::to_string(z) + ")");

  check_subgroup(table, a, g.identity_, g.inverse_, GroupErrorKind::a_not_subgroup, "A");
  check_subgroup(table, b, g.identity_, g.inverse_, GroupErrorKind::b_not_subgroup, "B");
  g.a_ = a;
  g.b_ = b;
  g.a_pos_ = positions(a, n);
  g.b_pos_ = positions(b, n);

  // Generation by A u B.
  std::vector<char> reached(n, 0);
  std::vector<Element> queue{g.identity_};
  reached[g.identity_] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto* list : {&a, &b})
      for (Element s : *list) {
        Element y = table[queue[i]][s];
        if (!reached[y]) {
          reached[y] = 1;
          queue.push_back(y);
        }
      }
  }
  if (queue.size() != n) throw GroupError(GroupErrorKind::not_generating, "A u B is not generating");

  // Normal closure N of the commutators [a,b] = a b a^-1 b^-1.
  std::vector<char> in_n(n, 0);
  in_n[g.identity_] = 1;
  for (Element x : a)
    for (Element y : b) in_n[table[table[table[x][y]][g.inverse_[x]]][g.inverse_[y]]] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      if (!in_n[x]) continue;
      for (Element y = 0; y < n; ++y) {
        Element c = table[table[y][x]][g.inverse_[y]];
        if (!in_n[c]) in_n[c] = changed = 1;
        if (in_n[y] && !in_n[table[x][y]]) in_n[table[x][y]] = changed = 1;
      }
    }
  }
  std::vector<Element> coset(n);
  for (Element x = 0; x < n; ++x) {
    Element rep = static_cast<Element>(n);
    for (Element m = 0; m < n; ++m)
      if (in_n[m]) rep = std::min(rep, table[x][m]);
    coset[x] = rep;
  }
  std::set<Element> reps(coset.begin(), coset.end());
  g.quotient_order_ = reps.size();
  if (g.quotient_order_ != a.size() * b.size())
    throw GroupError(GroupErrorKind::quotient_mismatch,
                     "quotient by the normal closure of [A,B] has order " + std::to_string(g.quotient_order_) +
                         ", expected |A||B| = " + std::to_string(a.size() * b.size()));
  std::map<Element, std::pair<Element, Element>> by_coset;
  for (Element x : a)
    for (Element y : b)
      if (!by_coset.emplace(coset[table[x][y]], std::make_pair(x, y)).second)
        throw GroupError(GroupErrorKind::quotient_mismatch, "(a,b) -> abN is not injective");
  g.proj_a_.resize(n);
  g.proj_b_.resize(n);
  for (Element x = 0; x < n; ++x) {
    auto [pa, pb] = by_coset.at(coset[x]);
    g.proj_a_[x] = pa;
    g.proj_b_[x] = pb;
  }
  return g;
}

GroupTable cyclic_table(std::size_t n) {
  GroupTable t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = static_cast<Element>((x + y) % n);
  return t;
}

GroupTable direct_product_table(const GroupTable& left, const GroupTable& right) {
  const std::size_t m = right.size(), n = left.size() * m;
  GroupTable t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = product_element(left[x / m][y / m], right[x % m][y % m], m);
  return t;
}

GroupTable symmetric3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable t(6, std::vector<Element>(6));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[x][perms[y][i]];
      t[x][y] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

FiniteGroup klein_four_group() {
  return validate_group(direct_product_table(cyclic_table(2), cyclic_table(2)), {0, product_element(1, 0, 2)},
                        {0, product_element(0, 1, 2)});
}

FiniteGroup read_group(std::istream& in) {
  std::string word;
  std::size_t n = 0;
  GroupTable table;
  std::vector<Element> a, b;
  auto read_list = [&](std::vector<Element>& out) {
    std::string line;
    std::getline(in, line);
    std::istringstream ls(line);
    long long x;
    while (ls >> x) {
      if (x < 0) throw std::invalid_argument("group file: negative index");
      out.push_back(static_cast<Element>(x));
    }
  };
  while (in >> word) {
    if (word == "order") {
      if (!(in >> n) || n == 0) throw std::invalid_argument("group file: bad order");
    } else if (word == "table") {
      table.assign(n, std::vector<Element>(n));
      for (auto& row : table)
        for (auto& x : row) {
          long long v;
          if (!(in >> v) || v < 0) throw std::invalid_argument("group file: truncated table");
          x = static_cast<Element>(v);
        }
    } else if (word == "A") {
      read_list(a);
    } else if (word == "B") {
      read_list(b);
    } else if (!word.empty() && word[0] == '#') {
      std::string rest;
      std::getline(in, rest);
    } else {
      throw std::invalid_argument("group file: unexpected token " + word);
    }
  }
  if (table.empty()) throw std::invalid_argument("group file: missing table");
  return validate_group(table, a, b);
}

FiniteGroup load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_group(in);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << "order " << g.order() << "\ntable\n";
  for (const auto& row : g.table()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  out << 'A';
  for (Element x : g.a_list()) out << ' ' << x;
  out << "\nB";
  for (Element x : g.b_list()) out << ' ' << x;
  out << '\n';
}

Graph group_cayley_graph(const FiniteGroup& g) {
  std::set<Edge> edges;
  for (Element x = 0; x < g.order(); ++x)
    for (const auto* list : {&g.a_list(), &g.b_list()})
      for (Element s : *list) {
        if (s == g.identity()) continue;
        Element y = g.mul(x, s);
        edges.emplace(std::min(x, y), std::max(x, y));
      }
  return Graph(g.order(), {edges.begin(), edges.end()});
}

DiagonalSpec::DiagonalSpec(std::vector<DiagonalLevel> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw ValidationError("diagonal spec needs at least one level");
  if (levels_[0].k != 0) throw ValidationError("diagonal spec requires k_0 = 0");
  for (std::size_t s = 0; s + 1 < levels_.size(); ++s)
    if (levels_[s + 1].k <= 2 * levels_[s].k)
      throw ValidationError("diagonal spec requires k_{s+1} > 2 k_s at level " + std::to_string(s + 1));
  const auto& base = levels_[0].group;
  for (std::size_t s = 1; s < levels_.size(); ++s) {
    const auto& g = levels_[s].group;
    if (g.a_list().size() != base.a_list().size() || g.b_list().size() != base.b_list().size())
      throw ValidationError("level " + std::to_string(s) + ": A or B size differs from level 0");
    // The list order must define isomorphisms A -> A_s and B -> B_s.
    for (int which = 0; which < 2; ++which) {
      const auto& l0 = which ? base.b_list() : base.a_list();
      const auto& ls = which ? g.b_list() : g.a_list();
      for (std::size_t i = 0; i < l0.size(); ++i)
        for (std::size_t j = 0; j < l0.size(); ++j) {
          Element p0 = base.mul(l0[i], l0[j]);
          int m = which ? base.b_index(p0) : base.a_index(p0);
          if (g.mul(ls[i], ls[j]) != ls[static_cast<std::size_t>(m)])
            throw ValidationError("level " + std::to_string(s) + ": " + (which ? "B" : "A") +
                                  " correspondence is not an isomorphism");
        }
    }
  }
}

DiagonalSpec load_diagonal_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  auto dir = std::filesystem::path(path).parent_path();
  std::vector<DiagonalLevel> levels;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string file;
    int k;
    if (!(ls >> file >> k)) throw std::invalid_argument("diagonal spec: bad line: " + line);
    levels.push_back({load_group((dir / file).string()), k});
  }
  return DiagonalSpec(std::move(levels));
}

Element DiagonalElement::lamp(std::size_t level, int position, Element identity) const {
  const auto& l = lamps[level];
  auto it = std::lower_bound(l.begin(), l.end(), std::make_pair(position, Element{0}));
  return (it != l.end() && it->first == position) ? it->second : identity;
}

void DiagonalElement::set_lamp(std::size_t level, int position, Element value, Element identity) {
  auto& l = lamps[level];
  auto it = std::lower_bound(l.begin(), l.end(), std::make_pair(position, Element{0}));
  bool present = it != l.end() && it->first == position;
  if (value == identity) {
    if (present) l.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    l.insert(it, {position, value});
  }
}

std::size_t DiagonalElementHash::operator()(const DiagonalElement& z) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(z.cursor));
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (std::size_t s = 0; s < z.lamps.size(); ++s) {
    mix(0xabcdef00ull + s);
    for (const auto& [p, v] : z.lamps[s]) mix((static_cast<std::uint64_t>(static_cast<std::uint32_t>(p)) << 32) | v);
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const DiagonalElement& z) {
  std::ostringstream out;
  out << "(";
  for (std::size_t s = 0; s < z.lamps.size(); ++s) {
    out << (s ? "|" : "") << "[";
    for (std::size_t i = 0; i < z.lamps[s].size(); ++i)
      out << (i ? " " : "") << z.lamps[s][i].second << "@" << z.lamps[s][i].first;
    out << "]";
  }
  out << ";" << z.cursor << ")";
  return out.str();
}

DiagonalElement identity_element(const DiagonalSpec& spec) {
  DiagonalElement z;
  z.lamps.resize(spec.level_count());
  return z;
}

std::vector<Generator> generators(const DiagonalSpec& spec) {
  std::vector<Generator> out;
  const auto& g0 = spec.level(0).group;
  for (std::size_t i = 0; i < g0.a_list().size(); ++i)
    if (g0.a_list()[i] != g0.identity()) out.push_back({Generator::Kind::a, i});
  for (std::size_t i = 0; i < g0.b_list().size(); ++i)
    if (g0.b_list()[i] != g0.identity()) out.push_back({Generator::Kind::b, i});
  out.push_back({Generator::Kind::tau, 0});
  out.push_back({Generator::Kind::tau_inv, 0});
  return out;
}

DiagonalElement diagonal_apply(const DiagonalSpec& spec, const DiagonalElement& z, const Generator& gen) {
  DiagonalElement out = z;
  switch (gen.kind) {
    case Generator::Kind::tau: ++out.cursor; return out;
    case Generator::Kind::tau_inv: --out.cursor; return out;
    case Generator::Kind::a:
    case Generator::Kind::b: break;
  }
  bool is_a = gen.kind == Generator::Kind::a;
  for (std::size_t s = 0; s < spec.level_count(); ++s) {
    const auto& lv = spec.level(s);
    const auto& g = lv.group;
    int pos = is_a ? z.cursor - lv.k : z.cursor + lv.k;
    Element factor = is_a ? g.a_list().at(gen.index) : g.b_list().at(gen.index);
    out.set_lamp(s, pos, g.mul(out.lamp(s, pos, g.identity()), factor), g.identity());
  }
  return out;
}

DiagonalElement multiply(const DiagonalSpec& spec, const DiagonalElement& x, const DiagonalElement& y) {
  DiagonalElement out = x;
  out.cursor = x.cursor + y.cursor;
  for (std::size_t s = 0; s < spec.level_count(); ++s) {
    const auto& g = spec.level(s).group;
    for (const auto& [p, v] : y.lamps[s]) {
      int pos = p + x.cursor;
      out.set_lamp(s, pos, g.mul(out.lamp(s, pos, g.identity()), v), g.identity());
    }
  }
  return out;
}

DiagonalElement inverse(const DiagonalSpec& spec, const DiagonalElement& z) {
  DiagonalElement out = identity_element(spec);
  out.cursor = -z.cursor;
  for (std::size_t s = 0; s < spec.level_count(); ++s) {
    const auto& g = spec.level(s).group;
    for (const auto& [p, v] : z.lamps[s]) out.lamps[s].emplace_back(p - z.cursor, g.inv(v));
  }
  return out;
}

BallResult ball(const DiagonalSpec& spec, int radius, std::size_t budget) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  auto gens = generators(spec);
  BallResult out;
  std::unordered_map<DiagonalElement, std::size_t, DiagonalElementHash> index;
  out.elements.push_back(identity_element(spec));
  out.lengths.push_back(0);
  index.emplace(out.elements[0], 0);
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    if (out.lengths[i] >= radius) continue;
    for (const auto& gen : gens) {
      auto y = diagonal_apply(spec, out.elements[i], gen);
      if (index.count(y)) continue;
      if (out.elements.size() >= budget)
        throw BudgetExceeded("ball enumeration exceeded " + std::to_string(budget) + " elements");
      index.emplace(y, out.elements.size());
      out.elements.push_back(std::move(y));
      out.lengths.push_back(out.lengths[i] + 1);
    }
  }
  std::set<Edge> edges;
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    for (const auto& gen : gens) {
      auto it = index.find(diagonal_apply(spec, out.elements[i], gen));
      if (it == index.end() || it->second == i) continue;
      edges.emplace(std::min<Vertex>(i, it->second), std::max<Vertex>(i, it->second));
    }
  out.cayley = Graph(out.elements.size(), {edges.begin(), edges.end()});
  return out;
}

std::vector<DiagonalElement> reachable_in_interval(const DiagonalSpec& spec, int lo, int hi, std::size_t budget) {
  if (lo > 0 || hi < 0) throw std::invalid_argument("interval must contain the origin");
  auto gens = generators(spec);
  std::vector<DiagonalElement> out{identity_element(spec)};
  std::unordered_set<DiagonalElement, DiagonalElementHash> seen{out[0]};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& gen : gens) {
      if (gen.kind == Generator::Kind::tau && out[i].cursor + 1 > hi) continue;
      if (gen.kind == Generator::Kind::tau_inv && out[i].cursor - 1 < lo) continue;
      auto y = diagonal_apply(spec, out[i], gen);
      if (seen.count(y)) continue;
      if (out.size() >= budget)
        throw BudgetExceeded("interval enumeration exceeded " + std::to_string(budget) + " elements");
      seen.insert(y);
      out.push_back(std::move(y));
    }
  return out;
}

int range_of(const DiagonalSpec& spec, const DiagonalElement& z, int window, std::size_t budget) {
  const int i = z.cursor;
  if (std::abs(i) > window) throw std::invalid_argument("window exhausted: cursor lies outside the window");
  for (int d = std::abs(i); d <= 2 * window; ++d) {
    for (int m = std::max({-d, -window, i - d}); m <= std::min({0, i, window - d}); ++m) {
      auto reach = reachable_in_interval(spec, m, m + d, budget);
      if (std::find(reach.begin(), reach.end(), z) != reach.end()) return d;
    }
  }
  throw std::runtime_error("window exhausted without reaching " + to_string(z));
}

std::vector<DiagonalElement> range_ball(const DiagonalSpec& spec, int r, std::size_t budget) {
  if (r < 0) throw std::invalid_argument("range radius must be >= 0");
  std::vector<DiagonalElement> out;
  std::unordered_set<DiagonalElement, DiagonalElementHash> seen;
  for (int m = -r; m <= 0; ++m)
    for (auto& z : reachable_in_interval(spec, m, m + r, budget))
      if (seen.insert(z).second) {
        if (out.size() >= budget) throw BudgetExceeded("range ball exceeded " + std::to_string(budget));
        out.push_back(std::move(z));
      }
  return out;
}

CocycleField::CocycleField(const DiagonalSpec& spec, int j, std::size_t budget) : spec_(&spec) {
  if (j < 0 || j > 20) throw std::invalid_argument("cocycle scale index out of range");
  radius_ = 1 << j;
  for (auto& w : range_ball(spec, radius_, budget)) {
    double v = std::max(0.0, 1.0 - std::abs(static_cast<double>(w.cursor)) / radius_);
    phi_.emplace(std::move(w), v);
  }
  // ||grad phi||^2 = sum_g (phi(g) - phi(g tau))^2; A and B leave phi invariant.
  Generator tau{Generator::Kind::tau, 0}, tau_inv{Generator::Kind::tau_inv, 0};
  std::unordered_set<DiagonalElement, DiagonalElementHash> support;
  for (const auto& [w, v] : phi_) {
    support.insert(w);
    support.insert(diagonal_apply(spec, w, tau_inv));
  }
  double s = 0.0;
  for (const auto& g : support) {
    double d = phi(g) - phi(diagonal_apply(spec, g, tau));
    s += d * d;
  }
  grad_norm_ = std::sqrt(s);
}

double CocycleField::phi(const DiagonalElement& w) const {
  auto it = phi_.find(w);
  return it == phi_.end() ? 0.0 : it->second;
}

SparseVector CocycleField::value(const DiagonalElement& z) const {
  auto zinv = inverse(*spec_, z);
  std::unordered_set<DiagonalElement, DiagonalElementHash> support;
  for (const auto& [w, v] : phi_) {
    support.insert(w);
    support.insert(multiply(*spec_, w, z));
  }
  SparseVector out;
  for (const auto& h : support) {
    double d = phi(h) - phi(multiply(*spec_, h, zinv));
    if (d != 0.0) out.emplace(h, d / grad_norm_);
  }
  return out;
}

double CocycleField::norm(const DiagonalElement& z) const {
  double s = 0.0;
  for (const auto& [h, v] : value(z)) s += v * v;
  return std::sqrt(s);
}

double cocycle_norm(const DiagonalSpec& spec, int j, const DiagonalElement& z, std::size_t budget) {
  return CocycleField(spec, j, budget).norm(z);
}

double sparse_distance(const SparseVector& x, const SparseVector& y) {
  double s = 0.0;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    double d = v - (it == y.end() ? 0.0 : it->second);
    s += d * d;
  }
  for (const auto& [k, v] : y)
    if (!x.count(k)) s += v * v;
  return std::sqrt(s);
}

std::size_t LampLayout::tuple_count() const {
  std::size_t t = 1;
  for (int j = -r; j <= r; ++j) t *= order;
  return t;
}

Vertex LampLayout::index(const std::vector<Element>& coords, int cursor) const {
  std::size_t t = 0;
  for (Element x : coords) t = t * order + x;
  return static_cast<Vertex>(t * cursor_count() + static_cast<std::size_t>(cursor + r + k));
}

std::pair<std::vector<Element>, int> LampLayout::decode(Vertex v) const {
  std::size_t t = v / cursor_count();
  int cursor = static_cast<int>(v % cursor_count()) - r - k;
  std::vector<Element> coords(static_cast<std::size_t>(2 * r + 1));
  for (std::size_t i = coords.size(); i-- > 0;) {
    coords[i] = static_cast<Element>(t % order);
    t /= order;
  }
  return {coords, cursor};
}

EmbeddingReport embed_lamp_graph(const DiagonalSpec& spec, std::size_t s, int r) {
  if (s >= spec.level_count()) throw std::invalid_argument("level index out of range");
  const auto& lv = spec.level(s);
  if (2 * r > lv.k) throw std::invalid_argument("embedding requires r <= k_s / 2");
  const auto& gs = lv.group;
  LampLayout layout{gs.order(), lv.k, r};
  Graph lamp = distorted_lamp_graph(gs, lv.k, r);

  EmbeddingReport rep;
  rep.windows_disjoint = true;
  for (std::size_t t = 0; t < spec.level_count(); ++t) {
    if (t == s) continue;
    int shift = lv.k - spec.level(t).k;
    // A-window [-r + shift, r + shift] and B-window [-r - shift, r - shift].
    if (std::abs(2 * shift) <= 2 * r) rep.windows_disjoint = false;
  }

  rep.image.reserve(lamp.vertex_count());
  for (Vertex v = 0; v < lamp.vertex_count(); ++v) {
    auto [coords, cursor] = layout.decode(v);
    DiagonalElement z = identity_element(spec);
    z.cursor = cursor;
    for (std::size_t t = 0; t < spec.level_count(); ++t) {
      const auto& gt = spec.level(t).group;
      int shift = lv.k - spec.level(t).k;
      for (int j = -r; j <= r; ++j) {
        Element x = coords[static_cast<std::size_t>(j + r)];
        if (t == s) {
          z.set_lamp(t, j, x, gt.identity());
          continue;
        }
        Element xa = gt.a_list()[static_cast<std::size_t>(gs.a_index(gs.proj_a(x)))];
        Element xb = gt.b_list()[static_cast<std::size_t>(gs.b_index(gs.proj_b(x)))];
        z.set_lamp(t, j + shift, gt.mul(z.lamp(t, j + shift, gt.identity()), xa), gt.identity());
        z.set_lamp(t, j - shift, gt.mul(z.lamp(t, j - shift, gt.identity()), xb), gt.identity());
      }
    }
    rep.image.push_back(std::move(z));
  }

  std::unordered_set<DiagonalElement, DiagonalElementHash> distinct(rep.image.begin(), rep.image.end());
  rep.injective = distinct.size() == rep.image.size();
  if (!rep.injective) rep.violations.push_back("embedding is not injective");

  for (const auto& [u, v] : lamp.edges()) {
    auto [cu, iu] = layout.decode(u);
    auto [cv, iv] = layout.decode(v);
    Generator gen;
    if (iu != iv) {
      gen.kind = iv == iu + 1 ? Generator::Kind::tau : Generator::Kind::tau_inv;
      ++rep.z_edges;
    } else {
      std::size_t j = 0;
      while (cu[j] == cv[j]) ++j;
      Element step = gs.mul(gs.inv(cu[j]), cv[j]);
      int pos = static_cast<int>(j) - r;
      if (gs.in_a(step) && iu == pos + lv.k) {
        gen = {Generator::Kind::a, static_cast<std::size_t>(gs.a_index(step))};
        ++rep.a_edges;
      } else if (gs.in_b(step) && iu == pos - lv.k) {
        gen = {Generator::Kind::b, static_cast<std::size_t>(gs.b_index(step))};
        ++rep.b_edges;
      } else {
        rep.violations.push_back("unclassified edge " + std::to_string(u) + "-" + std::to_string(v));
        continue;
      }
    }
    if (!(diagonal_apply(spec, rep.image[u], gen) == rep.image[v]))
      rep.violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not a generator step");
  }
  return rep;
}

}  // namespace isoprof
