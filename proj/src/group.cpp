#include "qdc/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <sstream>

namespace qdc {

Perm Perm::id(int degree) {
  Perm p;
  p.img.resize(degree);
  for (int i = 0; i < degree; ++i) p.img[i] = i;
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  assert(a.degree() == b.degree());
  Perm p;
  p.img.resize(a.degree());
  for (int x = 0; x < a.degree(); ++x) p.img[x] = a.img[b.img[x]];
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img.resize(degree());
  for (int x = 0; x < degree(); ++x) p.img[img[x]] = x;
  return p;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img[x] != x) return false;
  return true;
}

int Perm::sign() const {
  std::vector<bool> seen(degree(), false);
  int s = 1;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int len = 0, y = x;
    while (!seen[y]) {
      seen[y] = true;
      y = img[y];
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::string Perm::cycle_string() const {
  std::vector<bool> seen(degree(), false);
  std::string out;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || img[x] == x) {
      seen[x] = true;
      continue;
    }
    out += "(";
    int y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += " ";
      out += std::to_string(y + 1);
      first = false;
      y = img[y];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Perm Perm::from_cycles(int degree,
                       const std::vector<std::vector<int>>& cycles) {
  Perm p = Perm::id(degree);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1;
      int to = cyc[(i + 1) % cyc.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw input_error("cycle point out of range");
      if (p.img[from] != from) throw input_error("overlapping cycle points");
      p.img[from] = to;
    }
  }
  return p;
}

namespace {

// Builds a group from an explicit list of permutations (closed set with
// the identity first).
FiniteGroup group_from_perm_list(const std::vector<Perm>& elems,
                                 std::vector<std::string> names);

}  // namespace

void FiniteGroup::finalize(const GroupOptions& opts, bool check_assoc) {
  if (n_ > opts.max_order)
    throw input_error("group order " + std::to_string(n_) +
                      " exceeds the configured limit of " +
                      std::to_string(opts.max_order));
  // Latin-square property.
  for (int a = 0; a < n_; ++a) {
    std::vector<bool> seen_row(n_, false), seen_col(n_, false);
    for (int b = 0; b < n_; ++b) {
      int r = mul(a, b), c = mul(b, a);
      if (r < 0 || r >= n_ || c < 0 || c >= n_)
        throw input_error("Cayley table entry out of range");
      if (seen_row[r] || seen_col[c])
        throw input_error("Cayley table row/column is not a permutation");
      seen_row[r] = seen_col[c] = true;
    }
  }
  // Identity at index 0.
  for (int a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw input_error("index 0 is not an identity element");
  // Inverses.
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw input_error("element without inverse");
  }
  // Associativity: exhaustive up to order 64, sampled above.
  if (check_assoc) {
    auto check = [&](int a, int b, int c) {
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw input_error("Cayley table is not associative");
    };
    if (n_ <= 64) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          for (int c = 0; c < n_; ++c) check(a, b, c);
    } else {
      std::mt19937 rng(12345);
      std::uniform_int_distribution<int> d(0, n_ - 1);
      for (int t = 0; t < 200000; ++t) check(d(rng), d(rng), d(rng));
    }
  }
  if (names_.empty()) {
    names_.resize(n_);
    for (int a = 0; a < n_; ++a)
      names_[a] = has_perms() ? perms_[a].cycle_string() : std::to_string(a);
  }
}

FiniteGroup FiniteGroup::from_generators(int degree,
                                         const std::vector<Perm>& gens,
                                         const GroupOptions& opts) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw input_error("generator degree mismatch");
    std::vector<bool> seen(degree, false);
    for (int x : g.img) {
      if (x < 0 || x >= degree || seen[x])
        throw input_error("generator is not a permutation");
      seen[x] = true;
    }
  }
  std::vector<Perm> elems{Perm::id(degree)};
  std::vector<std::string> words{"e"};
  std::map<std::vector<int>, int> index{{elems[0].img, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Perm next = elems[head] * gens[gi];
      if (index.count(next.img)) continue;
      if (elems.size() >= opts.closure_bound)
        throw bound_error("generator closure exceeds " +
                          std::to_string(opts.closure_bound) + " elements");
      index[next.img] = static_cast<int>(elems.size());
      std::string letter(1, static_cast<char>('a' + (gi % 26)));
      words.push_back(head == 0 ? letter : words[head] + letter);
      elems.push_back(std::move(next));
    }
  }
  if (static_cast<int>(elems.size()) > opts.max_order)
    throw input_error("group order " + std::to_string(elems.size()) +
                      " exceeds the configured limit of " +
                      std::to_string(opts.max_order));
  return group_from_perm_list(elems, std::move(words));
}

namespace {

FiniteGroup group_from_perm_list(const std::vector<Perm>& elems,
                                 std::vector<std::string> names) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i].img] = static_cast<int>(i);
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find((elems[a] * elems[b]).img);
      if (it == index.end()) throw input_error("element set is not closed");
      table[a][b] = it->second;
    }
  GroupOptions opts;
  opts.max_order = n;  // internal path, already sized
  FiniteGroup g = FiniteGroup::from_table(table, opts);
  g.set_names(std::move(names));
  g.attach_perms(elems);
  return g;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    const GroupOptions& opts) {
  FiniteGroup g;
  g.n_ = static_cast<int>(table.size());
  if (g.n_ == 0) throw input_error("empty Cayley table");
  g.table_.resize(static_cast<size_t>(g.n_) * g.n_);
  for (int a = 0; a < g.n_; ++a) {
    if (static_cast<int>(table[a].size()) != g.n_)
      throw input_error("Cayley table is not square");
    for (int b = 0; b < g.n_; ++b) g.table_[static_cast<size_t>(a) * g.n_ + b] = table[a][b];
  }
  g.finalize(opts, /*check_assoc=*/true);
  return g;
}

void FiniteGroup::set_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != n_)
    throw input_error("name list length mismatch");
  names_ = std::move(names);
}

void FiniteGroup::attach_perms(std::vector<Perm> perms) {
  if (static_cast<int>(perms.size()) != n_)
    throw input_error("permutation list length mismatch");
  perms_ = std::move(perms);
}

int FiniteGroup::power(int a, long k) const {
  if (k < 0) return power(inv(a), -k);
  int r = identity();
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (int a = 0; a < n_; ++a)
    if (element_order(a) == n_) return true;
  return false;
}

int FiniteGroup::element_by_selector(const std::string& sel) const {
  if (sel.empty()) throw input_error("empty element selector");
  for (int a = 0; a < n_; ++a)
    if (names_[a] == sel) return a;
  if (sel == "e") return identity();
  if (sel[0] == '(') {
    if (!has_perms())
      throw input_error("cycle selectors need a permutation-backed group");
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < sel.size()) {
      if (std::isspace(static_cast<unsigned char>(sel[i]))) {
        ++i;
        continue;
      }
      if (sel[i] != '(') throw input_error("bad cycle selector: " + sel);
      size_t close = sel.find(')', i);
      if (close == std::string::npos)
        throw input_error("unbalanced cycle selector: " + sel);
      std::string inner = sel.substr(i + 1, close - i - 1);
      for (auto& ch : inner)
        if (ch == ',') ch = ' ';
      std::istringstream iss(inner);
      std::vector<int> cyc;
      // Accept both "(1 2)" and "(12)" for single-digit points.
      if (inner.find(' ') == std::string::npos && inner.size() > 1) {
        for (char ch : inner) {
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw input_error("bad cycle selector: " + sel);
          cyc.push_back(ch - '0');
        }
      } else {
        int x;
        while (iss >> x) cyc.push_back(x);
      }
      cycles.push_back(std::move(cyc));
      i = close + 1;
    }
    Perm p = Perm::from_cycles(perms_[0].degree(), cycles);
    for (int a = 0; a < n_; ++a)
      if (perms_[a] == p) return a;
    throw input_error("permutation not in group: " + sel);
  }
  try {
    size_t pos = 0;
    int idx = std::stoi(sel, &pos);
    if (pos == sel.size() && idx >= 0 && idx < n_) return idx;
  } catch (...) {
  }
  throw input_error("cannot resolve element selector: " + sel);
}

std::vector<ConjClass> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> done(n_, false);
  std::vector<ConjClass> classes;
  for (int a = 0; a < n_; ++a) {
    if (done[a]) continue;
    ConjClass c;
    for (int u = 0; u < n_; ++u) {
      int b = conj(u, a);
      if (!done[b]) {
        done[b] = true;
        c.elements.push_back(b);
      }
    }
    std::sort(c.elements.begin(), c.elements.end());
    c.basepoint = c.elements.front();
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(),
            [](const ConjClass& x, const ConjClass& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x.elements.front() < y.elements.front();
            });
  return classes;
}

FiniteGroup::Subgroup FiniteGroup::subgroup(std::vector<int> elements) const {
  std::sort(elements.begin(), elements.end());
  Subgroup s;
  s.embed = elements;
  s.local_of.assign(n_, -1);
  for (size_t i = 0; i < elements.size(); ++i)
    s.local_of[elements[i]] = static_cast<int>(i);
  int k = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int p = mul(elements[a], elements[b]);
      if (s.local_of[p] < 0) throw input_error("subset is not closed");
      table[a][b] = s.local_of[p];
    }
  GroupOptions opts;
  opts.max_order = n_;
  auto g = std::make_shared<FiniteGroup>(FiniteGroup::from_table(table, opts));
  std::vector<std::string> names;
  names.reserve(k);
  for (int e : elements) names.push_back(names_[e]);
  g->set_names(std::move(names));
  if (has_perms()) {
    std::vector<Perm> ps;
    ps.reserve(k);
    for (int e : elements) ps.push_back(perms_[e]);
    g->attach_perms(ps);
  }
  s.group = std::move(g);
  return s;
}

FiniteGroup::Subgroup FiniteGroup::centralizer(int s0) const {
  std::vector<int> elems;
  for (int u = 0; u < n_; ++u)
    if (mul(u, s0) == mul(s0, u)) elems.push_back(u);
  return subgroup(std::move(elems));
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
  if (name == "S3") {
    std::vector<Perm> elems = {
        Perm::id(3),
        Perm::from_cycles(3, {{1, 2}}),       // u
        Perm::from_cycles(3, {{2, 3}}),       // v
        Perm::from_cycles(3, {{1, 3}}),       // w
        Perm::from_cycles(3, {{1, 2, 3}}),    // uv
        Perm::from_cycles(3, {{1, 3, 2}}),    // vu
    };
    return group_from_perm_list(elems, {"e", "u", "v", "w", "uv", "vu"});
  }
  if (name == "Z2" || name == "Z3" || name == "Z4") {
    int n = name[1] - '0';
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i + 1;
    std::vector<Perm> elems;
    std::vector<std::string> names;
    Perm gen = Perm::from_cycles(n, {cyc});
    Perm x = Perm::id(n);
    for (int i = 0; i < n; ++i) {
      elems.push_back(x);
      names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
      x = gen * x;
    }
    return group_from_perm_list(elems, std::move(names));
  }
  if (name == "D4") {
    Perm r = Perm::from_cycles(4, {{1, 2, 3, 4}});
    Perm s = Perm::from_cycles(4, {{1, 3}});
    std::vector<Perm> elems;
    std::vector<std::string> names;
    Perm rk = Perm::id(4);
    for (int i = 0; i < 4; ++i) {
      elems.push_back(rk);
      names.push_back(i == 0 ? "e" : (i == 1 ? "r" : "r^" + std::to_string(i)));
      rk = r * rk;
    }
    rk = Perm::id(4);
    for (int i = 0; i < 4; ++i) {
      elems.push_back(rk * s);
      names.push_back(i == 0 ? "s" : (i == 1 ? "rs" : "r^" + std::to_string(i) + "s"));
      rk = r * rk;
    }
    return group_from_perm_list(elems, std::move(names));
  }
  throw input_error("unknown builtin group: " + name);
}

bool ConjClass::contains(int a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

int ConjClass::pos_of(int a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a)
    throw input_error("element not in conjugacy class");
  return static_cast<int>(it - elements.begin());
}

Section default_section(const FiniteGroup& G, const ConjClass& cls) {
  Section s;
  s.basepoint = cls.basepoint;
  s.g.resize(cls.elements.size(), -1);
  for (size_t i = 0; i < cls.elements.size(); ++i) {
    int a = cls.elements[i];
    if (a == s.basepoint) {
      s.g[i] = G.identity();
      continue;
    }
    for (int u = 0; u < G.order(); ++u)
      if (G.conj(u, s.basepoint) == a) {
        s.g[i] = u;
        break;
      }
    assert(s.g[i] >= 0);  // conjugacy class elements are conjugate
  }
  return s;
}

Section make_section(const FiniteGroup& G, const ConjClass& cls, int basepoint,
                     const std::vector<std::pair<int, int>>& assignments) {
  if (!cls.contains(basepoint))
    throw input_error("section basepoint is not in the class");
  Section s;
  s.basepoint = basepoint;
  s.g.assign(cls.elements.size(), -1);
  for (auto [a, ga] : assignments) {
    if (!cls.contains(a))
      throw input_error("section assigns an element outside the class");
    if (ga < 0 || ga >= G.order()) throw input_error("section image out of range");
    s.g[cls.pos_of(a)] = ga;
  }
  for (size_t i = 0; i < cls.elements.size(); ++i) {
    int a = cls.elements[i];
    if (s.g[i] < 0) throw input_error("section missing class element " +
                                      G.name_of(a));
    if (G.conj(s.g[i], basepoint) != a)
      throw input_error("section violates g_a s0 g_a^-1 = a at " +
                        G.name_of(a));
  }
  if (s.g[cls.pos_of(basepoint)] != G.identity())
    throw input_error("section must map the basepoint to the identity");
  return s;
}

int cocycle(const FiniteGroup& G, const ConjClass& cls, const Section& sec,
            int a, int u) {
  int uau = G.conj(u, a);
  int z = G.mul(G.mul(G.inv(sec.g_of(cls, uau)), u), sec.g_of(cls, a));
  if (G.mul(z, sec.basepoint) != G.mul(sec.basepoint, z))
    throw std::logic_error("cocycle value outside the centralizer (broken section)");
  return z;
}

}  // namespace qdc
