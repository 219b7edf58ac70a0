#include "qdc/rep.hpp"

#include <algorithm>
#include <cassert>

namespace qdc {

std::string IrrepSpec::display() const {
  switch (family) {
    case Family::trivial:
      return "trivial";
    case Family::sign_sn:
      return "sign_Sn";
    case Family::standard2_s3:
      return "standard2_S3";
    case Family::cyclic:
      return "cyclic(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Family::dihedral:
      return "dihedral(" + std::to_string(n) + "," + std::to_string(k) + ")";
  }
  return "?";
}

IrrepSpec IrrepSpec::parse(const std::string& text) {
  IrrepSpec s;
  if (text == "trivial") {
    s.family = Family::trivial;
    return s;
  }
  if (text == "sign_Sn") {
    s.family = Family::sign_sn;
    return s;
  }
  if (text == "standard2_S3") {
    s.family = Family::standard2_s3;
    return s;
  }
  auto parse_two = [&](const std::string& head) -> bool {
    if (text.rfind(head + "(", 0) != 0 || text.back() != ')') return false;
    std::string inner = text.substr(head.size() + 1,
                                    text.size() - head.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string::npos) return false;
    try {
      s.n = std::stol(inner.substr(0, comma));
      s.k = std::stol(inner.substr(comma + 1));
    } catch (...) {
      return false;
    }
    return true;
  };
  if (parse_two("cyclic")) {
    s.family = Family::cyclic;
    if (s.n < 1) throw input_error("cyclic(n,k) needs n >= 1");
    return s;
  }
  if (parse_two("dihedral")) {
    s.family = Family::dihedral;
    if (s.n < 3) throw input_error("dihedral(n,k) needs n >= 3");
    return s;
  }
  throw input_error("unknown irrep family: " + text);
}

Representation Representation::finish(GroupPtr group,
                                      std::vector<CycMatrix> mats,
                                      bool require_irreducible,
                                      std::string name) {
  const FiniteGroup& G = *group;
  const int n = G.order();
  assert(static_cast<int>(mats.size()) == n);
  const long d = mats[0].rows();

  Representation rep;
  rep.group_ = std::move(group);
  rep.dim_ = static_cast<int>(d);
  rep.name_ = std::move(name);

  for (int a = 0; a < n; ++a)
    if (mats[a].rows() != d || mats[a].cols() != d)
      throw input_error("representation matrices must be square of equal size");
  if (mats[G.identity()] != CycMatrix::identity(d))
    throw input_error("representation does not map the identity to I");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mats[G.mul(a, b)] != mats[a] * mats[b])
        throw input_error("matrices do not define a homomorphism at (" +
                          G.name_of(a) + ", " + G.name_of(b) + ")");

  rep.trivial_ = true;
  for (int a = 0; a < n && rep.trivial_; ++a)
    rep.trivial_ = (mats[a] == CycMatrix::identity(d));

  long cond = 1;
  for (int a = 0; a < n; ++a)
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j)
        cond = lcm_long(cond, mats[a].at(i, j).conductor());
  rep.conductor_ = cond;

  rep.mats_ = std::move(mats);
  CycNum norm;
  {
    auto chi = rep.character();
    for (int a = 0; a < n; ++a) norm += chi[G.inv(a)] * chi[a];
  }
  rep.irreducible_ = (norm == CycNum(n));
  if (require_irreducible && !rep.irreducible_)
    throw input_error("representation is reducible (character norm " +
                      norm.to_string() + " != " + std::to_string(n) + ")");
  return rep;
}

std::vector<CycNum> Representation::character() const {
  std::vector<CycNum> chi(group_->order());
  for (int a = 0; a < group_->order(); ++a) {
    CycNum t;
    for (int i = 0; i < dim_; ++i) t += mats_[a].at(i, i);
    chi[a] = t;
  }
  return chi;
}

namespace {

CycMatrix scalar1(const CycNum& v) {
  CycMatrix m(1, 1);
  m.at(0, 0) = v;
  return m;
}

// Least-index element of the given order, or -1.
int element_of_order(const FiniteGroup& G, int order) {
  for (int a = 0; a < G.order(); ++a)
    if (G.element_order(a) == order) return a;
  return -1;
}

}  // namespace

Representation Representation::builtin(GroupPtr group, const IrrepSpec& spec) {
  const FiniteGroup& G = *group;
  const int n = G.order();
  using F = IrrepSpec::Family;
  switch (spec.family) {
    case F::trivial: {
      std::vector<CycMatrix> mats(n, CycMatrix::identity(1));
      return finish(std::move(group), std::move(mats), true, spec.display());
    }
    case F::sign_sn: {
      if (!G.has_perms())
        throw input_error("sign_Sn needs a permutation-backed group");
      std::vector<CycMatrix> mats;
      mats.reserve(n);
      for (int a = 0; a < n; ++a)
        mats.push_back(scalar1(CycNum(G.perm_of(a).sign())));
      return finish(std::move(group), std::move(mats), true, spec.display());
    }
    case F::cyclic: {
      if (n != spec.n)
        throw input_error("cyclic(n,k): group order is not n");
      int gen = element_of_order(G, n);
      if (gen < 0) throw input_error("cyclic(n,k): group is not cyclic");
      std::vector<CycMatrix> mats(n);
      int x = G.identity();
      for (int j = 0; j < n; ++j) {
        mats[x] = scalar1(CycNum::zeta(n, (spec.k % n) * j));
        x = G.mul(x, gen);
      }
      return finish(std::move(group), std::move(mats), true, spec.display());
    }
    case F::standard2_s3: {
      if (n != 6 || G.is_abelian())
        throw input_error("standard2_S3 needs a group isomorphic to S3");
      int r = element_of_order(G, 3);
      int t = element_of_order(G, 2);
      CycMatrix mr(2, 2), mt(2, 2);
      mr.at(0, 0) = CycNum::zeta(3);
      mr.at(1, 1) = CycNum::zeta(3, 2);
      mt.at(0, 1) = CycNum(1);
      mt.at(1, 0) = CycNum(1);
      std::vector<CycMatrix> mats(n);
      for (int a = 0; a < n; ++a) {
        bool found = false;
        CycMatrix mrp = CycMatrix::identity(2);
        int rp = G.identity();
        for (int i = 0; i < 3 && !found; ++i) {
          if (rp == a) {
            mats[a] = mrp;
            found = true;
          } else if (G.mul(rp, t) == a) {
            mats[a] = mrp * mt;
            found = true;
          }
          rp = G.mul(rp, r);
          mrp = mrp * mr;
        }
        if (!found) throw input_error("standard2_S3: element decomposition failed");
      }
      return finish(std::move(group), std::move(mats), true, spec.display());
    }
    case F::dihedral: {
      if (n != 2 * spec.n)
        throw input_error("dihedral(n,k): group order is not 2n");
      int r = element_of_order(G, static_cast<int>(spec.n));
      if (r < 0) throw input_error("dihedral(n,k): no rotation of order n");
      int t = -1;
      for (int a = 0; a < n && t < 0; ++a) {
        if (G.element_order(a) != 2) continue;
        bool in_rot = false;
        int rp = G.identity();
        for (long i = 0; i < spec.n; ++i) {
          if (rp == a) in_rot = true;
          rp = G.mul(rp, r);
        }
        if (!in_rot) t = a;
      }
      if (t < 0) throw input_error("dihedral(n,k): no reflection found");
      CycMatrix mr(2, 2), mt(2, 2);
      mr.at(0, 0) = CycNum::zeta(spec.n, spec.k);
      mr.at(1, 1) = CycNum::zeta(spec.n, -spec.k);
      mt.at(0, 1) = CycNum(1);
      mt.at(1, 0) = CycNum(1);
      std::vector<CycMatrix> mats(n);
      std::vector<bool> have(n, false);
      CycMatrix mrp = CycMatrix::identity(2);
      int rp = G.identity();
      for (long i = 0; i < spec.n; ++i) {
        mats[rp] = mrp;
        have[rp] = true;
        int a = G.mul(rp, t);
        mats[a] = mrp * mt;
        have[a] = true;
        rp = G.mul(rp, r);
        mrp = mrp * mr;
      }
      for (bool h : have)
        if (!h) throw input_error("dihedral(n,k): element decomposition failed");
      return finish(std::move(group), std::move(mats), true, spec.display());
    }
  }
  throw input_error("unknown irrep family");
}

Representation Representation::from_generator_matrices(
    GroupPtr group, const std::map<int, CycMatrix>& gen_mats,
    bool require_irreducible, std::string display_name) {
  const FiniteGroup& G = *group;
  if (gen_mats.empty()) throw input_error("no generator matrices supplied");
  const long d = gen_mats.begin()->second.rows();
  std::vector<CycMatrix> mats(G.order());
  std::vector<bool> have(G.order(), false);
  mats[G.identity()] = CycMatrix::identity(d);
  have[G.identity()] = true;
  // BFS closure over the supplied generators.
  std::vector<int> queue{G.identity()};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (const auto& [g, m] : gen_mats) {
      if (g < 0 || g >= G.order())
        throw input_error("generator index out of range in representation file");
      int y = G.mul(x, g);
      if (have[y]) continue;
      mats[y] = mats[x] * m;
      have[y] = true;
      queue.push_back(y);
    }
  }
  for (bool h : have)
    if (!h)
      throw input_error(
          "representation file matrices do not cover a generating set");
  return Representation::finish(std::move(group), std::move(mats),
                                require_irreducible, std::move(display_name));
}

Representation Representation::from_matrices(GroupPtr group,
                                             std::vector<CycMatrix> mats,
                                             bool require_irreducible,
                                             std::string display_name) {
  if (static_cast<int>(mats.size()) != group->order())
    throw input_error("need one matrix per group element");
  return finish(std::move(group), std::move(mats), require_irreducible,
                std::move(display_name));
}

GroupAlgebraElement ga_convolve(const FiniteGroup& G,
                                const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b) {
  GroupAlgebraElement out(G.order());
  for (int x = 0; x < G.order(); ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < G.order(); ++y) {
      if (!b[y].is_zero()) out[G.mul(x, y)] += a[x] * b[y];
    }
  }
  return out;
}

bool CentralIdempotent::is_idempotent() const {
  return ga_convolve(*group, coeffs, coeffs) == coeffs;
}

bool CentralIdempotent::is_central() const {
  const FiniteGroup& G = *group;
  for (int u = 0; u < G.order(); ++u) {
    GroupAlgebraElement du(G.order());
    du[u] = CycNum(1);
    if (ga_convolve(G, du, coeffs) != ga_convolve(G, coeffs, du)) return false;
  }
  return true;
}

long CentralIdempotent::block_dimension() const {
  const FiniteGroup& G = *group;
  const int n = G.order();
  // Columns are e0 * u over the group-algebra basis.
  CycMatrix m(n, n);
  for (int u = 0; u < n; ++u) {
    GroupAlgebraElement du(n);
    du[u] = CycNum(1);
    auto col = ga_convolve(G, coeffs, du);
    for (int x = 0; x < n; ++x) m.at(x, u) = col[x];
  }
  return mat_rank(m);
}

CycNum CentralIdempotent::counit() const {
  CycNum s;
  for (const auto& c : coeffs) s += c;
  return s;
}

CentralIdempotent central_idempotent(const Representation& rep) {
  if (!rep.is_irreducible())
    throw input_error("central idempotent needs an irreducible representation");
  const FiniteGroup& G = rep.group();
  auto chi = rep.character();
  CentralIdempotent e;
  e.group = rep.group_ptr();
  e.coeffs.resize(G.order());
  Rational scale(rep.dim(), G.order());
  for (int u = 0; u < G.order(); ++u)
    e.coeffs[u] = CycNum(scale) * chi[G.inv(u)];
  return e;
}

std::vector<Representation> builtin_catalog(GroupPtr group) {
  const FiniteGroup& G = *group;
  std::vector<Representation> out;
  if (G.is_cyclic()) {
    for (long k = 0; k < G.order(); ++k) {
      IrrepSpec s;
      s.family = IrrepSpec::Family::cyclic;
      s.n = G.order();
      s.k = k;
      out.push_back(Representation::builtin(group, s));
    }
    return out;
  }
  if (G.order() == 6 && !G.is_abelian()) {
    IrrepSpec triv;
    triv.family = IrrepSpec::Family::trivial;
    out.push_back(Representation::builtin(group, triv));
    if (G.has_perms()) {
      IrrepSpec sgn;
      sgn.family = IrrepSpec::Family::sign_sn;
      out.push_back(Representation::builtin(group, sgn));
    } else {
      // The nontrivial linear character: -1 exactly on the order-2 elements.
      std::vector<CycMatrix> mats;
      for (int a = 0; a < 6; ++a) {
        CycMatrix m(1, 1);
        m.at(0, 0) = CycNum(G.element_order(a) == 2 ? -1 : 1);
        mats.push_back(std::move(m));
      }
      out.push_back(Representation::from_matrices(group, std::move(mats), true,
                                                  "sign_Sn"));
    }
    IrrepSpec std2;
    std2.family = IrrepSpec::Family::standard2_s3;
    out.push_back(Representation::builtin(group, std2));
    return out;
  }
  throw coverage_error("no built-in irrep catalog for a group of order " +
                       std::to_string(G.order()) +
                       "; supply representation files");
}

}  // namespace qdc
