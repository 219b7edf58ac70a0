#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdc/errors.hpp"

namespace qdc {

// A permutation of {0..degree-1} by images.
struct Perm {
  std::vector<int> img;

  int degree() const { return static_cast<int>(img.size()); }
  static Perm id(int degree);
  // (a*b)(x) = a(b(x)): b acts first.
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  bool is_identity() const;
  int sign() const;
  bool operator==(const Perm& o) const { return img == o.img; }
  // Cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "e" for identity.
  std::string cycle_string() const;
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
};

struct ConjClass;

struct GroupOptions {
  size_t closure_bound = 10000;  // from_generators aborts beyond this
  int max_order = 200;           // larger groups rejected (configurable)
};

// A finite group as a Cayley table over element indices 0..n-1, index 0 the
// identity. Element names are display-only; permutation images are kept when
// the group was built from permutations (subgroups inherit them).
class FiniteGroup {
 public:
  // Closure of a generating set; deterministic BFS ordering from the
  // identity, right-multiplying by generators in input order.
  static FiniteGroup from_generators(int degree, const std::vector<Perm>& gens,
                                     const GroupOptions& opts = {});
  // Validates the table as a group law (associativity exhaustive for
  // n <= 64, sampled above).
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                const GroupOptions& opts = {});
  // "S3", "Z2", "Z3", "Z4", "D4". S3 uses the labelling e,u,v,w,uv,vu with
  // u=(12), v=(23), w=(13).
  static FiniteGroup builtin(const std::string& name);

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int u, int a) const { return mul(mul(u, a), inv(u)); }  // u a u^-1
  int power(int a, long k) const;
  int element_order(int a) const;
  bool is_abelian() const;
  bool is_cyclic() const;

  const std::string& name_of(int a) const { return names_[a]; }
  // Resolves an element selector: a name, a 1-based cycle expression like
  // "(12)" or "(1 2 3)" (permutation-backed groups only), or a decimal index.
  int element_by_selector(const std::string& sel) const;

  bool has_perms() const { return !perms_.empty(); }
  const Perm& perm_of(int a) const { return perms_[a]; }

  std::vector<ConjClass> conjugacy_classes() const;

  struct Subgroup {
    std::shared_ptr<const FiniteGroup> group;  // own table, own indices
    std::vector<int> embed;                    // local index -> parent index
    std::vector<int> local_of;                 // parent index -> local or -1
  };
  // Centralizer of s0, elements in ascending parent order.
  Subgroup centralizer(int s0) const;
  Subgroup subgroup(std::vector<int> elements) const;

  void set_names(std::vector<std::string> names);
  // Attaches permutation images (one per element, consistent with the table).
  void attach_perms(std::vector<Perm> perms);

 private:
  int n_ = 1;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::vector<Perm> perms_;

  void finalize(const GroupOptions& opts, bool check_assoc);
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A conjugacy class; elements sorted ascending, basepoint = least element.
struct ConjClass {
  int basepoint = 0;
  std::vector<int> elements;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int a) const;
  int pos_of(int a) const;  // position in elements; throws if absent
};

// A section g: class -> G with g_a s0 g_a^-1 = a and g_{s0} = e.
struct Section {
  int basepoint = 0;
  std::vector<int> g;  // indexed by class position

  int g_of(const ConjClass& cls, int a) const { return g[cls.pos_of(a)]; }
};

// Least-index conjugator for each class element.
Section default_section(const FiniteGroup& G, const ConjClass& cls);
// Validates the defining property and g_{s0} = e; throws input_error.
Section make_section(const FiniteGroup& G, const ConjClass& cls, int basepoint,
                     const std::vector<std::pair<int, int>>& assignments);

// zeta_a(u) = g^{-1}_{u a u^-1} u g_a as a *parent* group element; checked to
// lie in the centralizer of the basepoint (logic_error otherwise, which
// indicates a broken section).
int cocycle(const FiniteGroup& G, const ConjClass& cls, const Section& sec,
            int a, int u);

}  // namespace qdc
