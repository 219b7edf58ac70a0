#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdc/group.hpp"
#include "qdc/matrix.hpp"

namespace qdc {

// Which built-in irrep family to construct.
struct IrrepSpec {
  enum class Family { cyclic, sign_sn, trivial, standard2_s3, dihedral };
  Family family = Family::trivial;
  long n = 0, k = 0;  // parameters of cyclic(n,k) / dihedral(n,k)

  std::string display() const;
  // Parses "trivial", "sign_Sn", "standard2_S3", "cyclic(n,k)",
  // "dihedral(n,k)".
  static IrrepSpec parse(const std::string& text);
};

// A matrix representation of a finite group over a cyclotomic field. The
// homomorphism property is verified exhaustively at construction; the
// irreducibility certificate is the character norm sum_u chi(u^-1)chi(u) =
// |G|.
class Representation {
 public:
  static Representation builtin(GroupPtr group, const IrrepSpec& spec);
  // Matrices for a generating subset, extended multiplicatively.
  static Representation from_generator_matrices(
      GroupPtr group, const std::map<int, CycMatrix>& gen_mats,
      bool require_irreducible, std::string display_name = "file");
  // One matrix per element, verified like every other constructor.
  static Representation from_matrices(GroupPtr group,
                                      std::vector<CycMatrix> mats,
                                      bool require_irreducible,
                                      std::string display_name);

  const FiniteGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int dim() const { return dim_; }
  // Conductor of the field generated by all matrix entries (normalised).
  long conductor() const { return conductor_; }
  bool is_trivial() const { return trivial_; }
  bool is_irreducible() const { return irreducible_; }
  const std::string& display_name() const { return name_; }
  const CycMatrix& matrix(int g) const { return mats_[g]; }

  // chi(g) = tr rho(g); constant on conjugacy classes of the group.
  std::vector<CycNum> character() const;

 private:
  GroupPtr group_;
  int dim_ = 1;
  long conductor_ = 1;
  bool trivial_ = false;
  bool irreducible_ = false;
  std::string name_;
  std::vector<CycMatrix> mats_;

  Representation() = default;
  static Representation finish(GroupPtr group, std::vector<CycMatrix> mats,
                               bool require_irreducible, std::string name);
};

// An element of the group algebra kG, dense over element indices.
using GroupAlgebraElement = std::vector<CycNum>;

GroupAlgebraElement ga_convolve(const FiniteGroup& G,
                                const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b);

// e0 = (dim V / |G|) sum_u tr_V(u^-1) u, the centrally primitive idempotent
// of the block of V.
struct CentralIdempotent {
  GroupPtr group;
  GroupAlgebraElement coeffs;

  bool is_idempotent() const;
  bool is_central() const;
  // dim(e0 kG) as an exact rank.
  long block_dimension() const;
  // Counit sum of coefficients: 1 exactly for the trivial block.
  CycNum counit() const;
};

CentralIdempotent central_idempotent(const Representation& rep);

// All irreducibles of a centralizer covered by built-in families: cyclic
// groups of any order and groups isomorphic to S3. Throws coverage_error
// otherwise.
std::vector<Representation> builtin_catalog(GroupPtr group);

}  // namespace qdc
