#pragma once

// Built-in quantum groups.

#include <string>
#include <vector>

#include "cqg/finite.hpp"
#include "cqg/hopf.hpp"
#include "cqg/linalg.hpp"

namespace cqg {

/// SU_q(2): generators a, g with stars, fundamental corep
/// u = [[a, -q g*], [g, a*]].
AlgebraPtr su_q_2();

/// SU_q(n) on generators u{p}{q}, with unitarity and quantum determinant
/// relations, interreduced into a rewriting system.
AlgebraPtr su_q_n(int n);

/// Sign-weighted permutation coefficient E(k) = (-q)^{inversions(k)}, zero
/// when k (1-based entries) is not a permutation.
Scalar quantum_determinant_coefficient(const std::vector<int>& k);

/// Universal unitary quantum group A_u(Q); throws SingularMatrix when Q is
/// not invertible.
AlgebraPtr a_u(const ScalarMatrix& q_matrix);

/// Orients a list of relations into rewrite rules: relations are reduced by
/// the rules found so far, then row-reduced level by level (by length) with
/// the largest word of each row as its left-hand side. Star images of the
/// relations are included.
std::vector<Rule> orient_relations(const std::vector<Symbol>& symbols, const std::vector<FreePoly>& relations);

// ---- finite groups

struct CayleyTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[g][h] = index of gh
  int identity = 0;
  std::vector<int> inverse;
};

/// Checks closure, associativity, identity and inverses; throws NotAGroup.
CayleyTable make_group(std::vector<std::string> names, std::vector<std::vector<int>> table);
/// CSV: header row "*,e,a,..." then one row per element "g,gh1,gh2,...".
CayleyTable parse_cayley_csv(const std::string& text);
std::string cayley_to_csv(const CayleyTable& g);

/// Matrix group generated by unitary (or merely invertible) matrices over
/// Q(i); elements are named by shortest words in the generator names.
struct MatrixGroup {
  CayleyTable group;
  std::vector<ScalarMatrix> elements;
};
MatrixGroup generate_matrix_group(const std::vector<std::pair<std::string, ScalarMatrix>>& generators);

/// Shipped finite groups: z2, z4, s3, d4, q8.
MatrixGroup finite_group(const std::string& name);
std::vector<std::string> finite_group_names();

/// C(G) in the delta basis. When `rep` is given it becomes the declared
/// corep "u" of the algebra view (entries sum_g rep(g)_pq delta_g).
FiniteQuantumGroup c_of_group(const CayleyTable& g, const std::vector<ScalarMatrix>* rep = nullptr,
                              const std::string& name = "");
/// C[G] in the group-element basis; every non-identity element is a
/// one-dimensional declared corep.
FiniteQuantumGroup group_algebra(const CayleyTable& g, const std::string& name = "");

/// Names accepted by load_preset: su_q_2, su_q_3, a_u_2 (Q = I),
/// c_z2, c_z4, c_s3, c_d4, c_q8, cg_z2, cg_z4, cg_s3, cg_d4, cg_q8.
std::vector<std::string> preset_names();
AlgebraPtr load_preset(const std::string& name);
/// Finite presets only; throws NotInRegistry for the q-families.
FiniteQuantumGroup load_finite_preset(const std::string& name);
bool is_finite_preset(const std::string& name);

}  // namespace cqg
