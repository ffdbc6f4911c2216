#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "regkt/envelope.hpp"
#include "regkt/fingroup.hpp"
#include "regkt/freeword.hpp"
#include "regkt/zlattice.hpp"

namespace regkt {

struct MultiplierOptions {
  std::size_t cap = 60;        ///< largest |F| accepted
  std::size_t quick_cap = 24;  ///< largest |F| for universal_extension without long_running
  bool long_running = false;
};

/**
 * Data of U_{N,F} / ([J_{N,F},U_F] + [U_{N,F},J_F]) in the coordinates Z^E of
 * J_F^ab (one column per pair (g,h), g,h != 1).
 *
 *   relations_a   (rho_h - 1) c for c in the conjugated core, h in gens(F)
 *   relations_b   (rho_n - 1) e_r for n in gens(N), r in E
 *   complement    e_{x,y} for x,y nontrivial section representatives
 *
 * The complement rows split off Z^E / Lambda, so the cokernel of
 * kernel_relations (a, b, complement in that order) is the central kernel A.
 * The section n -> u_n gives cocycle(m,n) = e_{m,n}.
 */
struct CanonicalExtensionData {
  std::shared_ptr<const RelativeEnvelope> renv;
  std::size_t columns = 0;
  IntMatrix relations_a, relations_b, complement;
  IntMatrix kernel_relations;
  AbelianGroupStructure kernel_structure;

  const FiniteGroup& group() const { return renv->group(); }
  const Subgroup& normal() const { return renv->normal(); }
  SparseRow cocycle(Elem m, Elem n) const { return renv->envelope().pair_vector(m, n); }
};

/// One factor u_by [u_n, u_f]^sign u_by^-1 of a numerator certificate
/// (by = 0: no conjugation).
struct CommutatorFactor {
  Elem n = 0, f = 0;
  int sign = 1;
  Elem by = 0;
};

/// A numerator generator: a word of J_{N,F} written as a product of
/// conjugated commutators [u_n, u_f], together with its Z^E coordinates.
struct NumeratorCertificate {
  Word word;
  std::vector<CommutatorFactor> factors;
  SparseRow coords;
};

/**
 * [U_{N,F},U_F] modulo [J_{N,F},U_F] is the smallest subgroup containing the
 * commutators [u_n, u_x] (n in N, x in F) and closed under conjugation by
 * every u_y. It maps onto [N,F]; its intersection with the kernel is spanned
 * by the Schreier generators tree[m] c tree[m c]^-1 together with
 * u_y tree[m] u_y^-1 tree[y m y^-1]^-1. Modulo the full denominator the
 * action factors through F, so x over gens(F) suffices and the second family
 * is redundant; without [U_{N,F},J_F] neither shortcut holds.
 */
struct NumeratorData {
  Subgroup image;                  ///< [N,F]
  std::vector<Word> tree;          ///< tree[m]: product of commutators evaluating to m
  std::vector<std::vector<CommutatorFactor>> tree_factors;
  std::vector<NumeratorCertificate> generators;
  IntMatrix matrix;                ///< coords of the generators, deduplicated
};

struct KJ2Result {
  AbelianGroupStructure structure;
  std::vector<NumeratorCertificate> generator_certificates;
  std::shared_ptr<const Subquotient> subquotient;  ///< numerator over the denominator
  std::shared_ptr<const CanonicalExtensionData> extension;
  bool extended = false;

  const FiniteGroup& group() const { return extension->group(); }
  const Subgroup& normal() const { return extension->normal(); }
};

CanonicalExtensionData canonical_extension(const FiniteGroup& f, const Subgroup& n,
                                           const MultiplierOptions& opt = {});
/// `extended` selects the generators needed modulo [J_{N,F},U_F] alone; the
/// default family suffices modulo the full denominator.
NumeratorData numerator(const CanonicalExtensionData& data, bool extended = false);

/// Relative Schur multiplier (numerator over relations a + b).
KJ2Result kj2(const FiniteGroup& f, const Subgroup& n, const MultiplierOptions& opt = {});
/// Same numerator, relations a only.
KJ2Result kj2_extended(const FiniteGroup& f, const Subgroup& n, const MultiplierOptions& opt = {});

/// Z^E(F) -> Z^E(F'), e_{g,h} -> e_{phi g, phi h} (0 if either image is 1).
SparseRow map_pair_vector(const Envelope& src, const Envelope& dst, const GroupHom& phi,
                          const SparseRow& v);

/// Matrix of the induced map on components: row i is the image of component i
/// of `src` in the components of `dst`. Throws NotHomomorphism unless phi is a
/// homomorphism carrying N into N'.
DenseMatrix kj2_map(const KJ2Result& src, const KJ2Result& dst, const GroupHom& phi);

/// True when the component map phi hits every component of a group with the
/// given orders.
bool is_surjective_map(const DenseMatrix& phi, const std::vector<Integer>& target_orders);

/// Component map from the extended group onto the plain one for the same pair.
DenseMatrix extended_to_plain(const KJ2Result& extended, const KJ2Result& plain);

/// First triple (m,n,p) of N where cocycle(m,n)+cocycle(mn,p) differs from
/// cocycle(n,p)+cocycle(m,np) in A; nullopt when the identity holds everywhere.
/// `cocycle` may be a claimed table (e.g. from a certificate).
std::optional<std::array<Elem, 3>> cocycle_defect(
    const CanonicalExtensionData& data,
    const std::function<SparseRow(Elem, Elem)>& cocycle);

struct UniversalExtension {
  FiniteGroup group;             ///< elements (m, t), index pos(m) * |K| + t
  Subgroup kernel;
  GroupHom projection;           ///< onto N as elements of F
  AbelianGroupStructure kernel_structure;
  std::vector<Integer> kernel_moduli;
  bool central = false;
  bool kernel_in_commutator = false;  ///< kernel inside [G~, F]
};

/// The universal F-central extension of a full pair (N, F) with F perfect,
/// realized as H = [U_{N,F},U_F] / R. Throws NotPerfect, NotFull, InfiniteKernel.
UniversalExtension universal_extension(const FiniteGroup& f, const Subgroup& n,
                                       const MultiplierOptions& opt = {});

/// K_2(N,F) = kj2([N,F], F), F perfect.
AbelianGroupStructure k2(const FiniteGroup& f, const Subgroup& n, const MultiplierOptions& opt = {});

/// Higher K^J_n are not computed; throws Unsupported for n >= 3.
AbelianGroupStructure kjn(int n, const FiniteGroup& f, const Subgroup& sub,
                          const MultiplierOptions& opt = {});

}  // namespace regkt
