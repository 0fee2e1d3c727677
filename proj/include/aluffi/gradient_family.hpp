#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aluffi/blowup.hpp"
#include "aluffi/ideal_ops.hpp"
#include "aluffi/syzygy.hpp"

namespace aluffi {

/// f homogeneous in the "geom" block, J = (f), I = (∂f/∂x_1, ..., ∂f/∂x_n)
/// with the Euler certificate c = (x_1/d, ..., x_n/d).
struct GradientPair {
  Polynomial f;
  int degree = 0;
  std::vector<int> vars;
  PairInput pair;
};

/// Throws DomainError for zero, constant or non-homogeneous f.
GradientPair gradient_pair(const Polynomial& f);

enum class Verdict { LinearType, NotLinearType, Inconclusive };
std::string to_string(Verdict v);

struct LinearTypeCertificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  int n = 0;
  DimensionReport gradient_dim;
  /// Unset for the smooth short-circuit.
  std::optional<PolyMatrix> phi;
  std::optional<Ideal> minors1;
  std::optional<DimensionReport> minors1_dim;
};

/// Linear type of the gradient ideal through the codimension of I₁(φ):
/// with isolated singular points (dim R/I_f = 1), I_f is of linear type iff
/// codim I₁(φ) ≥ n. Smooth f short-circuits to LinearType.
LinearTypeCertificate linear_type_certificate(const GradientPair& gp);

/// One stored nonvanishing condition on the parameters.
struct Constraint {
  std::string polynomial;
  std::string note;
};

/// A displayed syzygy column: the published text and, when the printed column
/// does not annihilate the gradient, a corrected column and erratum note.
struct CatalogColumn {
  std::string label;
  /// Parameter values at which the column is stated (empty: symbolic).
  std::vector<std::pair<std::string, Rational>> at;
  std::vector<std::string> printed;
  std::vector<std::string> corrected;
  std::string erratum;

  const std::vector<std::string>& effective() const { return corrected.empty() ? printed : corrected; }
};

struct CatalogFamily {
  std::string key;
  std::string name;
  std::string singularities;
  /// Ring header, e.g. "ring: x,y,z | params: u4,u5".
  std::string header;
  std::string polynomial;
  std::vector<Constraint> constraints;
  std::vector<CatalogColumn> columns;
  /// Parameter values documented as a linear-type member, if any.
  std::vector<Rational> known_member;
  std::string provenance;
};

/// The thirteen rational-quartic families with metadata and regression columns.
const std::vector<CatalogFamily>& fixture_catalog();
const CatalogFamily* find_fixture(std::string_view key_or_name);

struct MemberReport {
  std::vector<Rational> alpha;
  Polynomial member;
  LinearTypeCertificate certificate;
  /// The family's I₁ evaluated at α, and its codimension.
  std::optional<Ideal> specialized_minors;
  std::optional<DimensionReport> specialized_dim;
  /// specialized_minors ⊆ I₁(φ_α), and whether the inclusion is strict.
  std::optional<bool> specialization_contained;
  std::optional<bool> specialization_strict;
};

struct FamilyOptions {
  std::uint64_t seed = 1;
  /// Random members to certify.
  int samples = 1;
  /// Extra members to certify.
  std::vector<std::vector<Rational>> members;
  /// Parameter polynomials that sampled members must not annihilate.
  std::vector<std::string> avoid;
};

struct FamilyReport {
  Polynomial F;
  std::vector<std::string> params;
  DimensionReport dim_IF;
  int codim_IF = 0;
  PolyMatrix phi;
  Ideal minors1;
  int codim_minors1 = 0;
  /// I₁ of the minimalized φ equals I₁ of the full basis.
  bool minimalized_agrees = true;
  /// No syzygy coordinate has a nonzero part of degree 0 in the geometric variables.
  bool syzygies_in_irrelevant = true;
  /// I₁ : m^∞; unset when its Gröbner basis exceeds the family budget.
  std::optional<Saturation> saturation;
  /// (I₁ : m^∞) ∩ k[u] = ∩_i (I₁ : x_i^∞) ∩ k[u], in the full ring.
  Ideal contraction;
  /// Codimension in k[u]; the unit ideal counts as "at least one" and sets
  /// contraction_unit.
  int contraction_codim = 0;
  bool contraction_unit = false;
  bool generic_linear_type = false;
  std::vector<MemberReport> members;
  std::vector<std::string> warnings;
  std::uint64_t seed = 0;
  /// Radical comparison of the contraction with the product of the avoided
  /// loci: each contained in the radical of the other.
  std::optional<bool> locus_in_contraction_radical;
  std::optional<bool> contraction_in_locus_radical;

  bool contraction_nonzero() const { return contraction_unit || contraction_codim >= 1; }
};

/// Degeneration analysis of a family F over the "geom" and "param" blocks.
/// Throws DomainError for zero or non-homogeneous F, or when the parameter
/// coefficients of F share a nonconstant factor.
FamilyReport analyze_family(const Polynomial& F, const FamilyOptions& options = {});

/// F at u = α, certified; `minors1` (the family's I₁) is evaluated and
/// compared when given.
MemberReport evaluate_member(const Polynomial& F, std::span<const Rational> alpha, const Ideal* minors1 = nullptr);

/// Deterministic pseudo-random parameter values avoiding V(avoid).
std::vector<Rational> sample_parameters(std::size_t count, std::span<const Polynomial> avoid, std::uint64_t seed);

/// F with the parameters as an ordered family, for a catalog entry.
Polynomial catalog_polynomial(const CatalogFamily& fam);
std::vector<Polynomial> catalog_constraints(const CatalogFamily& fam);

}  // namespace aluffi
