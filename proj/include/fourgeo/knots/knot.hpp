#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fourgeo/algebra/laurent.hpp"
#include "fourgeo/calculus/manifold.hpp"

namespace fourgeo {

enum class KnotKind { unknot, torus, twist };

/// Largest genus whose Alexander polynomial is expanded term by term. Above
/// it a knot keeps its descriptor and genus but no polynomial.
inline constexpr long kMaxExpandedGenus = 1L << 16;

struct Knot {
  KnotKind kind = KnotKind::unknot;
  Scalar p;          // torus(p, q)
  Scalar q;
  long twists = 0;   // twist(m)
  Scalar genus;
  /// Symmetric normal form; empty when the genus is symbolic or too large.
  std::optional<LaurentPoly> alexander;
  bool fibered = true;

  std::string describe() const;
  /// Requires an expanded Alexander polynomial.
  bool monic() const;
};

/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) by exact division, normalized.
LaurentPoly torus_alexander(long p, long q);

/// Recenter so that exponents are symmetric about 0 and make the top
/// coefficient positive. Throws if the exponent span is odd.
LaurentPoly normalize_alexander(const LaurentPoly& a);

Knot unknot();
/// Throws unless p, q >= 2 and gcd(p, q) = 1.
Knot torus_knot(long p, long q);
/// torus(2, 2g + 1), or the unknot for g = 0. A symbolic g, or `expand`
/// false, yields the descriptor and genus without a polynomial.
Knot find_fibered_knot_of_genus(const Scalar& g, bool expand = true);
/// Twist knot with Alexander polynomial m t - (2m + 1) + m t^-1. Fibered only
/// for m = 1 (the figure eight).
Knot twist_knot(long m);
/// twist(m) for m = 2 .. count + 1: non-fibered, non-monic, pairwise distinct.
std::vector<Knot> nonfibered_nonmonic_family(int count);

struct KnotSurgeryOptions {
  /// Surgery torus; empty selects the first available one.
  std::string torus;
  /// Marked surface that passes once through the surgery region and gains the
  /// knot's Seifert surface: F' = C # Sigma_g.
  std::string graft;
};

/// Fintushel-Stern knot surgery along a square-zero torus. (e, sigma) are
/// unchanged; the ledger is multiplied by Delta_K(t^2); a symplectic record
/// stays symplectic only for fibered K.
ManifoldRecord knot_surgery(const ManifoldRecord& m, const Knot& k,
                            const KnotSurgeryOptions& options = {});

enum class SymplecticClass { symplectic, non_symplectic, undetermined };

struct FamilyEntry {
  Knot knot;
  LaurentPoly sw;
  SymplecticClass cls = SymplecticClass::undetermined;
  bool trivial = false;
};

struct FamilyReport {
  LaurentPoly base_sw;
  std::vector<FamilyEntry> entries;
  std::size_t collisions = 0;
  bool pairwise_distinct = true;
  /// Every entry with non-trivial Delta has a ledger different from the base.
  bool differ_from_base = true;
  std::vector<std::string> notes;

  std::size_t count(SymplecticClass cls) const;
};

/// Knot surgery on `base` with each knot along the same torus, then compare
/// the resulting ledgers exactly.
FamilyReport distinguish_family(const ManifoldRecord& base, std::span<const Knot> knots,
                                const std::string& torus = {});

std::string to_string(SymplecticClass cls);

}  // namespace fourgeo
